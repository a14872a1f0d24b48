#include "cpoly/chain.hpp"

#include <algorithm>
#include <sstream>

namespace cpoly {

double element_turning(const ChainElement& e) {
  if (auto* a = std::get_if<Arc>(&e)) return a->sweep;
  if (auto* c = std::get_if<Corner>(&e)) return c->turn;
  return 0.0;
}

double element_length(const ChainElement& e) {
  if (auto* s = std::get_if<Seg>(&e)) return s->len;
  if (auto* a = std::get_if<Arc>(&e)) return a->radius * a->sweep;
  return 0.0;
}

Pose advance_pose(const Pose& p, const ChainElement& e) {
  if (auto* s = std::get_if<Seg>(&e)) {
    return {p.point + s->len * unit(p.heading), p.heading};
  }
  if (auto* a = std::get_if<Arc>(&e)) {
    const Point center = p.point + a->radius * unit(p.heading + kPi / 2);
    const double a0 = p.heading - kPi / 2;
    return {center + a->radius * unit(a0 + a->sweep), p.heading + a->sweep};
  }
  const auto& c = std::get<Corner>(e);
  return {p.point, p.heading + c.turn};
}

std::vector<Pose> element_poses(const ConvexChain& c) {
  std::vector<Pose> out;
  out.reserve(c.elements.size() + 1);
  Pose p{c.start, c.heading};
  out.push_back(p);
  for (const auto& e : c.elements) {
    p = advance_pose(p, e);
    out.push_back(p);
  }
  return out;
}

double perimeter(const ConvexChain& c) {
  double s = 0.0;
  for (const auto& e : c.elements) s += element_length(e);
  return s;
}

double total_turning(const ConvexChain& c) {
  double s = 0.0;
  for (const auto& e : c.elements) s += element_turning(e);
  return s;
}

double chain_scale(const ConvexChain& c) {
  return std::max(1.0, perimeter(c) / kPi);
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].what << " (residual " << violations[i].residual << ")";
  }
  return os.str();
}

ValidationReport validate(const ConvexChain& c, const Tolerance& t) {
  ValidationReport rep;
  auto flag = [&](const std::string& what, double residual) {
    rep.violations.push_back({what, residual});
  };

  if (c.elements.empty()) {
    flag("empty element list", 0.0);
    return rep;
  }
  if (!std::isfinite(c.start.x) || !std::isfinite(c.start.y) ||
      !std::isfinite(c.heading)) {
    flag("non-finite start pose", 0.0);
    return rep;
  }

  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const auto& e = c.elements[i];
    const std::string at = " at element " + std::to_string(i);
    if (auto* s = std::get_if<Seg>(&e)) {
      if (!(s->len > t.eps_len)) flag("segment length not positive" + at, s->len);
    } else if (auto* a = std::get_if<Arc>(&e)) {
      if (!(a->radius > t.eps_len)) flag("arc radius not positive" + at, a->radius);
      if (!(a->sweep > t.eps_ang)) flag("arc sweep not positive" + at, a->sweep);
      if (a->sweep > kTwoPi + t.eps_ang) flag("arc sweep exceeds full turn" + at, a->sweep - kTwoPi);
    } else {
      const auto& k = std::get<Corner>(e);
      if (!(k.turn > t.eps_ang)) flag("corner turn not positive" + at, k.turn);
      if (!(k.turn < kPi - t.eps_ang)) flag("corner turn reaches pi (cusp)" + at, k.turn - kPi);
    }
  }

  const std::size_t n = c.elements.size();
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = c.elements[i];
      const auto& b = c.elements[(i + 1) % n];
      if (is_corner(a) && is_corner(b))
        flag("consecutive corners not merged at " + std::to_string(i), 0.0);
      if (is_seg(a) && is_seg(b))
        flag("consecutive segments with no turn at " + std::to_string(i), 0.0);
    }
  }

  const double turn_residual = total_turning(c) - kTwoPi;
  if (std::abs(turn_residual) > t.eps_ang)
    flag("total turning differs from 2*pi", turn_residual);

  const auto poses = element_poses(c);
  const double per = perimeter(c);
  const double closure = dist(poses.back().point, c.start);
  if (closure > t.eps_len * std::max(1.0, per))
    flag("endpoint does not return to start", closure);

  return rep;
}

void require_valid(const ConvexChain& c, const Tolerance& t) {
  auto rep = validate(c, t);
  if (!rep.ok()) throw Error(ErrorCode::invalid_chain, rep.summary());
}

namespace {

bool merge_pair(ChainElement& a, const ChainElement& b, const Tolerance& t) {
  if (is_corner(a) && is_corner(b)) {
    std::get<Corner>(a).turn += std::get<Corner>(b).turn;
    return true;
  }
  if (is_seg(a) && is_seg(b)) {
    std::get<Seg>(a).len += std::get<Seg>(b).len;
    return true;
  }
  if (is_arc(a) && is_arc(b)) {
    auto& aa = std::get<Arc>(a);
    const auto& ab = std::get<Arc>(b);
    if (std::abs(aa.radius - ab.radius) <= t.eps_len) {
      // Tangent-continuous equal-radius arcs are concentric.
      aa.radius = (aa.radius * aa.sweep + ab.radius * ab.sweep) /
                  (aa.sweep + ab.sweep);
      aa.sweep += ab.sweep;
      return true;
    }
  }
  return false;
}

}  // namespace

ConvexChain normalized(const ConvexChain& c, const Tolerance& t) {
  if (c.elements.size() <= 1) return c;
  const auto poses = element_poses(c);

  std::vector<ChainElement> ring;
  std::vector<Pose> starts;
  ring.reserve(c.elements.size());
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (!ring.empty() && merge_pair(ring.back(), c.elements[i], t)) continue;
    ring.push_back(c.elements[i]);
    starts.push_back(poses[i]);
  }
  // Wrap-around merges move the start pose to the last unmerged boundary.
  while (ring.size() > 1 && merge_pair(ring.back(), ring.front(), t)) {
    // back absorbed front: rotate so the merged element leads
    std::rotate(ring.begin(), ring.end() - 1, ring.end());
    std::rotate(starts.begin(), starts.end() - 1, starts.end());
    ring.erase(ring.begin() + 1);
    starts.erase(starts.begin() + 1);
  }

  ConvexChain out;
  out.start = starts.front().point;
  out.heading = starts.front().heading;
  out.elements = std::move(ring);
  // keep heading in [0, 2*pi) for cleanliness
  out.heading = norm_angle(out.heading);
  return out;
}

ConvexChain transformed(const ConvexChain& c, const Isometry& m) {
  ConvexChain base = m.reflect ? mirrored(c) : c;
  // Remaining rigid part: rotation + translation.
  Isometry rigid{m.rotation, m.translation, false};
  ConvexChain out = base;
  out.start = rigid(base.start);
  out.heading = norm_angle(base.heading + m.rotation);
  return out;
}

ConvexChain mirrored(const ConvexChain& c) {
  ConvexChain out;
  out.start = {c.start.x, -c.start.y};
  out.heading = norm_angle(-c.heading - kPi);
  out.elements.assign(c.elements.rbegin(), c.elements.rend());
  return out;
}

}  // namespace cpoly
