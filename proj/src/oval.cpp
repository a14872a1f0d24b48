#include "cpoly/oval.hpp"

#include <algorithm>
#include <cmath>

namespace cpoly {

Oval oval_from_profile(const ArcSignature& sig, const Tolerance& t) {
  if (sig.corners >= kTwoPi - t.eps_ang)
    throw Error(ErrorCode::no_oval_exists,
                "profile is identically 2*pi (polygon class)");
  if (sig.buckets.empty())
    throw Error(ErrorCode::no_oval_exists, "signature has no arc content");
  const double total = sig.total_turning();
  if (std::abs(total - kTwoPi) > 1e-6)
    throw Error(ErrorCode::bad_input, "signature does not total 2*pi");

  Oval o;
  o.sig = sig;
  o.sig.seg_total = 0.0;
  o.corner_half = sig.corners / 2.0;
  o.quarter.reserve(sig.buckets.size());
  for (const auto& b : sig.buckets) o.quarter.push_back({b.radius, b.sweep / 4.0});
  o.quarter_turn = sig.arc_total() / 4.0;

  // Half boundary A -> B -> A': ascending radii to the smooth axis, then
  // descending back, the top pair merged.  The full chain is two copies of
  // the half plus the two corners; it closes because each half turns by
  // exactly pi.
  std::vector<ChainElement> half;
  const std::size_t n = o.quarter.size();
  for (std::size_t i = 0; i < n; ++i)
    half.push_back(Arc{o.quarter[i].radius,
                       o.quarter[i].sweep * (i + 1 == n ? 2.0 : 1.0)});
  for (std::size_t i = n - 1; i-- > 0;)
    half.push_back(Arc{o.quarter[i].radius, o.quarter[i].sweep});

  ConvexChain c;
  c.start = {0, 0};
  c.heading = kPi - o.quarter_turn;
  for (int copy = 0; copy < 2; ++copy) {
    for (const auto& e : half) c.elements.push_back(e);
    if (o.corner_half > t.eps_ang) c.elements.push_back(Corner{o.corner_half});
  }

  // Center at the origin: the symmetry center is the midpoint of A and A'.
  const auto poses = element_poses(c);
  const Point a_prime = poses[half.size()].point;
  const Point center = (c.start + a_prime) / 2.0;
  c.start -= center;

  Oval out = o;
  out.chain = normalized(c, t);
  require_valid(out.chain, t);
  out.axis_a_half = norm(c.start);
  // B = end of the ascending quarter
  Pose p{c.start, c.heading};
  for (std::size_t i = 0; i < n; ++i)
    p = advance_pose(p, ChainElement{Arc{o.quarter[i].radius, o.quarter[i].sweep}});
  out.axis_b_half = norm(p.point);
  return out;
}

bool is_oval(const ConvexChain& c, const Tolerance& t) {
  require_valid(c, t);
  const ArcSignature sig = signature(c, t);
  if (sig.seg_total > t.eps_len * chain_scale(c)) return false;
  if (sig.corners >= kTwoPi - t.eps_ang) return false;  // polygon class
  const Oval v = oval_from_profile(sig, t);
  return congruent(c, v.chain, t).has_value();
}

namespace {

struct ArcRun {
  double radius;
  double sweep;
};

bool arc_runs_match(const std::vector<ArcRun>& a, const std::vector<ArcRun>& b,
                    const Tolerance& t, double scale) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i].radius - b[i].radius) > t.eps_len * scale ||
        std::abs(a[i].sweep - b[i].sweep) > 16 * t.eps_ang)
      return false;
  return true;
}

// One half A -> A' of an oval reads r1..rn..r1 with strictly increasing
// radii to the single peak.
bool half_is_oval_quarter_pair(const std::vector<ArcRun>& h,
                               const Tolerance& t, double scale) {
  const std::size_t m = h.size();
  if (m % 2 == 0) return false;
  for (std::size_t i = 0; i < m / 2; ++i) {
    if (std::abs(h[i].radius - h[m - 1 - i].radius) > t.eps_len * scale)
      return false;
    if (std::abs(h[i].sweep - h[m - 1 - i].sweep) > 16 * t.eps_ang)
      return false;
    if (!(h[i].radius < h[i + 1].radius - t.eps_len * scale)) return false;
  }
  return true;
}

}  // namespace

bool is_oval_structural(const ConvexChain& raw, const Tolerance& t) {
  require_valid(raw, t);
  const ConvexChain c = normalized(raw, t);
  const double scale = chain_scale(c);

  std::vector<std::size_t> corner_idx;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (is_seg(c.elements[i])) return false;  // clause: no segments
    if (is_corner(c.elements[i])) corner_idx.push_back(i);
  }

  const std::size_t n = c.elements.size();
  std::vector<ArcRun> half1, half2;
  if (corner_idx.size() == 2) {
    const auto& k1 = std::get<Corner>(c.elements[corner_idx[0]]);
    const auto& k2 = std::get<Corner>(c.elements[corner_idx[1]]);
    if (std::abs(k1.turn - k2.turn) > t.eps_ang) return false;
    for (std::size_t i = (corner_idx[0] + 1) % n; i != corner_idx[1];
         i = (i + 1) % n)
      half1.push_back({std::get<Arc>(c.elements[i]).radius,
                       std::get<Arc>(c.elements[i]).sweep});
    for (std::size_t i = (corner_idx[1] + 1) % n; i != corner_idx[0];
         i = (i + 1) % n)
      half2.push_back({std::get<Arc>(c.elements[i]).radius,
                       std::get<Arc>(c.elements[i]).sweep});
  } else if (corner_idx.empty()) {
    if (n == 1) return true;  // circle
    // locate the two minimal-radius arcs; the axis passes through their
    // midpoints
    double rmin = std::numeric_limits<double>::infinity();
    for (const auto& e : c.elements)
      rmin = std::min(rmin, std::get<Arc>(e).radius);
    std::vector<std::size_t> mins;
    for (std::size_t i = 0; i < n; ++i)
      if (std::get<Arc>(c.elements[i]).radius <= rmin + t.eps_len * scale)
        mins.push_back(i);
    if (mins.size() != 2) return false;
    auto collect = [&](std::size_t from, std::size_t to,
                       std::vector<ArcRun>& out) {
      const auto& fa = std::get<Arc>(c.elements[from]);
      out.push_back({fa.radius, fa.sweep / 2.0});
      for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
        const auto& a = std::get<Arc>(c.elements[i]);
        out.push_back({a.radius, a.sweep});
      }
      const auto& ta = std::get<Arc>(c.elements[to]);
      out.push_back({ta.radius, ta.sweep / 2.0});
    };
    collect(mins[0], mins[1], half1);
    collect(mins[1], mins[0], half2);
  } else {
    return false;  // corners must come as one symmetric pair
  }

  return arc_runs_match(half1, half2, t, scale) &&
         half_is_oval_quarter_pair(half1, t, scale);
}

bool uniquely_composed(const ConvexChain& c, const Tolerance& t) {
  return is_oval(c, t);
}

ConvexChain r_offset(const ConvexChain& c, double r, const Tolerance& t) {
  require_valid(c, t);
  if (!(r > 0)) throw Error(ErrorCode::bad_input, "offset radius must be positive");
  ConvexChain out;
  out.start = c.start + r * unit(c.heading - kPi / 2);
  out.heading = c.heading;
  out.elements.reserve(c.elements.size());
  for (const auto& e : c.elements) {
    if (auto* s = std::get_if<Seg>(&e)) {
      out.elements.push_back(Seg{s->len});
    } else if (auto* a = std::get_if<Arc>(&e)) {
      out.elements.push_back(Arc{a->radius + r, a->sweep});
    } else {
      out.elements.push_back(Arc{r, std::get<Corner>(e).turn});
    }
  }
  return normalized(out, t);
}

ConvexChain inner_polygon(const ConvexChain& c, double r, const Tolerance& t) {
  require_valid(c, t);
  if (!(r > 0)) throw Error(ErrorCode::bad_input, "inset radius must be positive");
  const double scale = chain_scale(c);
  for (const auto& e : c.elements)
    if (auto* a = std::get_if<Arc>(&e))
      if (a->radius < r - t.eps_len * scale)
        throw Error(ErrorCode::radius_too_small,
                    "arc radius " + std::to_string(a->radius) +
                        " below inset " + std::to_string(r));

  ConvexChain out;
  out.start = c.start - r * unit(c.heading - kPi / 2);
  out.heading = c.heading;
  for (const auto& e : c.elements) {
    if (auto* s = std::get_if<Seg>(&e)) {
      out.elements.push_back(Seg{s->len});
    } else if (auto* a = std::get_if<Arc>(&e)) {
      if (a->radius - r <= t.eps_len * scale)
        out.elements.push_back(Corner{a->sweep});
      else
        out.elements.push_back(Arc{a->radius - r, a->sweep});
    } else {
      out.elements.push_back(std::get<Corner>(e));
    }
  }
  out = normalized(out, t);

  // Cores that collapse to a point or a segment are reported, with the
  // residual area as a witness.
  double wit = 0.0;
  bool degenerate = false;
  for (const auto& e : out.elements)
    if (auto* k = std::get_if<Corner>(&e))
      if (k->turn >= kPi - t.eps_ang) degenerate = true;
  if (!degenerate) {
    const auto rep = validate(out, t);
    if (!rep.ok()) degenerate = true;
    else {
      wit = area(out);
      if (wit <= t.eps_area * scale * scale) degenerate = true;
    }
  }
  if (degenerate)
    throw Error(ErrorCode::degenerate_core,
                "core area ~" + std::to_string(wit));
  return out;
}

}  // namespace cpoly
