#include "cpoly/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cpoly/shapes.hpp"

namespace cpoly {

std::string SignatureDelta::describe() const {
  std::ostringstream os;
  os << "segments " << (seg_removed >= 0 ? "-" : "+") << std::abs(seg_removed)
     << ", corners " << (corner_delta >= 0 ? "+" : "") << corner_delta;
  for (const auto& b : arc_added)
    os << ", arc r=" << b.radius << " " << (b.sweep >= 0 ? "+" : "")
       << b.sweep;
  return os.str();
}

namespace {

bool element_params_equal(const ChainElement& a, const ChainElement& b,
                          const Tolerance& t, double scale) {
  if (a.index() != b.index()) return false;
  if (auto* s = std::get_if<Seg>(&a))
    return std::abs(s->len - std::get<Seg>(b).len) <= t.eps_len * scale;
  if (auto* r = std::get_if<Arc>(&a)) {
    const auto& o = std::get<Arc>(b);
    return std::abs(r->radius - o.radius) <= t.eps_len * scale &&
           std::abs(r->sweep - o.sweep) <= 16 * t.eps_ang;
  }
  return std::abs(std::get<Corner>(a).turn - std::get<Corner>(b).turn) <=
         16 * t.eps_ang;
}

// Rebuild a chain from a start pose and an element ring, dropping empty
// entries and merging adjacencies.
ConvexChain rebuild(Pose start, std::vector<ChainElement> ring,
                    const Tolerance& t) {
  ConvexChain c;
  c.start = start.point;
  c.heading = norm_angle(start.heading);
  c.elements = std::move(ring);
  return normalized(c, t);
}

}  // namespace

std::optional<Point> central_symmetry(const ConvexChain& raw,
                                      const Tolerance& t) {
  require_valid(raw, t);
  const ConvexChain c = normalized(raw, t);
  const std::size_t n = c.elements.size();
  const double scale = chain_scale(c);

  if (n == 1) {
    // a single full arc is the circle
    const auto& a = std::get<Arc>(c.elements[0]);
    const Pose p{c.start, c.heading};
    return p.point + a.radius * unit(p.heading + kPi / 2);
  }
  if (n % 2 != 0) return std::nullopt;

  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i)
    if (!element_params_equal(c.elements[i], c.elements[i + h], t, scale))
      return std::nullopt;

  const auto poses = element_poses(c);
  Point acc{0, 0};
  for (std::size_t i = 0; i < h; ++i)
    acc += (poses[i].point + poses[i + h].point) / 2.0;
  const Point center = acc / double(h);
  for (std::size_t i = 0; i < h; ++i) {
    const Point mid = (poses[i].point + poses[i + h].point) / 2.0;
    if (dist(mid, center) > 1e4 * t.eps_len * scale) return std::nullopt;
  }
  return center;
}

std::vector<SegmentPair> segment_pairs(const ConvexChain& raw,
                                       const Tolerance& t) {
  const ConvexChain c = normalized(raw, t);
  std::vector<SegmentPair> out;
  if (!central_symmetry(c, t)) return out;
  const std::size_t h = c.elements.size() / 2;
  for (std::size_t i = 0; i < h; ++i)
    if (is_seg(c.elements[i])) out.push_back({i, i + h});
  return out;
}

std::vector<CornerPair> corner_pairs(const ConvexChain& raw,
                                     const Tolerance& t) {
  const ConvexChain c = normalized(raw, t);
  std::vector<CornerPair> out;
  if (!central_symmetry(c, t)) return out;
  const std::size_t h = c.elements.size() / 2;
  for (std::size_t i = 0; i < h; ++i)
    if (is_corner(c.elements[i])) out.push_back({i, i + h});
  return out;
}

SurgeryResult excise_parallelogram(const ConvexChain& raw, SegmentPair pair,
                                   const Tolerance& t) {
  const ConvexChain c = normalized(raw, t);
  if (!central_symmetry(c, t))
    throw Error(ErrorCode::not_centrally_symmetric, "excise needs symmetry");
  const std::size_t n = c.elements.size();
  const std::size_t h = n / 2;
  if (pair.first >= n || pair.second != pair.first + h ||
      !is_seg(c.elements[pair.first]) || !is_seg(c.elements[pair.second]))
    throw Error(ErrorCode::not_a_pair, "indices are not a symmetric segment pair");

  const auto poses = element_poses(c);
  const Point a = poses[pair.first].point;
  const Point b = poses[pair.first + 1].point;
  const Point a2 = poses[pair.second].point;
  const Point b2 = poses[pair.second + 1].point;

  std::vector<ChainElement> ring;
  Pose start = poses[pair.first + 1];  // lump 1 begins at B
  for (std::size_t i = pair.first + 1; i != pair.first;
       i = (i + 1) % n) {
    if (i == pair.second) continue;
    ring.push_back(c.elements[i]);
  }

  // a corner that reaches pi after the merge means the figure collapsed
  ConvexChain res;
  res.start = start.point;
  res.heading = norm_angle(start.heading);
  res.elements = ring;
  res = normalized(res, t);
  for (const auto& e : res.elements)
    if (auto* k = std::get_if<Corner>(&e))
      if (k->turn >= kPi - t.eps_ang)
        throw Error(ErrorCode::degenerate_result,
                    "excision collapses the figure to zero width");
  require_valid(res, t);

  SurgeryResult out;
  out.figure = res;
  out.area_delta = -std::abs(cross(b - a, a2 - b));
  out.signature_delta.seg_removed =
      std::get<Seg>(c.elements[pair.first]).len * 2.0;
  out.cut_chords = {{b, a2}, {b2, a}};
  return out;
}

SurgeryResult hinge_shift(const ConvexChain& raw,
                          std::pair<CornerPair, CornerPair> corners_ab,
                          const Tolerance& t) {
  const ConvexChain c = normalized(raw, t);
  if (!central_symmetry(c, t))
    throw Error(ErrorCode::not_centrally_symmetric, "hinge needs symmetry");
  const std::size_t n = c.elements.size();
  const std::size_t h = n / 2;
  auto check_pair = [&](const CornerPair& p) {
    const std::size_t f = p.first % n;
    if (p.second % n != (f + h) % n || !is_corner(c.elements[f]) ||
        !is_corner(c.elements[p.second % n]))
      throw Error(ErrorCode::not_corners, "indices are not a symmetric corner pair");
  };
  check_pair(corners_ab.first);
  check_pair(corners_ab.second);
  std::size_t ia = corners_ab.first.first % n;
  std::size_t ib = corners_ab.second.first % n;
  if (ia == ib) throw Error(ErrorCode::not_corners, "pairs must differ");

  const auto poses = element_poses(c);
  std::string notes;
  // Quadrilateral A B A' B' in boundary order; the hinge rotates around the
  // vertex whose quadrilateral angle is obtuse.
  auto quad_angle_at = [&](std::size_t self, std::size_t prev_pt,
                           std::size_t next_pt) {
    const Point p = poses[self].point;
    const Vec2 u1 = poses[prev_pt].point - p;
    const Vec2 u2 = poses[next_pt].point - p;
    return std::acos(std::clamp(dot(u1, u2) / (norm(u1) * norm(u2)), -1.0, 1.0));
  };
  const double ang_b = quad_angle_at(ib, ia, (ia + h) % n);
  const double ang_a = quad_angle_at(ia, (ib + h) % n, ib);
  if (ang_b < kPi / 2 - t.eps_ang) {
    if (ang_a >= kPi / 2 - t.eps_ang) {
      std::swap(ia, ib);
      notes += "roles swapped: stated pair sits at the acute angle; ";
    } else {
      throw Error(ErrorCode::not_corners, "no obtuse parallelogram angle");
    }
  } else if (std::abs(ang_b - kPi / 2) <= t.eps_ang &&
             std::abs(ang_a - kPi / 2) <= t.eps_ang) {
    notes += "rectangle case: right-angle tie broken toward the given pair; ";
  }
  const double obtuse = std::max(quad_angle_at(ib, ia, (ia + h) % n), kPi / 2);

  const double turn_b = std::get<Corner>(c.elements[ib]).turn;
  const double turn_a = std::get<Corner>(c.elements[ia]).turn;
  const double max_theta = kPi - obtuse - t.eps_ang;
  double theta = turn_b;
  if (theta > max_theta)
    throw Error(ErrorCode::fold_over,
                "full straightening infeasible; max feasible theta " +
                    std::to_string(std::max(0.0, max_theta)));
  if (turn_a + theta >= kPi - t.eps_ang)
    throw Error(ErrorCode::fold_over,
                "receiving corner would reach pi; max feasible theta " +
                    std::to_string(kPi - t.eps_ang - turn_a));

  std::vector<ChainElement> ring = c.elements;
  auto set_turn = [&](std::size_t i, double v) {
    std::get<Corner>(ring[i]).turn = v;
  };
  set_turn(ia, turn_a + theta);
  set_turn((ia + h) % n, turn_a + theta);
  set_turn(ib, turn_b - theta);
  set_turn((ib + h) % n, turn_b - theta);
  // zero corners drop out
  std::vector<ChainElement> kept;
  std::size_t start_idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto* k = std::get_if<Corner>(&ring[i]))
      if (k->turn <= t.eps_ang) continue;
    if (kept.empty()) start_idx = i;
    kept.push_back(ring[i]);
  }
  ConvexChain res = rebuild(poses[start_idx], kept, t);
  require_valid(res, t);

  const Point pa = poses[ia].point, pb = poses[ib].point;
  const Point pa2 = poses[(ia + h) % n].point, pb2 = poses[(ib + h) % n].point;
  const double lab = dist(pa, pb), lba2 = dist(pb, pa2);

  SurgeryResult out;
  out.figure = res;
  out.area_delta = lab * lba2 * (std::sin(obtuse + theta) - std::sin(obtuse));
  out.signature_delta.corner_delta = 0.0;  // total corner turn conserved
  out.cut_chords = {{pa, pb}, {pb, pa2}, {pa2, pb2}, {pb2, pa}};
  out.notes = notes + "theta " + std::to_string(theta);
  return out;
}

// ---- balance points ---------------------------------------------------------

BalancedPair balance_points(const ConvexChain& c, const Tolerance& t) {
  require_valid(c, t);
  const SupportMap m = support_map(c);  // locators index c's own elements

  // Cumulative arc sweep W(nu) along the normal circle from nu_base; slope 1
  // inside arc normal-intervals, 0 across corners and segments.
  struct Node { double nu; double w; bool in_arc; };
  std::vector<Node> nodes;
  double w = 0.0;
  for (const auto& f : m.features) {
    nodes.push_back({f.nu0, w, f.kind == SupportFeature::arc_feat});
    if (f.kind == SupportFeature::arc_feat) w += f.nu1 - f.nu0;
  }
  const double omega = w;
  const double nu_base = m.nu_base;
  auto W = [&](double x) {
    // x in cumulative coordinates >= nu_base
    double extra = 0.0;
    while (x >= nu_base + kTwoPi) { x -= kTwoPi; extra += omega; }
    std::size_t lo = 0, hi = nodes.size();
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (nodes[mid].nu <= x) lo = mid;
      else hi = mid;
    }
    double v = nodes[lo].w;
    if (nodes[lo].in_arc) v += x - nodes[lo].nu;
    return v + extra;
  };
  auto f = [&](double phi) {  // alpha - beta
    return 2.0 * (W(phi + kPi) - W(phi)) - omega;
  };

  if (omega <= t.eps_ang)
    throw Error(ErrorCode::bad_input, "figure has no arc content to balance");

  // breakpoints of f over [nu_base, nu_base + pi)
  std::vector<double> cuts;
  for (const auto& nd : nodes) {
    const double r = std::fmod(nd.nu - nu_base, kPi);
    cuts.push_back(nu_base + (r < 0 ? r + kPi : r));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(cuts.front() + kPi);

  double phi_star = cuts.front();
  bool found = false;
  for (std::size_t i = 0; i + 1 < cuts.size() && !found; ++i) {
    const double f0 = f(cuts[i]), f1 = f(cuts[i + 1]);
    if (std::abs(f0) <= t.eps_ang) { phi_star = cuts[i]; found = true; }
    else if (f0 * f1 < 0) {
      // f is linear between breakpoints
      const double s = f0 / (f0 - f1);
      phi_star = cuts[i] + s * (cuts[i + 1] - cuts[i]);
      found = true;
    }
  }
  if (!found) {
    // f(phi + pi) = -f(phi): a zero must exist; fall back to a fine scan
    for (int i = 0; i < 1 << 20 && !found; ++i) {
      const double p0 = nu_base + kPi * i / double(1 << 20);
      if (std::abs(f(p0)) <= 1e-12) { phi_star = p0; found = true; }
    }
  }
  if (!found)
    throw Error(ErrorCode::bad_input, "balance sweep failed to find a root");

  auto locator_at = [&](double phi) -> BoundaryPoint {
    const SupportFeature& ft = m.at(phi);
    const double x = nu_base + norm_angle(phi - nu_base);
    double tt = 0.5;
    if (ft.kind == SupportFeature::arc_feat || ft.kind == SupportFeature::vertex) {
      const double span = ft.nu1 - ft.nu0;
      tt = span > 0 ? std::clamp((x - ft.nu0) / span, 0.0, 1.0) : 0.5;
    }
    return locate(c, ft.element, tt);
  };

  BalancedPair out;
  out.a = locator_at(phi_star);
  out.b = locator_at(phi_star + kPi);
  out.alpha = W(phi_star + kPi) - W(phi_star);
  out.beta = omega - out.alpha;
  out.support_normal = norm_angle(phi_star);
  return out;
}

std::pair<ConvexChain, ConvexChain> double_figure(const ConvexChain& raw,
                                                  const BoundaryPoint& a,
                                                  const BoundaryPoint& b,
                                                  const Tolerance& t) {
  require_valid(raw, t);
  const ConvexChain& c = raw;
  // Need phi in cone(a) with phi + pi in cone(b) (mod 2*pi): intersect
  // [0, span_a] with the shifted b-cone on the axis relative to a0.
  const auto [a0, a1] = normal_cone(c, a);
  const auto [b0, b1] = normal_cone(c, b);
  const double span_a = a1 - a0;
  const double span_b = b1 - b0;
  double best_lo = 1.0, best_hi = 0.0;
  const double s = norm_angle(b0 - kPi - a0);
  for (double shift : {s, s - kTwoPi}) {
    const double lo = std::max(0.0, shift);
    const double hi = std::min(span_a, shift + span_b);
    if (hi >= lo - t.eps_ang && (best_hi < best_lo || hi - lo > best_hi - best_lo)) {
      best_lo = lo;
      best_hi = hi;
    }
  }
  if (best_hi < best_lo - t.eps_ang)
    throw Error(ErrorCode::not_antipodal,
                "supporting lines are not parallel at the cut points");
  const double phi = a0 + std::clamp((best_lo + best_hi) / 2.0, 0.0, span_a);

  // Corner cuts must split the turn consistently with the support normal.
  auto adjust = [&](const BoundaryPoint& p, double normal) -> BoundaryPoint {
    if (is_corner(c.elements[p.element])) {
      const auto cone = normal_cone(c, p);
      const double span = cone.second - cone.first;
      const double tt =
          span > 0
              ? std::clamp(norm_angle(normal - cone.first) / span, 0.0, 1.0)
              : 0.5;
      return locate(c, p.element, tt);
    }
    return p;
  };
  const BoundaryPoint pa = adjust(a, phi);
  const BoundaryPoint pb = adjust(b, phi + kPi);

  auto make_doubled = [&](const BoundaryPoint& from, const BoundaryPoint& to,
                          double tangent) -> ConvexChain {
    std::vector<ChainElement> half = boundary_between(c, from, to, t);
    std::vector<ChainElement> ring = half;
    ring.insert(ring.end(), half.begin(), half.end());
    ConvexChain out;
    out.start = from.point;
    out.heading = norm_angle(tangent);
    out.elements = std::move(ring);
    out = normalized(out, t);
    require_valid(out, t);
    return out;
  };

  ConvexChain minus = make_doubled(pa, pb, phi + kPi / 2);
  ConvexChain plus = make_doubled(pb, pa, phi + 3 * kPi / 2);
  return {minus, plus};
}

SurgeryResult round_corners(const ConvexChain& raw, const Tolerance& t) {
  const ConvexChain c = normalized(raw, t);
  if (!central_symmetry(c, t))
    throw Error(ErrorCode::not_centrally_symmetric, "rounding needs symmetry");
  std::vector<std::size_t> corners;
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    if (is_corner(c.elements[i])) corners.push_back(i);
  if (corners.size() != 2)
    throw Error(ErrorCode::wrong_corner_count,
                "need exactly one corner pair, found " +
                    std::to_string(corners.size()));
  const ArcSignature sig = signature(c, t);
  if (!sig.has_arcs()) throw Error(ErrorCode::no_arcs, "no positive radius on the boundary");
  const double r1 = sig.buckets.front().radius;
  const double alpha = std::get<Corner>(c.elements[corners[0]]).turn;

  const double before = area(c);
  std::vector<ChainElement> ring = c.elements;
  for (const auto i : corners) ring[i] = Arc{r1, std::get<Corner>(ring[i]).turn};
  ConvexChain res = rebuild({c.start, c.heading}, ring, t);
  require_valid(res, t);

  SurgeryResult out;
  out.figure = res;
  out.area_delta = area(res) - before;
  out.signature_delta.corner_delta = -2 * alpha;
  out.signature_delta.arc_added = {{r1, 2 * alpha}};
  out.notes = "fillet radius " + std::to_string(r1);
  return out;
}

// ---- quarter reassembly -----------------------------------------------------

ConvexChain quarter_reassemble(const Oval& v_minus, const Oval& v_plus,
                               const Tolerance& t) {
  const double dm = diameter(v_minus.chain);
  const double dp = diameter(v_plus.chain);
  const double scale = std::max(1.0, std::max(dm, dp));
  if (std::abs(dm - dp) > 1e3 * t.eps_len * scale)
    throw Error(ErrorCode::diameter_mismatch,
                "oval diameters differ by " + std::to_string(dm - dp));

  // Per oval: quarter arcs from the glue-axis end, with the tangent angles
  // at the quarter's ends in a frame where the glue axis is +x.
  struct PieceInfo {
    std::vector<ChainElement> arcs;  // traversed from the glue end
    double eta0, eta1;               // start/end tangents in the glue frame
  };
  auto piece = [&](const Oval& v) -> PieceInfo {
    PieceInfo p;
    const bool glue_on_a =
        std::abs(2 * v.axis_a_half - diameter(v.chain)) <=
        std::abs(2 * v.axis_b_half - diameter(v.chain));
    const double q = v.quarter_turn;
    if (glue_on_a) {
      for (const auto& b : v.quarter) p.arcs.push_back(Arc{b.radius, b.sweep});
      p.eta0 = kPi - q;
      p.eta1 = kPi;
    } else {
      for (auto it = v.quarter.rbegin(); it != v.quarter.rend(); ++it)
        p.arcs.push_back(Arc{it->radius, it->sweep});
      p.eta0 = kPi / 2;
      p.eta1 = kPi / 2 + q;
    }
    return p;
  };
  const PieceInfo pm = piece(v_minus);
  const PieceInfo pp = piece(v_plus);

  // Half boundary of the assembly: the mirrored-reversed plus-quarter into
  // the glue point, a junction corner, then the minus-quarter out of it.
  const double junction = pm.eta0 + pp.eta0 - kPi;
  const double seam = norm_angle(-pp.eta1 - pm.eta1);
  if (junction < -t.eps_ang || junction >= kPi - t.eps_ang)
    throw Error(ErrorCode::degenerate, "assembly junction turn out of range");
  if (seam >= kPi - t.eps_ang && seam < kTwoPi - t.eps_ang)
    throw Error(ErrorCode::degenerate, "assembly seam turn out of range");

  std::vector<ChainElement> half;
  for (auto it = pp.arcs.rbegin(); it != pp.arcs.rend(); ++it)
    half.push_back(*it);
  if (junction > t.eps_ang) half.push_back(Corner{junction});
  for (const auto& e : pm.arcs) half.push_back(e);
  const double seam_turn = norm_angle(seam);
  if (seam_turn > t.eps_ang && seam_turn < kPi) half.push_back(Corner{seam_turn});

  ConvexChain n;
  n.start = {0, 0};
  n.heading = norm_angle(kPi - pp.eta1);
  n.elements = half;
  n.elements.insert(n.elements.end(), half.begin(), half.end());
  n = normalized(n, t);
  require_valid(n, t);
  return n;
}

// ---- generators --------------------------------------------------------------

namespace {

double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// portable in-place shuffle (std::shuffle's sequence is
// implementation-defined)
template <class V>
void shuffle_vec(V& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[std::size_t(u01(rng) * double(i)) % i]);
}

// Random split of a budget into k parts, each at least lo; exact sum.
std::vector<double> random_split(std::mt19937_64& rng, double budget, int k,
                                 double lo) {
  std::vector<double> parts(k, lo);
  double rest = budget - lo * k;
  std::vector<double> w(k);
  double tw = 0.0;
  for (auto& x : w) { x = 0.1 + u01(rng); tw += x; }
  double used = 0.0;
  for (int i = 0; i + 1 < k; ++i) {
    parts[i] += rest * w[i] / tw;
    used += rest * w[i] / tw;
  }
  parts[k - 1] += rest - used;
  return parts;
}

}  // namespace

ConvexChain random_centrally_symmetric(const ArcSignature& sig,
                                       std::uint64_t seed, const Tolerance& t) {
  if (std::abs(sig.total_turning() - kTwoPi) > 1e-6)
    throw Error(ErrorCode::infeasible_signature, "signature does not total 2*pi");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  const double min_arc = 4e-3, min_turn = 4e-3, min_len = 4e-3;
  const double corner_cap = kPi - 0.05;

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ChainElement> atoms;
    // halve every bucket, split into a few random parts
    for (const auto& b : sig.buckets) {
      const double budget = b.sweep / 2.0;
      const int kmax = std::max(1, int(budget / min_arc));
      const int k = 1 + int(u01(rng) * std::min(3, kmax));
      for (double s : random_split(rng, budget, std::min(k, kmax), min_arc))
        atoms.push_back(Arc{b.radius, s});
    }
    if (sig.corners > t.eps_ang) {
      const double budget = sig.corners / 2.0;
      int k = 1 + int(u01(rng) * 3);
      while (budget / k >= corner_cap) ++k;
      if (budget < min_turn * k) k = std::max(1, int(budget / min_turn));
      if (budget / k >= corner_cap)
        throw Error(ErrorCode::infeasible_signature,
                    "corner content cannot be split under the cusp cap");
      for (double s : random_split(rng, budget, k, min_turn))
        atoms.push_back(Corner{s});
    }
    if (sig.seg_total > t.eps_len) {
      const double budget = sig.seg_total / 2.0;
      const int kmax = std::max(1, int(budget / min_len));
      const int k = 1 + int(u01(rng) * std::min(2, kmax));
      for (double s : random_split(rng, budget, std::min(k, kmax), min_len))
        atoms.push_back(Seg{s});
    }

    shuffle_vec(atoms, rng);

    // adjacency constraints, including the wrap with the reflected copy
    bool ok = atoms.size() >= 1;
    auto bad_adjacent = [&](const ChainElement& x, const ChainElement& y) {
      if (is_corner(x) && is_corner(y))
        return std::get<Corner>(x).turn + std::get<Corner>(y).turn >=
               corner_cap;
      if (is_seg(x) && is_seg(y)) return true;  // no turn between them
      return false;
    };
    for (std::size_t i = 0; ok && i + 1 < atoms.size(); ++i)
      ok = !bad_adjacent(atoms[i], atoms[i + 1]);
    if (ok && atoms.size() > 1) ok = !bad_adjacent(atoms.back(), atoms.front());
    if (!ok) continue;

    std::vector<ChainElement> ring = atoms;
    ring.insert(ring.end(), atoms.begin(), atoms.end());
    ConvexChain c;
    c.start = {0, 0};
    c.heading = 0.0;
    c.elements = std::move(ring);
    c = normalized(c, t);
    if (!validate(c, t).ok()) continue;
    return c;
  }
  throw Error(ErrorCode::infeasible_signature,
              "could not arrange a valid figure for this signature");
}

ConvexChain random_convex_polygon(std::uint64_t seed, int min_vertices,
                                  double target_area) {
  std::mt19937_64 rng(seed ^ 0xda942042e4dd58b5ULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const int n = min_vertices + int(u01(rng) * 5);
    std::vector<double> angles(n);
    for (auto& a : angles) a = u01(rng) * kTwoPi;
    std::sort(angles.begin(), angles.end());
    bool spaced = true;
    for (int i = 0; i + 1 < n; ++i)
      if (angles[i + 1] - angles[i] < 0.15) spaced = false;
    if (angles.front() + kTwoPi - angles.back() < 0.15) spaced = false;
    if (!spaced) continue;

    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
      const double r = 0.6 + 0.8 * u01(rng);
      pts[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
    }
    ConvexChain c;
    try {
      c = make_polygon(pts);
    } catch (const Error&) {
      continue;
    }
    if (!validate(c).ok()) continue;
    bool convex_enough = true;
    for (const auto& e : c.elements) {
      if (auto* k = std::get_if<Corner>(&e))
        if (k->turn < 0.02 || k->turn > kPi - 0.15) convex_enough = false;
      if (auto* s = std::get_if<Seg>(&e))
        if (s->len < 0.05) convex_enough = false;
    }
    if (!convex_enough) continue;
    if (target_area > 0) {
      const double s = std::sqrt(target_area / area(c));
      for (auto& p : pts) p = p * s;
      c = make_polygon(pts);
      if (!validate(c).ok()) continue;
    }
    return c;
  }
  throw Error(ErrorCode::bad_input, "polygon generator failed");
}

ConvexChain insert_segment_pair(const ConvexChain& raw, double extra_area,
                                std::uint64_t seed, const Tolerance& t) {
  const ConvexChain c = normalized(raw, t);
  if (!central_symmetry(c, t))
    throw Error(ErrorCode::not_centrally_symmetric,
                "segment insertion preserves symmetry, input has none");
  if (extra_area <= 0) return c;
  const std::size_t n = c.elements.size();
  const std::size_t h = n == 1 ? 0 : n / 2;
  const auto poses = element_poses(c);
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);

  // try element boundaries as insertion breakpoints
  std::vector<std::size_t> order(std::max<std::size_t>(h, 1));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle_vec(order, rng);
  for (std::size_t k : order) {
    if (n == 1) break;
    // avoid gluing a new segment against an existing one without a turn
    const auto& before = c.elements[(k + n - 1) % n];
    const auto& after = c.elements[k];
    if (is_seg(before) || is_seg(after)) continue;
    const double heading = poses[k].heading;
    const Vec2 dvec = poses[k + h].point - poses[k].point;
    const double gain = std::abs(cross(unit(heading), dvec));
    if (gain < 0.1) continue;
    const double len = extra_area / gain;
    std::vector<ChainElement> ring;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || i == k + h) ring.push_back(Seg{len});
      ring.push_back(c.elements[i]);
    }
    ConvexChain res = rebuild(poses[0], ring, t);
    if (!validate(res, t).ok()) continue;
    return res;
  }
  // fall back: split the largest arc in half and insert there
  if (n == 1) {
    const auto a = std::get<Arc>(c.elements[0]);
    ConvexChain split = c;
    split.elements = {Arc{a.radius, a.sweep / 4}, Arc{a.radius, a.sweep / 4},
                      Arc{a.radius, a.sweep / 4}, Arc{a.radius, a.sweep / 4}};
    // prevent re-merging by inserting at boundaries 0 and 2 directly
    const auto sposes = element_poses(split);
    const Vec2 dvec = sposes[2].point - sposes[0].point;
    const double gain = std::abs(cross(unit(sposes[0].heading), dvec));
    const double len = extra_area / gain;
    std::vector<ChainElement> ring = {Seg{len}, split.elements[0],
                                      split.elements[1], Seg{len},
                                      split.elements[2], split.elements[3]};
    ConvexChain res = rebuild(sposes[0], ring, t);
    require_valid(res, t);
    return res;
  }
  throw Error(ErrorCode::bad_input, "no feasible insertion breakpoint");
}

}  // namespace cpoly
