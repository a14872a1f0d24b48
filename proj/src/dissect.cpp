#include "cpoly/dissect.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cpoly/shapes.hpp"
#include "cpoly/signature.hpp"

namespace cpoly {

namespace {

std::string piece_name(std::size_t i) { return "p" + std::to_string(i); }

void renumber(Dissection& d) {
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    d.pieces[i].id = piece_name(i);
}

Dissection one_piece(const ConvexChain& f, const ConvexChain& g,
                     const Isometry& witness) {
  Dissection d;
  d.source = f;
  d.target = g;
  d.pieces.push_back({piece_name(0), chain_to_path(f)});
  d.src_pose.push_back(identity_isometry());
  d.tgt_pose.push_back(witness);
  return d;
}

// Convex polygon clip (Sutherland-Hodgman against each halfplane of the
// clipper).  Both inputs counterclockwise convex.
std::vector<Point> clip_convex(const std::vector<Point>& subject,
                               const std::vector<Point>& clipper) {
  std::vector<Point> poly = subject;
  for (std::size_t i = 0; i < clipper.size() && !poly.empty(); ++i) {
    const Point a = clipper[i];
    const Point b = clipper[(i + 1) % clipper.size()];
    const Vec2 d = b - a;
    std::vector<Point> next;
    const std::size_t n = poly.size();
    for (std::size_t j = 0; j < n; ++j) {
      const Point p = poly[j];
      const Point q = poly[(j + 1) % n];
      const double sp = cross(d, p - a);
      const double sq = cross(d, q - a);
      if (sp >= 0) next.push_back(p);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
        const double tt = sp / (sp - sq);
        next.push_back(p + tt * (q - p));
      }
    }
    poly = std::move(next);
  }
  return poly;
}

double polygon_area(const std::vector<Point>& v) {
  double s2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s2 += cross(v[i], v[(i + 1) % v.size()]);
  return s2 / 2.0;
}

bool path_is_polygon(const EdgePath& p) {
  for (const auto& e : p.edges)
    if (std::holds_alternative<ArcEdge>(e)) return false;
  return true;
}

// Remove duplicate and collinear vertices, iterating to a fixpoint so that
// clip artifacts (repeated points) cannot shadow real corners.
std::vector<Point> tidy_polygon(std::vector<Point> v, double eps) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    std::vector<Point> w;
    for (const auto& p : v)
      if (w.empty() || dist(w.back(), p) > eps) w.push_back(p);
    if (w.size() > 1 && dist(w.front(), w.back()) <= eps) w.pop_back();
    if (w.size() != v.size()) changed = true;
    v = std::move(w);
    if (v.size() < 3) break;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point prev = v[(i + v.size() - 1) % v.size()];
      const Point cur = v[i];
      const Point nxt = v[(i + 1) % v.size()];
      if (std::abs(cross(cur - prev, nxt - cur)) <=
          eps * (norm(cur - prev) + norm(nxt - cur))) {
        v.erase(v.begin() + long(i));
        changed = true;
        break;
      }
    }
  }
  return v.size() >= 3 ? v : std::vector<Point>{};
}

}  // namespace

// ---- refinement and chording -------------------------------------------------

ArcRefinement uniform_refinement(const ConvexChain& c, double max_sweep) {
  ArcRefinement ref;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (auto* a = std::get_if<Arc>(&c.elements[i])) {
      const int k = std::max(1, int(std::ceil(a->sweep / max_sweep - 1e-12)));
      ref[i] = std::vector<double>(k, a->sweep / k);
    }
  }
  return ref;
}

ChordedFigure chord_arcs(const ConvexChain& f, const ArcRefinement& refinement,
                         const Tolerance& t) {
  require_valid(f, t);
  const auto poses = element_poses(f);
  ChordedFigure out;
  std::vector<Point> gon;
  std::size_t lump_id = 0;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    if (auto* s = std::get_if<Seg>(&f.elements[i])) {
      (void)s;
      gon.push_back(poses[i].point);
    } else if (auto* a = std::get_if<Arc>(&f.elements[i])) {
      std::vector<double> sweeps{a->sweep};
      if (auto it = refinement.find(i); it != refinement.end())
        sweeps = it->second;
      double total = 0.0;
      for (double sw : sweeps) total += sw;
      if (std::abs(total - a->sweep) > 1e-6)
        throw Error(ErrorCode::bad_input, "refinement does not tile the arc");
      const Point ctr =
          poses[i].point + a->radius * unit(poses[i].heading + kPi / 2);
      double ang = poses[i].heading - kPi / 2;
      for (double sw : sweeps) {
        if (sw > kPi / 2 + 1e-9)
          throw Error(ErrorCode::sweep_too_large,
                      "refined sweep " + std::to_string(sw) + " exceeds pi/2");
        const Point pa = ctr + a->radius * unit(ang);
        const Point pb = ctr + a->radius * unit(ang + sw);
        gon.push_back(pa);
        EdgePath lump;
        lump.edges.push_back(ArcEdge{ctr, a->radius, pa, pb, true});
        lump.edges.push_back(LineEdge{pb, pa});
        out.lumps.push_back({"lump" + std::to_string(lump_id++), lump});
        out.lump_elem.push_back(i);
        ang += sw;
      }
    } else {
      gon.push_back(poses[i].point);
    }
  }
  // drop duplicate polygon vertices (corners contribute the same point as
  // the neighbouring element start)
  std::vector<Point> v;
  for (const auto& p : gon)
    if (v.empty() || dist(v.back(), p) > 1e-12) v.push_back(p);
  if (v.size() > 1 && dist(v.front(), v.back()) <= 1e-12) v.pop_back();
  out.polygon = {"gon", polygon_path(v)};
  return out;
}

// ---- triangle -> rectangle ----------------------------------------------------

Dissection triangle_to_rectangle(const Piece& tri, const Tolerance& t) {
  if (!path_is_polygon(tri.path))
    throw Error(ErrorCode::bad_input, "triangle piece must be polygonal");
  std::vector<Point> v = path_vertices(tri.path);
  if (v.size() != 3) throw Error(ErrorCode::bad_input, "need a triangle");
  if (polygon_area(v) < 0) std::swap(v[1], v[2]);

  // base = longest side, as vertices (A, B) with C the apex
  int base = 0;
  double best = -1;
  for (int i = 0; i < 3; ++i) {
    const double l = dist(v[i], v[(i + 1) % 3]);
    if (l > best) { best = l; base = i; }
  }
  const Point A = v[base], B = v[(base + 1) % 3], C = v[(base + 2) % 3];
  const Vec2 dir = (B - A) / dist(A, B);
  const Vec2 nrm = perp(dir);
  const double h = dot(C - A, nrm);
  if (h < 10 * t.eps_len)
    throw Error(ErrorCode::degenerate, "triangle altitude below threshold");

  const Point M = (C + A) / 2.0;
  const Point N = (B + C) / 2.0;
  // foot of the perpendicular from C onto line MN
  const Point F = C - nrm * (h / 2.0);

  Dissection d;
  d.source = make_polygon({A, B, C});
  d.target = make_polygon({A, B, B + nrm * (h / 2.0), A + nrm * (h / 2.0)});

  auto add = [&](std::vector<Point> poly, const Isometry& tgt) {
    poly = tidy_polygon(std::move(poly), t.eps_len);
    if (poly.empty()) return;
    d.pieces.push_back({piece_name(d.pieces.size()), polygon_path(poly)});
    d.src_pose.push_back(identity_isometry());
    d.tgt_pose.push_back(tgt);
  };
  add({A, B, N, M}, identity_isometry());
  add({M, F, C}, make_rotation(kPi, M));
  add({F, N, C}, make_rotation(kPi, N));
  return d;
}

// ---- rectangle -> width --------------------------------------------------------

namespace {

struct RectFrame {
  Isometry to_world;  // local [0,b]x[0,a] -> world
  double b = 0.0, a = 0.0;
};

RectFrame rect_frame(const Piece& rect) {
  if (!path_is_polygon(rect.path))
    throw Error(ErrorCode::bad_input, "rectangle piece must be polygonal");
  std::vector<Point> v = path_vertices(rect.path);
  if (v.size() != 4) throw Error(ErrorCode::bad_input, "need a rectangle");
  if (polygon_area(v) < 0) std::reverse(v.begin(), v.end());
  const double b = dist(v[0], v[1]);
  const double a = dist(v[1], v[2]);
  RectFrame fr;
  fr.b = b;
  fr.a = a;
  const double ang = arg(v[1] - v[0]);
  fr.to_world = compose(make_translation(v[0]), make_rotation(ang));
  const Point check = fr.to_world({b, a});
  if (dist(check, v[2]) > 1e-6 * std::max(1.0, b + a))
    throw Error(ErrorCode::bad_input, "piece is not a rectangle");
  return fr;
}

// by construction in local coordinates: [0,b]x[0,a] -> [0,w]x[0,h]
Dissection rect_to_width_local(double b, double a, double w,
                               const Tolerance& t) {
  const double area = a * b;
  const double h = area / w;
  Dissection d;
  d.source = make_rect(b, a);
  d.target = make_rect(w, h);
  auto add = [&](std::vector<Point> poly, const Isometry& tgt) {
    poly = tidy_polygon(std::move(poly), t.eps_len);
    if (poly.empty()) return;
    d.pieces.push_back({piece_name(d.pieces.size()), polygon_path(poly)});
    d.src_pose.push_back(identity_isometry());
    d.tgt_pose.push_back(tgt);
  };

  const double scale = std::max(1.0, b + a);
  if (std::abs(w - b) <= 10 * t.eps_len * scale) {
    add({{0, 0}, {b, 0}, {b, a}, {0, a}}, identity_isometry());
    return d;
  }
  if (std::abs(w - b / 2) <= 10 * t.eps_len * scale) {
    // exact halving: right half stacks on top
    add({{0, 0}, {b / 2, 0}, {b / 2, a}, {0, a}}, identity_isometry());
    add({{b / 2, 0}, {b, 0}, {b, a}, {b / 2, a}},
        make_translation({-b / 2, a}));
    return d;
  }
  // slide step for w in (b/2, b)
  const double delta = (b - w) * a / w;
  const Point P{w, 0}, B{b, 0}, C{b, a}, D{0, a};
  const Point O2{b - w, a}, O3{b - w, a - delta};
  add({{0, 0}, P, D}, identity_isometry());
  add({P, B, C, O2, O3}, make_translation({-(b - w), delta}));
  add({D, O3, O2}, make_translation({2 * w - b, 2 * delta - h}));
  return d;
}

}  // namespace

Dissection invert(const Dissection& d) {
  Dissection out;
  out.source = d.target;
  out.target = d.source;
  out.pieces = d.pieces;
  out.src_pose = d.tgt_pose;
  out.tgt_pose = d.src_pose;
  return out;
}

// conjugate every placement so the dissection lives between transformed
// figures
static Dissection retarget(const Dissection& d, const Isometry& post_tgt) {
  Dissection out = d;
  out.target = transformed(d.target, post_tgt);
  for (auto& m : out.tgt_pose) m = compose(post_tgt, m);
  return out;
}

Dissection compose(const Dissection& d1, const Dissection& d2,
                   const Tolerance& t) {
  const auto witness = congruent(d1.target, d2.source, t);
  if (!witness)
    throw Error(ErrorCode::figure_mismatch,
                "middle figures are not congruent");
  const Isometry pull = inverse(*witness);  // d2 source plane -> mid plane

  // Piece paths placed in the shared middle plane.
  std::vector<EdgePath> mid1(d1.pieces.size()), mid2(d2.pieces.size());
  std::vector<Box> box1(d1.pieces.size()), box2(d2.pieces.size());
  for (std::size_t i = 0; i < d1.pieces.size(); ++i) {
    mid1[i] = transformed(d1.pieces[i].path, d1.tgt_pose[i]);
    box1[i] = path_bbox(mid1[i]);
  }
  for (std::size_t j = 0; j < d2.pieces.size(); ++j) {
    mid2[j] = transformed(d2.pieces[j].path, compose(pull, d2.src_pose[j]));
    box2[j] = path_bbox(mid2[j]);
  }

  Dissection out;
  out.source = d1.source;
  out.target = d2.target;
  const double area_floor = 1e-12 * std::max(1.0, std::abs(area(d1.source)));

  for (std::size_t i = 0; i < d1.pieces.size(); ++i) {
    for (std::size_t j = 0; j < d2.pieces.size(); ++j) {
      if (!box1[i].overlaps(box2[j])) continue;
      const Isometry src = compose(d1.src_pose[i], inverse(d1.tgt_pose[i]));
      const Isometry tgt =
          compose(d2.tgt_pose[j], compose(inverse(d2.src_pose[j]), *witness));
      const bool poly1 = path_is_polygon(mid1[i]);
      const bool poly2 = path_is_polygon(mid2[j]);
      if (poly1 && poly2) {
        auto sub = path_vertices(mid1[i]);
        auto clp = path_vertices(mid2[j]);
        if (polygon_area(sub) < 0) std::reverse(sub.begin(), sub.end());
        if (polygon_area(clp) < 0) std::reverse(clp.begin(), clp.end());
        auto cut = clip_convex(sub, clp);
        cut = tidy_polygon(std::move(cut), 1e-12);
        if (cut.empty() || std::abs(polygon_area(cut)) <= area_floor) continue;
        out.pieces.push_back(
            {piece_name(out.pieces.size()), polygon_path(cut)});
        out.src_pose.push_back(src);
        out.tgt_pose.push_back(tgt);
        continue;
      }
      // arc-edged pieces may pass through only when nested
      auto covered = [&](const EdgePath& inner, const EdgePath& outer) {
        const double band = 1e-7 * std::max(1.0, chain_scale(d1.source));
        for (const auto& e : inner.edges) {
          std::vector<Point> probes;
          if (auto* l = std::get_if<LineEdge>(&e)) {
            probes = {l->a, (l->a + l->b) / 2.0};
          } else {
            const auto& ae = std::get<ArcEdge>(e);
            probes = {ae.a};
            const double sw = arc_edge_sweep(ae);
            const double ta = arg(ae.a - ae.center);
            for (double f : {0.25, 0.5, 0.75})
              probes.push_back(ae.center +
                               ae.radius * unit(ta + (ae.ccw ? 1 : -1) * f * sw));
          }
          for (const auto& p : probes)
            if (!path_contains(outer, p, band)) return false;
        }
        return true;
      };
      if (covered(mid2[j], mid1[i])) {
        out.pieces.push_back({piece_name(out.pieces.size()),
                              transformed(d2.pieces[j].path,
                                          compose(pull, d2.src_pose[j]))});
        out.src_pose.push_back(src);
        out.tgt_pose.push_back(tgt);
      } else if (covered(mid1[i], mid2[j])) {
        out.pieces.push_back({piece_name(out.pieces.size()),
                              transformed(d1.pieces[i].path, d1.tgt_pose[i])});
        out.src_pose.push_back(src);
        out.tgt_pose.push_back(tgt);
      } else {
        const double s1 = std::abs(path_area(mid1[i]));
        const double s2 = std::abs(path_area(mid2[j]));
        // overlapping curved pieces cannot be clipped exactly
        auto overlap_possible = [&]() {
          // cheap separation probe: sample one piece's interior
          const Box bb = box1[i];
          std::size_t inside = 0, total = 0;
          for (int k = 0; k < 64; ++k) {
            const Point p{bb.lo.x + (bb.hi.x - bb.lo.x) * ((k % 8) + 0.5) / 8,
                          bb.lo.y + (bb.hi.y - bb.lo.y) * ((k / 8) + 0.5) / 8};
            if (!path_contains(mid1[i], p, 0)) continue;
            ++total;
            if (path_contains(mid2[j], p, 0)) ++inside;
          }
          return total > 0 && inside > 0;
        };
        if (std::min(s1, s2) > area_floor && overlap_possible())
          throw Error(ErrorCode::clipping_failure,
                      "curved pieces " + d1.pieces[i].id + " x " +
                          d2.pieces[j].id + " overlap partially");
      }
    }
  }
  renumber(out);
  return out;
}

// ---- rectangle_to_width public entry ------------------------------------------

Dissection rectangle_to_width(const Piece& rect, double w, const Tolerance& t) {
  const RectFrame fr = rect_frame(rect);
  const double area = fr.a * fr.b;
  if (!(w > 0) || !(w < area / (10 * t.eps_len)))
    throw Error(ErrorCode::degenerate, "target width out of range");

  // local chain: shrink toward w by halvings plus one slide
  auto local_chain = [&](double b0, double a0, double target) -> Dissection {
    Dissection acc = rect_to_width_local(b0, a0, b0, t);  // identity
    double b = b0, a = a0;
    int guard = 0;
    while (b / 2 >= target - 1e-12 && ++guard < 64) {
      Dissection step = rect_to_width_local(b, a, b / 2, t);
      acc = compose(acc, step, t);
      b /= 2;
      a *= 2;
    }
    if (std::abs(b - target) > 10 * t.eps_len * std::max(1.0, b)) {
      Dissection step = rect_to_width_local(b, a, target, t);
      acc = compose(acc, step, t);
    }
    return acc;
  };

  Dissection local;
  if (w <= fr.b) {
    local = local_chain(fr.b, fr.a, w);
  } else {
    // grow the base: build the reverse reduction and invert it
    const double h = area / w;
    local = invert(local_chain(w, h, fr.b));
  }

  // conjugate into world coordinates on the source side
  Dissection out = local;
  out.source = transformed(local.source, fr.to_world);
  for (auto& m : out.src_pose) m = compose(fr.to_world, m);
  return out;
}

// ---- polygons ------------------------------------------------------------------

Dissection polygons_dissect(const Piece& p, const Piece& q,
                            const Tolerance& t) {
  if (!path_is_polygon(p.path) || !path_is_polygon(q.path))
    throw Error(ErrorCode::bad_input, "polygon pipeline needs polygons");
  std::vector<Point> pv = tidy_polygon(path_vertices(p.path), t.eps_len);
  std::vector<Point> qv = tidy_polygon(path_vertices(q.path), t.eps_len);
  if (pv.size() < 3 || qv.size() < 3)
    throw Error(ErrorCode::degenerate, "degenerate polygon");
  if (polygon_area(pv) < 0) std::reverse(pv.begin(), pv.end());
  if (polygon_area(qv) < 0) std::reverse(qv.begin(), qv.end());

  const double sp = polygon_area(pv), sq = polygon_area(qv);
  const double scale = std::max({1.0, sp, sq});
  if (std::abs(sp - sq) > 1e3 * t.eps_area * scale)
    throw Error(ErrorCode::area_mismatch,
                "polygon areas differ by " + std::to_string(sp - sq));

  const ConvexChain pc = make_polygon(pv), qc = make_polygon(qv);
  if (auto wit = congruent(pc, qc, t)) return one_piece(pc, qc, *wit);

  const double w = std::sqrt((sp + sq) / 2.0);

  // polygon -> stacked common-width rectangle
  auto to_rect_stack = [&](const std::vector<Point>& v,
                           const ConvexChain& chain) -> Dissection {
    Dissection acc;
    acc.source = chain;
    double y = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      const Piece tri{"t", polygon_path({v[0], v[i], v[i + 1]})};
      Dissection d_tri = triangle_to_rectangle(tri, t);
      const double tri_area = polygon_area({v[0], v[i], v[i + 1]});
      Dissection d_rect = rectangle_to_width(
          {"r", chain_to_path(d_tri.target)}, w, t);
      Dissection d_full = compose(d_tri, d_rect, t);
      const double h = tri_area / w;
      d_full = retarget(d_full, make_translation({0, y}));
      y += h;
      // append
      for (std::size_t k = 0; k < d_full.pieces.size(); ++k) {
        acc.pieces.push_back(d_full.pieces[k]);
        acc.src_pose.push_back(d_full.src_pose[k]);
        acc.tgt_pose.push_back(d_full.tgt_pose[k]);
      }
    }
    acc.target = make_rect(w, y);
    renumber(acc);
    return acc;
  };

  Dissection dp = to_rect_stack(pv, pc);
  Dissection dq = to_rect_stack(qv, qc);
  return compose(dp, invert(dq), t);
}

// ---- the top-level construction --------------------------------------------------

namespace {

struct SideRefinement {
  ArcRefinement refinement;
  // pairing order: lumps appear in chord_arcs order; we record for each
  // bucket the lump indices in consumption order
  std::vector<std::vector<std::size_t>> lump_order;  // per bucket
};

// greedy largest-first matching of per-bucket arc instances; emits the
// common sub-sweep multiset and per-side refinements realizing it
void common_refinement(const ConvexChain& f, const ConvexChain& g,
                       const Tolerance& t, ArcRefinement& rf,
                       ArcRefinement& rg) {
  const ArcSignature sf = signature(f, t);
  struct Inst { std::size_t elem; double sweep; };

  auto bucket_instances = [&](const ConvexChain& c, double radius,
                              double rscale) {
    std::vector<Inst> v;
    for (std::size_t i = 0; i < c.elements.size(); ++i)
      if (auto* a = std::get_if<Arc>(&c.elements[i]))
        if (std::abs(a->radius - radius) <= 2 * t.eps_len * rscale)
          v.push_back({i, a->sweep});
    std::sort(v.begin(), v.end(),
              [](const Inst& x, const Inst& y) { return x.sweep > y.sweep; });
    return v;
  };

  double rscale = 1.0;
  for (const auto& b : sf.buckets) rscale = std::max(rscale, b.radius);

  for (const auto& b : sf.buckets) {
    auto fi = bucket_instances(f, b.radius, rscale);
    auto gi = bucket_instances(g, b.radius, rscale);
    std::vector<double> rem_f, rem_g;
    for (auto& x : fi) rem_f.push_back(x.sweep);
    for (auto& x : gi) rem_g.push_back(x.sweep);
    std::size_t i = 0, j = 0;
    while (i < fi.size() && j < gi.size()) {
      double m = std::min(rem_f[i], rem_g[j]);
      const bool close = std::abs(rem_f[i] - rem_g[j]) <= 16 * t.eps_ang;
      // pi/2 cap, applied identically to both sides
      const double mm = close ? std::max(rem_f[i], rem_g[j]) : m;
      const int k = std::max(1, int(std::ceil(mm / (kPi / 2) - 1e-12)));
      for (int s = 0; s < k; ++s) {
        rf[fi[i].elem].push_back(rem_f[i] * 1.0 / k *
                                 (close ? 1.0 : m / rem_f[i]));
        rg[gi[j].elem].push_back(rem_g[j] * 1.0 / k *
                                 (close ? 1.0 : m / rem_g[j]));
      }
      if (close) {
        rem_f[i] = 0; rem_g[j] = 0; ++i; ++j;
      } else if (rem_f[i] < rem_g[j]) {
        rem_g[j] -= m; rem_f[i] = 0; ++i;
      } else {
        rem_f[i] -= m; rem_g[j] = 0; ++j;
      }
    }
  }
}

}  // namespace

Dissection dissect(const ConvexChain& f, const ConvexChain& g,
                   const Tolerance& t) {
  require_valid(f, t);
  require_valid(g, t);
  if (!equidecomposable(f, g, t)) {
    const double sf = area(f), sg = area(g);
    const double scale = std::max({1.0, sf, sg});
    std::string clause =
        std::abs(sf - sg) > t.eps_area * scale
            ? "areas differ: " + std::to_string(sf) + " vs " +
                  std::to_string(sg)
            : "positive-radius signatures differ";
    throw Error(ErrorCode::not_equidecomposable, clause);
  }
  if (auto wit = congruent(f, g, t)) return one_piece(f, g, *wit);

  ArcRefinement rf, rg;
  common_refinement(f, g, t, rf, rg);
  const ChordedFigure cf = chord_arcs(f, rf, t);
  const ChordedFigure cg = chord_arcs(g, rg, t);
  if (cf.lumps.size() != cg.lumps.size())
    throw Error(ErrorCode::clipping_failure, "refinement mismatch");

  Dissection d;
  d.source = f;
  d.target = g;

  // pair lumps by (radius, sweep desc): both sides realized the same
  // sub-sweep multiset per radius bucket
  auto order_of = [&](const ConvexChain& c, const ChordedFigure& ch) {
    std::vector<std::size_t> idx(ch.lumps.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      const auto& ax = std::get<Arc>(c.elements[ch.lump_elem[x]]);
      const auto& ay = std::get<Arc>(c.elements[ch.lump_elem[y]]);
      if (std::abs(ax.radius - ay.radius) > t.eps_len)
        return ax.radius < ay.radius;
      const double sx = arc_edge_sweep(std::get<ArcEdge>(ch.lumps[x].path.edges[0]));
      const double sy = arc_edge_sweep(std::get<ArcEdge>(ch.lumps[y].path.edges[0]));
      return sx > sy;
    });
    return idx;
  };
  const auto fo = order_of(f, cf);
  const auto go = order_of(g, cg);

  for (std::size_t k = 0; k < fo.size(); ++k) {
    const auto& lf = cf.lumps[fo[k]];
    const auto& lg = cg.lumps[go[k]];
    const auto& af = std::get<ArcEdge>(lf.path.edges[0]);
    const auto& ag = std::get<ArcEdge>(lg.path.edges[0]);
    if (std::abs(af.radius - ag.radius) > 1e-6 ||
        std::abs(arc_edge_sweep(af) - arc_edge_sweep(ag)) > 1e-6)
      throw Error(ErrorCode::clipping_failure, "lump pairing mismatch");
    const double rot = arg(ag.a - ag.center) - arg(af.a - af.center);
    const Isometry wit = compose(
        make_translation(ag.center),
        compose(make_rotation(rot), make_translation(-af.center)));
    d.pieces.push_back(lf);
    d.src_pose.push_back(identity_isometry());
    d.tgt_pose.push_back(wit);
  }

  const double pa = path_area(cf.polygon.path);
  const double pb = path_area(cg.polygon.path);
  const double scale = std::max(1.0, area(f));
  if (pa > t.eps_area * scale || pb > t.eps_area * scale) {
    Dissection dpoly = polygons_dissect(cf.polygon, cg.polygon, t);
    for (std::size_t k = 0; k < dpoly.pieces.size(); ++k) {
      d.pieces.push_back(dpoly.pieces[k]);
      d.src_pose.push_back(dpoly.src_pose[k]);
      d.tgt_pose.push_back(dpoly.tgt_pose[k]);
    }
  }
  renumber(d);
  return d;
}

// ---- verification -----------------------------------------------------------------

namespace {

double halton(std::uint64_t i, int base) {
  double f = 1.0, r = 0.0;
  while (i) {
    f /= base;
    r += f * double(i % base);
    i /= base;
  }
  return r;
}

struct PieceGrid {
  Box bounds;
  int nx = 1, ny = 1;
  std::vector<std::vector<std::size_t>> cells;

  void build(const Box& b, const std::vector<Box>& boxes, int n) {
    bounds = b;
    nx = ny = n;
    cells.assign(std::size_t(nx) * ny, {});
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const auto [x0, y0] = cell_of(boxes[i].lo);
      const auto [x1, y1] = cell_of(boxes[i].hi);
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
          cells[std::size_t(y) * nx + x].push_back(i);
    }
  }
  std::pair<int, int> cell_of(Point p) const {
    const double fx = (p.x - bounds.lo.x) /
                      std::max(1e-300, bounds.hi.x - bounds.lo.x);
    const double fy = (p.y - bounds.lo.y) /
                      std::max(1e-300, bounds.hi.y - bounds.lo.y);
    return {std::clamp(int(fx * nx), 0, nx - 1),
            std::clamp(int(fy * ny), 0, ny - 1)};
  }
  const std::vector<std::size_t>& candidates(Point p) const {
    const auto [x, y] = cell_of(p);
    return cells[std::size_t(y) * nx + x];
  }
};

}  // namespace

VerificationReport verify(const Dissection& d, std::size_t samples,
                          std::uint64_t seed, const Tolerance& t) {
  VerificationReport rep;
  rep.piece_count = d.pieces.size();
  std::ostringstream detail;

  const double s_src = area(d.source);
  const double s_tgt = area(d.target);
  double s_pieces = 0.0;
  for (const auto& p : d.pieces) s_pieces += path_area(p.path);
  rep.src_area_residual = std::abs(s_pieces - s_src);
  rep.tgt_area_residual = std::abs(s_pieces - s_tgt);
  const double scale = std::max({1.0, s_src, s_tgt});
  const bool areas_ok = rep.src_area_residual <= 1e3 * t.eps_area * scale &&
                        rep.tgt_area_residual <= 1e3 * t.eps_area * scale;
  if (!areas_ok) detail << "area residuals too large; ";

  const double band = 10 * t.eps_len * std::max(1.0, chain_scale(d.source));

  auto coverage = [&](const ConvexChain& fig,
                      const std::vector<Isometry>& poses,
                      std::uint64_t salt) -> std::pair<double, int> {
    const SupportMap fm = support_map(fig);
    std::vector<EdgePath> placed(d.pieces.size());
    std::vector<Box> boxes(d.pieces.size());
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      placed[i] = transformed(d.pieces[i].path, poses[i]);
      boxes[i] = path_bbox(placed[i]);
      boxes[i].lo -= {band, band};
      boxes[i].hi += {band, band};
    }
    Box bb = path_bbox(chain_to_path(fig));
    PieceGrid grid;
    grid.build(bb, boxes, 48);

    std::size_t bad = 0, counted = 0;
    int max_depth = 0;
    std::uint64_t idx = seed * 77003 + salt;
    std::size_t produced = 0;
    while (counted < samples && produced < samples * 8) {
      ++idx;
      ++produced;
      const Point p{bb.lo.x + (bb.hi.x - bb.lo.x) * halton(idx, 2),
                    bb.lo.y + (bb.hi.y - bb.lo.y) * halton(idx, 3)};
      if (!chain_contains(fm, p, -band)) continue;  // outside or near edge
      bool near_boundary = false;
      int depth = 0;
      for (std::size_t i : grid.candidates(p)) {
        if (!boxes[i].overlaps({p, p})) continue;
        // pieces are convex: the band shell around the boundary is the set
        // inside with +band slack but not with -band slack
        if (!path_contains(placed[i], p, band)) continue;
        if (!path_contains(placed[i], p, -band)) {
          near_boundary = true;
          break;
        }
        ++depth;
      }
      if (near_boundary) continue;
      ++counted;
      max_depth = std::max(max_depth, depth);
      if (depth != 1) ++bad;
    }
    const double defect = counted ? double(bad) / double(counted) : 1.0;
    rep.samples_used += counted;
    return {defect, max_depth};
  };

  const auto [def_src, depth_src] = coverage(d.source, d.src_pose, 1);
  const auto [def_tgt, depth_tgt] = coverage(d.target, d.tgt_pose, 2);
  rep.coverage_defect = std::max(def_src, def_tgt);
  rep.max_overlap_depth = std::max(depth_src, depth_tgt);

  // every placed piece stays inside its figure
  std::size_t esc = 0, esc_total = 0;
  {
    const SupportMap ms = support_map(d.source);
    const SupportMap mt = support_map(d.target);
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      const Box pb = path_bbox(d.pieces[i].path);
      std::uint64_t idx = seed * 40013 + i * 101;
      int found = 0;
      for (int it = 0; it < 400 && found < 12; ++it) {
        ++idx;
        const Point q{pb.lo.x + (pb.hi.x - pb.lo.x) * halton(idx, 2),
                      pb.lo.y + (pb.hi.y - pb.lo.y) * halton(idx, 3)};
        if (!path_contains(d.pieces[i].path, q, -band)) continue;
        ++found;
        ++esc_total;
        if (!chain_contains(ms, d.src_pose[i](q), band)) ++esc;
        if (!chain_contains(mt, d.tgt_pose[i](q), band)) ++esc;
      }
    }
  }
  rep.escape_defect = esc_total ? double(esc) / double(2 * esc_total) : 0.0;
  if (rep.escape_defect > 0) detail << "piece escapes figure; ";

  rep.pass = areas_ok && rep.coverage_defect <= rep.declared_bound &&
             rep.escape_defect <= rep.declared_bound;
  if (rep.coverage_defect > rep.declared_bound) detail << "coverage defect; ";
  rep.detail = detail.str();
  return rep;
}

}  // namespace cpoly
