#include "cpoly/boundary.hpp"

#include <algorithm>

namespace cpoly {

BoundaryPoint locate(const ConvexChain& c, std::size_t element, double t) {
  if (element >= c.elements.size())
    throw Error(ErrorCode::bad_input, "element index out of range");
  t = std::clamp(t, 0.0, 1.0);
  const auto poses = element_poses(c);
  const Pose& p = poses[element];
  const ChainElement& e = c.elements[element];
  Point pt;
  if (auto* s = std::get_if<Seg>(&e)) {
    pt = p.point + t * s->len * unit(p.heading);
  } else if (auto* a = std::get_if<Arc>(&e)) {
    const Point ctr = p.point + a->radius * unit(p.heading + kPi / 2);
    pt = ctr + a->radius * unit(p.heading - kPi / 2 + t * a->sweep);
  } else {
    pt = p.point;
  }
  return {element, t, pt};
}

std::pair<double, double> normal_cone(const ConvexChain& c,
                                      const BoundaryPoint& bp) {
  const auto poses = element_poses(c);
  const Pose& p = poses[bp.element];
  const ChainElement& e = c.elements[bp.element];
  const double nu_in = p.heading - kPi / 2;
  if (is_seg(e)) {
    if (bp.t <= 0.0 || bp.t >= 1.0) {
      // endpoint: include the adjacent element's turn? callers use interior
      // points; keep the edge normal.
    }
    return {nu_in, nu_in};
  }
  if (auto* a = std::get_if<Arc>(&e)) {
    const double nu = nu_in + bp.t * a->sweep;
    return {nu, nu};
  }
  const auto& k = std::get<Corner>(e);
  return {nu_in, nu_in + k.turn};
}

std::pair<std::vector<ChainElement>, std::vector<ChainElement>> split_element(
    const ChainElement& e, double t, const Tolerance& tol) {
  std::vector<ChainElement> pre, post;
  auto push = [&](std::vector<ChainElement>& v, ChainElement el, double size,
                  double eps) {
    if (size > eps) v.push_back(el);
  };
  if (auto* s = std::get_if<Seg>(&e)) {
    push(pre, Seg{s->len * t}, s->len * t, tol.eps_len);
    push(post, Seg{s->len * (1 - t)}, s->len * (1 - t), tol.eps_len);
  } else if (auto* a = std::get_if<Arc>(&e)) {
    push(pre, Arc{a->radius, a->sweep * t}, a->sweep * t, tol.eps_ang);
    push(post, Arc{a->radius, a->sweep * (1 - t)}, a->sweep * (1 - t),
         tol.eps_ang);
  } else {
    const auto& k = std::get<Corner>(e);
    push(pre, Corner{k.turn * t}, k.turn * t, tol.eps_ang);
    push(post, Corner{k.turn * (1 - t)}, k.turn * (1 - t), tol.eps_ang);
  }
  return {pre, post};
}

std::vector<ChainElement> boundary_between(const ConvexChain& c,
                                           const BoundaryPoint& a,
                                           const BoundaryPoint& b,
                                           const Tolerance& tol) {
  const std::size_t n = c.elements.size();
  std::vector<ChainElement> out;
  if (a.element == b.element && b.t >= a.t) {
    // both cuts inside one element
    const ChainElement& e = c.elements[a.element];
    auto [pre, mid_post] = split_element(e, a.t, tol);
    (void)pre;
    if (b.t > a.t) {
      const double rel = (b.t - a.t) / std::max(1e-300, 1.0 - a.t);
      for (auto& el : mid_post) {
        auto [seg_mid, seg_rest] = split_element(el, rel, tol);
        (void)seg_rest;
        for (auto& x : seg_mid) out.push_back(x);
      }
    }
    return out;
  }
  auto [a_pre, a_post] = split_element(c.elements[a.element], a.t, tol);
  (void)a_pre;
  for (auto& el : a_post) out.push_back(el);
  for (std::size_t i = (a.element + 1) % n; i != b.element; i = (i + 1) % n)
    out.push_back(c.elements[i]);
  auto [b_pre, b_post] = split_element(c.elements[b.element], b.t, tol);
  (void)b_post;
  for (auto& el : b_pre) out.push_back(el);
  return out;
}

double arc_measure_between(const ConvexChain& c, const BoundaryPoint& a,
                           const BoundaryPoint& b, const Tolerance& tol) {
  double m = 0.0;
  for (const auto& e : boundary_between(c, a, b, tol))
    if (auto* arc = std::get_if<Arc>(&e)) m += arc->sweep;
  return m;
}

}  // namespace cpoly
