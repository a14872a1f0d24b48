#include "cpoly/piece.hpp"

#include <algorithm>
#include <cmath>

namespace cpoly {

double arc_edge_sweep(const ArcEdge& e) {
  if (dist(e.a, e.b) <= 1e-12 * std::max(1.0, e.radius)) return kTwoPi;
  const double ta = arg(e.a - e.center), tb = arg(e.b - e.center);
  const double s = e.ccw ? ccw_delta(tb, ta) : ccw_delta(ta, tb);
  return s == 0.0 ? kTwoPi : s;
}

double path_area(const EdgePath& p) {
  double s2 = 0.0, corr = 0.0;
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) {
      s2 += cross(l->a, l->b);
    } else {
      const auto& a = std::get<ArcEdge>(e);
      s2 += cross(a.a, a.b);
      const double sw = arc_edge_sweep(a);
      const double seg = a.radius * a.radius * (sw - std::sin(sw)) / 2.0;
      corr += a.ccw ? seg : -seg;
    }
  }
  return s2 / 2.0 + corr;
}

Box path_bbox(const EdgePath& p) {
  Box b{{1e300, 1e300}, {-1e300, -1e300}};
  auto eat = [&](Point q) {
    b.lo.x = std::min(b.lo.x, q.x);
    b.lo.y = std::min(b.lo.y, q.y);
    b.hi.x = std::max(b.hi.x, q.x);
    b.hi.y = std::max(b.hi.y, q.y);
  };
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) {
      eat(l->a);
      eat(l->b);
    } else {
      const auto& a = std::get<ArcEdge>(e);
      eat(a.a);
      eat(a.b);
      const double ta = arg(a.a - a.center);
      const double sw = arc_edge_sweep(a);
      for (int k = 0; k < 4; ++k) {
        const double cand = k * kPi / 2;  // axis extremes
        const double rel = a.ccw ? ccw_delta(cand, ta) : ccw_delta(ta, cand);
        if (rel <= sw)
          eat(a.center + a.radius * unit(cand));
      }
    }
  }
  return b;
}

EdgePath transformed(const EdgePath& p, const Isometry& m) {
  EdgePath out;
  out.edges.reserve(p.edges.size());
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) {
      out.edges.push_back(LineEdge{m(l->a), m(l->b)});
    } else {
      const auto& a = std::get<ArcEdge>(e);
      out.edges.push_back(
          ArcEdge{m(a.center), a.radius, m(a.a), m(a.b),
                  m.reflect ? !a.ccw : a.ccw});
    }
  }
  return out;
}

EdgePath chain_to_path(const ConvexChain& c) {
  EdgePath out;
  const auto poses = element_poses(c);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (auto* s = std::get_if<Seg>(&c.elements[i])) {
      (void)s;
      out.edges.push_back(LineEdge{poses[i].point, poses[i + 1].point});
    } else if (auto* a = std::get_if<Arc>(&c.elements[i])) {
      const Point ctr =
          poses[i].point + a->radius * unit(poses[i].heading + kPi / 2);
      out.edges.push_back(
          ArcEdge{ctr, a->radius, poses[i].point, poses[i + 1].point, true});
    }
  }
  return out;
}

EdgePath polygon_path(const std::vector<Point>& v) {
  EdgePath out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.edges.push_back(LineEdge{v[i], v[(i + 1) % v.size()]});
  return out;
}

std::vector<Point> path_vertices(const EdgePath& p) {
  std::vector<Point> out;
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) out.push_back(l->a);
    else out.push_back(std::get<ArcEdge>(e).a);
  }
  return out;
}

bool path_contains(const EdgePath& p, Point q, double slack) {
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) {
      const Vec2 d = l->b - l->a;
      const double len = norm(d);
      if (len <= 0) continue;
      if (cross(d, q - l->a) / len < -slack) return false;
    } else {
      const auto& a = std::get<ArcEdge>(e);
      const Vec2 d = q - a.center;
      if (!a.ccw) {
        // concave edge: point must lie outside the disk
        if (norm(d) < a.radius - slack) return false;
        continue;
      }
      const double sw = arc_edge_sweep(a);
      const double ta = arg(a.a - a.center);
      double mx;
      if (sw >= kTwoPi - 1e-15 || ccw_delta(arg(d), ta) <= sw) {
        mx = norm(d);
      } else {
        mx = std::max(dot(d, unit(ta)), dot(d, unit(ta + sw)));
      }
      if (mx > a.radius + slack) return false;
    }
  }
  return true;
}

namespace {
double point_segment_distance(Point p, Point a, Point b) {
  const Vec2 d = b - a;
  const double l2 = dot(d, d);
  if (l2 <= 0) return dist(p, a);
  const double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
  return dist(p, a + t * d);
}
}  // namespace

double path_boundary_distance(const EdgePath& p, Point q) {
  double best = 1e300;
  for (const auto& e : p.edges) {
    if (auto* l = std::get_if<LineEdge>(&e)) {
      best = std::min(best, point_segment_distance(q, l->a, l->b));
    } else {
      const auto& a = std::get<ArcEdge>(e);
      const double sw = arc_edge_sweep(a);
      const double ta = arg(a.a - a.center);
      const Vec2 d = q - a.center;
      const double rel = a.ccw ? ccw_delta(arg(d), ta) : ccw_delta(ta, arg(d));
      if (rel <= sw)
        best = std::min(best, std::abs(norm(d) - a.radius));
      else
        best = std::min(best, std::min(dist(q, a.a), dist(q, a.b)));
    }
  }
  return best;
}

}  // namespace cpoly
