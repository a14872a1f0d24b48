#include "cpoly/shapes.hpp"

#include "cpoly/geom.hpp"

namespace cpoly {

ConvexChain make_polygon(const std::vector<Point>& v) {
  ConvexChain c;
  const std::size_t n = v.size();
  if (n < 3) throw Error(ErrorCode::bad_input, "polygon needs 3+ vertices");
  c.start = v[0];
  c.heading = norm_angle(arg(v[1] - v[0]));
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    const Point nxt = v[(i + 2) % n];
    c.elements.push_back(Seg{dist(a, b)});
    c.elements.push_back(Corner{ccw_delta(arg(nxt - b), arg(b - a))});
  }
  return c;
}

ConvexChain make_rect(double w, double h, Point corner) {
  return make_polygon({corner,
                       {corner.x + w, corner.y},
                       {corner.x + w, corner.y + h},
                       {corner.x, corner.y + h}});
}

ConvexChain make_circle(double r, Point center) {
  ConvexChain c;
  c.start = {center.x + r, center.y};
  c.heading = kPi / 2;
  c.elements.push_back(Arc{r, kTwoPi});
  return c;
}

ConvexChain make_lens(double r, double omega) {
  if (omega <= 0 || omega > kTwoPi)
    throw Error(ErrorCode::bad_input, "lens arc measure must be in (0, 2*pi]");
  if (omega >= kTwoPi - 1e-15) return make_circle(r);
  const double sweep = omega / 2.0;  // per arc
  ConvexChain c;
  c.start = {r * std::sin(sweep / 2.0), 0.0};  // right tip
  c.heading = norm_angle(kPi - sweep / 2.0);
  const double corner_turn = (kTwoPi - omega) / 2.0;
  c.elements = {Arc{r, sweep}, Corner{corner_turn}, Arc{r, sweep},
                Corner{corner_turn}};
  return c;
}

ConvexChain make_stadium(double r, double len) {
  ConvexChain c;
  c.start = {-len / 2.0, -r};
  c.heading = 0.0;
  c.elements = {Seg{len}, Arc{r, kPi}, Seg{len}, Arc{r, kPi}};
  return c;
}

}  // namespace cpoly
