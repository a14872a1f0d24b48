#include "cpoly/figure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cpoly {

namespace {

// Moments of the triangle (0, p, q), signed by orientation.
Moments triangle_moments(Vec2 p, Vec2 q) {
  Moments m;
  const double a2 = cross(p, q);  // twice signed area
  m.a = a2 / 2.0;
  m.mx = a2 * (p.x + q.x) / 6.0;
  m.my = a2 * (p.y + q.y) / 6.0;
  m.sxx = a2 * (p.x * p.x + p.x * q.x + q.x * q.x) / 12.0;
  m.syy = a2 * (p.y * p.y + p.y * q.y + q.y * q.y) / 12.0;
  m.sxy = a2 * (2 * p.x * p.y + 2 * q.x * q.y + p.x * q.y + q.x * p.y) / 24.0;
  return m;
}

// Moments of a circular sector of half-angle g about its center, bisector
// along +x.
Moments sector_moments_local(double r, double g) {
  Moments m;
  m.a = r * r * g;
  m.mx = (2.0 / 3.0) * r * r * r * std::sin(g);
  m.my = 0.0;
  const double r4 = r * r * r * r;
  m.sxx = (r4 / 4.0) * (g + std::sin(g) * std::cos(g));
  m.syy = (r4 / 4.0) * (g - std::sin(g) * std::cos(g));
  m.sxy = 0.0;
  return m;
}

// Circular segment between chord (pa -> pb) and the ccw arc around c.
Moments segment_moments(Point c, double r, double ang0, double sweep) {
  const double g = sweep / 2.0;
  const double bisector = ang0 + g;
  Moments sector = sector_moments_local(r, g).rotated(bisector).translated(c);
  const Vec2 pa = r * unit(ang0);
  const Vec2 pb = r * unit(ang0 + sweep);
  Moments tri = triangle_moments(pa, pb).translated(c);
  Moments m;
  m.a = sector.a - tri.a;
  m.mx = sector.mx - tri.mx;
  m.my = sector.my - tri.my;
  m.sxx = sector.sxx - tri.sxx;
  m.sxy = sector.sxy - tri.sxy;
  m.syy = sector.syy - tri.syy;
  return m;
}

}  // namespace

Moments& Moments::operator+=(const Moments& o) {
  a += o.a; mx += o.mx; my += o.my;
  sxx += o.sxx; sxy += o.sxy; syy += o.syy;
  return *this;
}

Moments Moments::rotated(double angle) const {
  const double c = std::cos(angle), s = std::sin(angle);
  Moments m;
  m.a = a;
  m.mx = c * mx - s * my;
  m.my = s * mx + c * my;
  m.sxx = c * c * sxx - 2 * c * s * sxy + s * s * syy;
  m.syy = s * s * sxx + 2 * c * s * sxy + c * c * syy;
  m.sxy = c * s * (sxx - syy) + (c * c - s * s) * sxy;
  return m;
}

Moments Moments::translated(Vec2 t) const {
  Moments m = *this;
  m.sxx = sxx + 2 * t.x * mx + t.x * t.x * a;
  m.syy = syy + 2 * t.y * my + t.y * t.y * a;
  m.sxy = sxy + t.x * my + t.y * mx + t.x * t.y * a;
  m.mx = mx + t.x * a;
  m.my = my + t.y * a;
  return m;
}

double area(const ConvexChain& c) {
  require_valid(c);
  const auto poses = element_poses(c);
  double s2 = 0.0;  // twice the shoelace area of the breakpoint polygon
  double corr = 0.0;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    s2 += cross(poses[i].point, poses[i + 1].point);
    if (auto* a = std::get_if<Arc>(&c.elements[i]))
      corr += a->radius * a->radius * (a->sweep - std::sin(a->sweep)) / 2.0;
  }
  return s2 / 2.0 + corr;
}

Moments moments(const ConvexChain& c) {
  require_valid(c);
  const auto poses = element_poses(c);
  Moments m;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    m += triangle_moments(poses[i].point, poses[i + 1].point);
    if (auto* a = std::get_if<Arc>(&c.elements[i])) {
      const Point ctr = poses[i].point + a->radius * unit(poses[i].heading + kPi / 2);
      m += segment_moments(ctr, a->radius, poses[i].heading - kPi / 2, a->sweep);
    }
  }
  return m;
}

Point centroid(const ConvexChain& c) { return moments(c).centroid(); }

// ---- support structure ----------------------------------------------------

SupportMap support_map(const ConvexChain& c) {
  require_valid(c);
  const auto poses = element_poses(c);
  SupportMap m;
  m.nu_base = poses[0].heading - kPi / 2;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    SupportFeature f;
    f.element = i;
    const double nu = poses[i].heading - kPi / 2;
    if (auto* s = std::get_if<Seg>(&c.elements[i])) {
      (void)s;
      f.kind = SupportFeature::seg_feat;
      f.nu0 = f.nu1 = nu;
      f.point = poses[i].point;
      f.point2 = poses[i + 1].point;
    } else if (auto* a = std::get_if<Arc>(&c.elements[i])) {
      f.kind = SupportFeature::arc_feat;
      f.nu0 = nu;
      f.nu1 = nu + a->sweep;
      f.center = poses[i].point + a->radius * unit(poses[i].heading + kPi / 2);
      f.radius = a->radius;
    } else {
      f.kind = SupportFeature::vertex;
      f.nu0 = nu;
      f.nu1 = nu + std::get<Corner>(c.elements[i]).turn;
      f.point = poses[i].point;
    }
    m.features.push_back(f);
  }
  return m;
}

const SupportFeature& SupportMap::at(double normal_angle) const {
  const double x = nu_base + norm_angle(normal_angle - nu_base);
  // Features tile [nu_base, nu_base + 2*pi] contiguously (segments as
  // degenerate points), so the last feature with nu0 <= x covers x.
  std::size_t lo = 0, hi = features.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (features[mid].nu0 <= x) lo = mid;
    else hi = mid;
  }
  return features[lo];
}

double SupportMap::height(double normal_angle) const {
  const auto& f = at(normal_angle);
  const Vec2 u = unit(normal_angle);
  switch (f.kind) {
    case SupportFeature::arc_feat: return dot(f.center, u) + f.radius;
    case SupportFeature::seg_feat: return dot(f.point, u);
    default: return dot(f.point, u);
  }
}

Point SupportMap::support_point(double normal_angle) const {
  const auto& f = at(normal_angle);
  switch (f.kind) {
    case SupportFeature::arc_feat:
      return f.center + f.radius * unit(normal_angle);
    case SupportFeature::seg_feat:
      return (f.point + f.point2) / 2.0;
    default:
      return f.point;
  }
}

namespace {

struct SupportRef {
  Point base;     // vertex or center
  double radius;  // 0 for vertices/segments
};

SupportRef ref_at(const SupportMap& m, double theta) {
  const auto& f = m.at(theta);
  if (f.kind == SupportFeature::arc_feat) return {f.center, f.radius};
  return {f.point, 0.0};
}

// Breadth extremes via exact piecewise-sinusoid optimization: on every
// interval of constant support features, breadth(t) = |d| cos(t - arg d) + C.
std::pair<double, double> breadth_extremes(const ConvexChain& c) {
  const SupportMap m = support_map(c);
  std::vector<double> cuts;
  for (const auto& f : m.features) {
    cuts.push_back(norm_angle(f.nu0));
    cuts.push_back(norm_angle(f.nu0 + kPi));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(cuts.front() + kTwoPi);

  double bmin = std::numeric_limits<double>::infinity();
  double bmax = 0.0;
  auto consider = [&](double b) {
    bmin = std::min(bmin, b);
    bmax = std::max(bmax, b);
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double t0 = cuts[i], t1 = cuts[i + 1];
    const double tm = (t0 + t1) / 2.0;
    const SupportRef r1 = ref_at(m, tm);
    const SupportRef r2 = ref_at(m, tm + kPi);
    const Vec2 d = r1.base - r2.base;
    const double C = r1.radius + r2.radius;
    auto breadth = [&](double t) { return dot(d, unit(t)) + C; };
    consider(breadth(t0));
    consider(breadth(t1));
    const double phi = arg(d);
    for (double cand : {phi, phi + kPi}) {
      const double tc = t0 + norm_angle(cand - t0);
      if (tc > t0 && tc < t1) consider(breadth(tc));
    }
  }
  return {bmin, bmax};
}

}  // namespace

double diameter(const ConvexChain& c) { return breadth_extremes(c).second; }
double width(const ConvexChain& c) { return breadth_extremes(c).first; }

bool chain_contains(const SupportMap& m, Point p, double slack) {
  for (const auto& f : m.features) {
    const Vec2 d = (f.kind == SupportFeature::arc_feat) ? p - f.center
                                                        : p - f.point;
    const double r = (f.kind == SupportFeature::arc_feat) ? f.radius : 0.0;
    // max over the closed normal cone of dot(d, u(theta))
    double mx = std::max(dot(d, unit(f.nu0)), dot(d, unit(f.nu1)));
    const double phi = arg(d);
    if (f.nu1 - f.nu0 >= kTwoPi - 1e-15 ||
        norm_angle(phi - f.nu0) <= f.nu1 - f.nu0)
      mx = norm(d);
    if (mx > r + slack) return false;
  }
  return true;
}

bool chain_contains(const ConvexChain& c, Point p, double slack) {
  return chain_contains(support_map(c), p, slack);
}

double hausdorff_distance(const ConvexChain& f, const ConvexChain& g) {
  require_valid(f);
  require_valid(g);
  const SupportMap mf = support_map(f), mg = support_map(g);
  auto gap = [&](double t) { return std::abs(mf.height(t) - mg.height(t)); };

  std::vector<double> cand;
  for (const auto& ft : mf.features) cand.push_back(norm_angle(ft.nu0));
  for (const auto& ft : mg.features) cand.push_back(norm_angle(ft.nu0));
  const int kDense = 4096;
  for (int i = 0; i < kDense; ++i) cand.push_back(kTwoPi * i / kDense);

  double best = 0.0, best_t = 0.0;
  for (double t : cand) {
    const double v = gap(t);
    if (v > best) { best = v; best_t = t; }
  }
  // golden-section refinement around the best sample
  double lo = best_t - kTwoPi / kDense, hi = best_t + kTwoPi / kDense;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = gap(x1), f2 = gap(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = gap(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = gap(x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

// ---- canonical pose --------------------------------------------------------

namespace {

// Lexicographic key of an element for the combinatorial anchor.
std::array<double, 3> element_key(const ChainElement& e) {
  if (auto* s = std::get_if<Seg>(&e)) return {0.0, s->len, 0.0};
  if (auto* a = std::get_if<Arc>(&e)) return {1.0, a->radius, a->sweep};
  return {2.0, std::get<Corner>(e).turn, 0.0};
}

std::size_t min_cyclic_rotation(const std::vector<ChainElement>& els) {
  const std::size_t n = els.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto ka = element_key(els[(k + i) % n]);
      const auto kb = element_key(els[(best + i) % n]);
      if (ka < kb) { best = k; break; }
      if (kb < ka) break;
    }
  }
  return best;
}

}  // namespace

ConvexChain canonical_pose(const ConvexChain& raw, const Tolerance& t) {
  ConvexChain c = normalized(raw, t);
  require_valid(c, t);
  const Moments m = moments(c);
  const Point g = m.centroid();
  const double cxx = m.sxx - m.a * g.x * g.x;
  const double cyy = m.syy - m.a * g.y * g.y;
  const double cxy = m.sxy - m.a * g.x * g.y;

  const double scale2 = std::pow(chain_scale(c), 4);
  double rot;
  if (std::abs(cxx - cyy) <= 1e-9 * scale2 && std::abs(cxy) <= 1e-9 * scale2) {
    // inertia-degenerate: anchor on the lexicographically minimal element
    const std::size_t k = min_cyclic_rotation(c.elements);
    const auto poses = element_poses(c);
    rot = -poses[k].heading;
  } else {
    rot = -0.5 * std::atan2(2 * cxy, cxx - cyy);
    // after rotating by rot, ensure the major axis lies on x
    const double cs = std::cos(rot), sn = std::sin(rot);
    const double nxx = cs * cs * cxx - 2 * cs * sn * cxy + sn * sn * cyy;
    const double nyy = sn * sn * cxx + 2 * cs * sn * cxy + cs * cs * cyy;
    if (nxx < nyy) rot += kPi / 2;
  }

  Isometry pose = compose(make_rotation(rot), make_translation(-g));
  ConvexChain posed = transformed(c, pose);

  // resolve the remaining half-turn ambiguity by support samples
  ConvexChain flipped = transformed(posed, make_rotation(kPi));
  const SupportMap ma = support_map(posed), mb = support_map(flipped);
  for (int i = 0; i < 64; ++i) {
    const double theta = kTwoPi * i / 64;
    const double ha = ma.height(theta), hb = mb.height(theta);
    if (ha > hb + t.eps_len) break;
    if (hb > ha + t.eps_len) { posed = flipped; break; }
  }
  return posed;
}

// ---- congruence and the decision -------------------------------------------

namespace {

bool elements_match(const ChainElement& a, const ChainElement& b,
                    const Tolerance& t, double scale) {
  if (a.index() != b.index()) return false;
  if (auto* s = std::get_if<Seg>(&a))
    return std::abs(s->len - std::get<Seg>(b).len) <= t.eps_len * scale;
  if (auto* ar = std::get_if<Arc>(&a)) {
    const auto& br = std::get<Arc>(b);
    return std::abs(ar->radius - br.radius) <= t.eps_len * scale &&
           std::abs(ar->sweep - br.sweep) <= t.eps_ang;
  }
  return std::abs(std::get<Corner>(a).turn - std::get<Corner>(b).turn) <=
         t.eps_ang;
}

std::optional<Isometry> match_direct(const ConvexChain& f,
                                     const ConvexChain& g,
                                     const Tolerance& t) {
  const std::size_t n = f.elements.size();
  if (n != g.elements.size()) return std::nullopt;
  const double scale = std::max(chain_scale(f), chain_scale(g));
  const auto pf = element_poses(f);
  const auto pg = element_poses(g);
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = elements_match(f.elements[i], g.elements[(i + k) % n], t, scale);
    if (!ok) continue;
    // candidate isometry: map f's pose 0 to g's pose k
    const double rot = pg[k].heading - pf[0].heading;
    Isometry m = compose(
        make_translation(pg[k].point),
        compose(make_rotation(rot), make_translation(-pf[0].point)));
    // verify pointwise on the element boundaries
    bool fits = true;
    for (std::size_t i = 0; i <= n && fits; ++i) {
      const Point mapped = m(pf[i].point);
      const Point want = pg[(k + i) % n].point;
      fits = dist(mapped, want) <= 64 * t.eps_len * scale;
    }
    if (fits) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Isometry> congruent(const ConvexChain& fraw,
                                  const ConvexChain& graw, const Tolerance& t) {
  require_valid(fraw, t);
  require_valid(graw, t);
  const ConvexChain f = normalized(fraw, t);
  const ConvexChain g = normalized(graw, t);
  if (auto m = match_direct(f, g, t)) return m;
  const ConvexChain fm = normalized(mirrored(f), t);
  if (auto m = match_direct(fm, g, t)) {
    // m maps mirror(f) onto g, so the full witness is m after the mirror
    return compose(*m, Isometry{0.0, {0, 0}, true});
  }
  return std::nullopt;
}

bool equidecomposable(const ConvexChain& f, const ConvexChain& g,
                      const Tolerance& t) {
  const double sf = area(f), sg = area(g);
  const double scale = std::max({1.0, sf, sg});
  if (std::abs(sf - sg) > t.eps_area * scale) return false;
  return boundary_stably_equidecomposable(f, g, t);
}

}  // namespace cpoly
