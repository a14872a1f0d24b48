#include <doctest.h>

#include <random>

#include "cpoly/figure.hpp"
#include "cpoly/shapes.hpp"
#include "oracles.hpp"

using namespace cpoly;

namespace {
const double kLensAreaPi = kPi / 2 - 1.0;  // lens L_pi, r = 1

Isometry random_rigid(std::mt19937_64& rng) {
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  return {norm_angle(u() * kTwoPi), {u() * 6 - 3, u() * 6 - 3}, u() < 0.25};
}
}  // namespace

TEST_CASE("areas of canonical figures") {
  CHECK(area(make_square(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(area(make_circle(1.0)) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(area(make_lens(1.0, kPi)) == doctest::Approx(kLensAreaPi).epsilon(1e-12));
  CHECK(area(make_stadium(1.0, 1.0)) == doctest::Approx(kPi + 2).epsilon(1e-12));
}

TEST_CASE("lens area against the Monte-Carlo oracle") {
  // membership is analytic (two disks), independent of chain code
  const double r = 1.0, omega = kPi;
  const double cy = r * std::cos(omega / 4);
  auto inside = [&](Point p) {
    return dist(p, {0, -cy}) <= r && dist(p, {0, cy}) <= r;
  };
  const auto est = oracles::mc_area(inside, {-1, -1}, {1, 1}, 1000000, 42);
  CHECK(std::abs(area(make_lens(1.0, kPi)) - est.value) < 3 * est.sigma);
}

TEST_CASE("signatures of canonical figures") {
  const Tolerance t;
  const auto s1 = signature(make_square(2.0), t);
  CHECK(s1.corners == doctest::Approx(kTwoPi));
  CHECK(s1.buckets.empty());
  CHECK(s1.seg_total == doctest::Approx(8.0));

  const auto s2 = signature(make_circle(1.5), t);
  CHECK(s2.corners == doctest::Approx(0.0));
  REQUIRE(s2.buckets.size() == 1);
  CHECK(s2.buckets[0].radius == doctest::Approx(1.5));
  CHECK(s2.buckets[0].sweep == doctest::Approx(kTwoPi));
  CHECK(s2.seg_total == doctest::Approx(0.0));

  const auto s3 = signature(make_lens(1.0, kPi), t);
  CHECK(s3.corners == doctest::Approx(kTwoPi - kPi));
  REQUIRE(s3.buckets.size() == 1);
  CHECK(s3.buckets[0].sweep == doctest::Approx(kPi));

  // signature totals always reach 2*pi
  CHECK(s1.total_turning() == doctest::Approx(kTwoPi));
  CHECK(s3.total_turning() == doctest::Approx(kTwoPi));
}

TEST_CASE("profile step map") {
  const auto p = profile(make_lens(2.0, kPi));
  CHECK(p(0.0) == doctest::Approx(kPi));       // corners only
  CHECK(p(1.9) == doctest::Approx(kPi));
  CHECK(p(2.0) == doctest::Approx(kTwoPi));    // right-continuous step
  CHECK(p(5.0) == doctest::Approx(kTwoPi));
  CHECK(profile(make_square(1.0)).limit() == doctest::Approx(kTwoPi));
}

TEST_CASE("stable boundary equivalence and the decision") {
  const Tolerance t;
  const auto sq = make_square(2.0);
  const auto rect = make_rect(1.0, 4.0);
  CHECK(boundary_stably_equidecomposable(sq, rect, t));
  CHECK(equidecomposable(sq, rect, t));

  const auto circ = make_circle(1.0);
  const auto lens = make_lens(1.0, kPi);
  CHECK_FALSE(boundary_stably_equidecomposable(circ, lens, t));

  std::mt19937_64 rng(3);
  const auto lens2 = transformed(lens, random_rigid(rng));
  CHECK(boundary_stably_equidecomposable(lens, lens2, t));
  CHECK(equidecomposable(lens, lens2, t));

  // circle vs equal-area square
  const auto sq_pi = make_square(std::sqrt(kPi));
  CHECK(std::abs(area(sq_pi) - area(circ)) < 1e-9);
  CHECK_FALSE(equidecomposable(circ, sq_pi, t));

  // stadium vs circle: same positive-radius buckets? no -- sweeps differ
  CHECK_FALSE(equidecomposable(make_stadium(1.0, 1.0), circ, t));
}

TEST_CASE("congruence finds witnesses") {
  const Tolerance t;
  const auto lens = make_lens(1.0, kPi);
  std::mt19937_64 rng(11);

  SUBCASE("rotated copy") {
    const Isometry m = make_rotation(1.0, {0.4, -0.2});
    const auto g = transformed(lens, m);
    const auto w = congruent(lens, g, t);
    REQUIRE(w.has_value());
    CHECK(oracles::witness_maps_onto(lens, g, *w, 1e-7));
  }
  SUBCASE("square vs rectangle is not congruent") {
    CHECK_FALSE(congruent(make_square(2.0), make_rect(1.0, 4.0), t).has_value());
  }
  SUBCASE("mirror image of an asymmetric figure") {
    // build an asymmetric convex polygon
    const auto poly = make_polygon({{0, 0}, {3, 0}, {4, 1}, {2, 3}, {0, 1}});
    const auto m = mirrored(poly);
    const auto w = congruent(poly, m, t);
    REQUIRE(w.has_value());
    CHECK(w->reflect);
    CHECK(oracles::witness_maps_onto(poly, m, *w, 1e-7));
  }
  SUBCASE("lens vs its mirror via a symmetry axis") {
    const auto m = mirrored(lens);
    const auto w = congruent(lens, m, t);
    REQUIRE(w.has_value());
    CHECK(oracles::witness_maps_onto(lens, m, *w, 1e-7));
  }
  SUBCASE("random figure congruent to itself transformed") {
    for (int it = 0; it < 20; ++it) {
      const auto m = random_rigid(rng);
      const auto g = transformed(lens, m);
      const auto w = congruent(lens, g, t);
      REQUIRE(w.has_value());
      CHECK(oracles::witness_maps_onto(lens, g, *w, 1e-7));
    }
  }
}

TEST_CASE("diameter and width") {
  CHECK(diameter(make_circle(1.0)) == doctest::Approx(2.0));
  CHECK(width(make_circle(1.0)) == doctest::Approx(2.0));
  CHECK(diameter(make_square(1.0)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(width(make_square(1.0)) == doctest::Approx(1.0));

  const auto lens = make_lens(1.0, kPi);
  CHECK(diameter(lens) == doctest::Approx(std::sqrt(2.0)));
  CHECK(width(lens) == doctest::Approx(2.0 - std::sqrt(2.0)));

  // cross-check with the sampled oracle
  const auto [wmin, wmax] = oracles::sampled_breadth(lens, 100000);
  CHECK(diameter(lens) == doctest::Approx(wmax).epsilon(1e-6));
  CHECK(width(lens) == doctest::Approx(wmin).epsilon(1e-6));
}

TEST_CASE("containment") {
  const auto st = make_stadium(1.0, 2.0);
  CHECK(chain_contains(st, {0, 0}));
  CHECK(chain_contains(st, {1.9, 0}));
  CHECK_FALSE(chain_contains(st, {2.1, 0}));
  CHECK_FALSE(chain_contains(st, {0, 1.1}));
  CHECK(chain_contains(st, {0, 0.99}));
}

TEST_CASE("hausdorff distance") {
  const auto c1 = make_circle(1.0);
  const auto c2 = make_circle(1.1);
  CHECK(hausdorff_distance(c1, c1) == doctest::Approx(0.0));
  CHECK(hausdorff_distance(c1, c2) == doctest::Approx(0.1));

  const auto sq = make_square(2.0, {-1, -1});  // centered, side 2
  CHECK(hausdorff_distance(sq, c1) == doctest::Approx(std::sqrt(2.0) - 1));
}

TEST_CASE("isometry invariance of figure metrics") {
  std::mt19937_64 rng(17);
  const auto figs = {make_square(2.0), make_lens(1.0, kPi),
                     make_stadium(0.7, 1.3)};
  for (const auto& f : figs) {
    for (int it = 0; it < 10; ++it) {
      const auto m = random_rigid(rng);
      const auto g = transformed(f, m);
      CHECK(area(g) == doctest::Approx(area(f)).epsilon(1e-10));
      CHECK(diameter(g) == doctest::Approx(diameter(f)).epsilon(1e-10));
      CHECK(width(g) == doctest::Approx(width(f)).epsilon(1e-10));
      CHECK(boundary_stably_equidecomposable(f, g));
    }
  }
}

TEST_CASE("moments match the Monte-Carlo oracle") {
  const auto st = make_stadium(1.0, 2.0);
  const auto m = moments(st);
  const auto inside = [&](Point p) { return chain_contains(st, p); };
  const auto est = oracles::mc_area(inside, {-2.2, -1.2}, {2.2, 1.2}, 400000, 5);
  CHECK(std::abs(m.a - est.value) < 3 * est.sigma);
  CHECK(m.a == doctest::Approx(area(st)).epsilon(1e-12));
  // symmetric figure: centroid at origin, products vanish
  CHECK(std::abs(m.centroid().x) < 1e-12);
  CHECK(std::abs(m.centroid().y) < 1e-12);
  const double cxy = m.sxy - m.a * m.centroid().x * m.centroid().y;
  CHECK(std::abs(cxy) < 1e-12);
}

TEST_CASE("canonical pose is deterministic and isometry-invariant") {
  std::mt19937_64 rng(23);
  const auto figs = {make_lens(1.0, kPi), make_stadium(0.7, 1.3),
                     make_square(2.0)};
  for (const auto& f : figs) {
    const auto base = canonical_pose(f);
    for (int it = 0; it < 8; ++it) {
      Isometry m = random_rigid(rng);
      m.reflect = false;  // canonical pose does not undo reflections
      const auto g = canonical_pose(transformed(f, m));
      CHECK(hausdorff_distance(base, g) < 1e-7);
    }
  }
}

TEST_CASE("area positivity on assorted figures") {
  for (const auto& f : {make_square(0.3), make_lens(2.0, 0.8),
                        make_stadium(0.2, 5.0), make_circle(0.05)})
    CHECK(area(f) > 0.0);
}
