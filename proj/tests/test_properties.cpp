#include <doctest.h>

#include <random>

#include "cpoly/oval.hpp"
#include "cpoly/shapes.hpp"
#include "cpoly/transform.hpp"

using namespace cpoly;

namespace {
ArcSignature lens_sig(double r, double omega, double segs = 0.0) {
  ArcSignature s;
  s.corners = kTwoPi - omega;
  s.buckets = {{r, omega}};
  s.seg_total = segs;
  return s;
}
}  // namespace

TEST_CASE("equidecomposable is reflexive and symmetric") {
  const Tolerance t;
  std::vector<ConvexChain> figs;
  for (std::uint64_t s = 0; s < 8; ++s) {
    figs.push_back(random_centrally_symmetric(lens_sig(1.0, kPi, 1.0), s, t));
    figs.push_back(random_convex_polygon(s, 5, -1.0));
  }
  for (const auto& f : figs) CHECK(equidecomposable(f, f, t));
  for (std::size_t i = 0; i < figs.size(); ++i)
    for (std::size_t j = i + 1; j < figs.size(); ++j)
      CHECK(equidecomposable(figs[i], figs[j], t) ==
            equidecomposable(figs[j], figs[i], t));
}

TEST_CASE("equidecomposable is transitive within a signature class") {
  const Tolerance t;
  // three equal-area members of the lens class
  const auto f = random_centrally_symmetric(lens_sig(1.0, kPi), 1, t);
  auto g = random_centrally_symmetric(lens_sig(1.0, kPi), 2, t);
  auto h = random_centrally_symmetric(lens_sig(1.0, kPi), 3, t);
  const double target = std::max({area(f), area(g), area(h)}) + 0.2;
  const auto fe = insert_segment_pair(f, target - area(f), 4, t);
  const auto ge = insert_segment_pair(g, target - area(g), 5, t);
  const auto he = insert_segment_pair(h, target - area(h), 6, t);
  CHECK(equidecomposable(fe, ge, t));
  CHECK(equidecomposable(ge, he, t));
  CHECK(equidecomposable(fe, he, t));
}

TEST_CASE("congruence implies equidecomposability") {
  const Tolerance t;
  std::mt19937_64 rng(5);
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto f = random_centrally_symmetric(lens_sig(1.0, kPi / 2, 0.8), s, t);
    const Isometry m{norm_angle(u() * kTwoPi), {u() * 4 - 2, u() * 4 - 2},
                     u() < 0.5};
    const auto g = transformed(f, m);
    REQUIRE(congruent(f, g, t).has_value());
    CHECK(equidecomposable(f, g, t));
  }
}

TEST_CASE("offsets of polygons always enclose the full disk area") {
  const Tolerance t;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_convex_polygon(s, 4, -1.0);
    for (double r : {0.3, 2.0}) {
      const double off = area(r_offset(p, r, t));
      CHECK(off > kPi * r * r);  // equality would need a degenerate core
    }
  }
}

TEST_CASE("doubled halves conserve total area on random figures") {
  const Tolerance t;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto f = random_centrally_symmetric(lens_sig(1.0, kPi, 1.0), s, t);
    const auto bal = balance_points(f, t);
    CHECK(std::abs(bal.alpha - bal.beta) <= 1e-9);
    const auto [fm, fp] = double_figure(f, bal.a, bal.b, t);
    CHECK(area(fm) + area(fp) == doctest::Approx(2 * area(f)).epsilon(1e-9));
  }
}
