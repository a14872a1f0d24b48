#include <doctest.h>

#include <random>

#include "cpoly/oval.hpp"
#include "cpoly/shapes.hpp"
#include "cpoly/transform.hpp"
#include "oracles.hpp"

using namespace cpoly;

namespace {
ArcSignature sig_of(double corners, std::vector<RadiusBucket> buckets,
                    double segs = 0.0) {
  ArcSignature s;
  s.corners = corners;
  s.buckets = std::move(buckets);
  s.seg_total = segs;
  return s;
}

ArcSignature random_step_profile(std::mt19937_64& rng) {
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  const int n = 1 + int(u() * 3);
  double corners = (u() < 0.3) ? 0.0 : u() * (kTwoPi - 0.6);
  std::vector<RadiusBucket> buckets;
  double left = kTwoPi - corners;
  double r = 0.2 + u();
  for (int i = 0; i < n; ++i) {
    const double sweep = (i + 1 == n) ? left : left * (0.2 + 0.6 * u());
    buckets.push_back({r, sweep});
    left -= sweep;
    r += 0.3 + u();
  }
  return sig_of(corners, buckets);
}
}  // namespace

TEST_CASE("oval of a circle profile is the circle") {
  const auto v = oval_from_profile(sig_of(0.0, {{1.5, kTwoPi}}));
  CHECK(validate(v.chain).ok());
  REQUIRE(congruent(v.chain, make_circle(1.5)).has_value());
  CHECK(v.axis_a_half == doctest::Approx(1.5));
  CHECK(v.axis_b_half == doctest::Approx(1.5));
}

TEST_CASE("oval of a lens profile is the lens") {
  const double omega = kPi;
  const auto v = oval_from_profile(sig_of(kTwoPi - omega, {{1.0, omega}}));
  CHECK(validate(v.chain).ok());
  CHECK(congruent(v.chain, make_lens(1.0, omega)).has_value());
}

TEST_CASE("polygon profile has no oval") {
  CHECK_THROWS_AS((void)oval_from_profile(sig_of(kTwoPi, {}, 4.0)), Error);
  try {
    (void)oval_from_profile(sig_of(kTwoPi, {}, 4.0));
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::no_oval_exists);
  }
}

TEST_CASE("profile fixpoint and uniqueness on random step profiles") {
  std::mt19937_64 rng(2024);
  const Tolerance t;
  for (int it = 0; it < 50; ++it) {
    const auto sig = random_step_profile(rng);
    const auto v = oval_from_profile(sig, t);
    CHECK(validate(v.chain, t).ok());
    const auto back = signature(v.chain, t);
    CHECK(back.seg_total == doctest::Approx(0.0));
    CHECK(back.corners == doctest::Approx(sig.corners).epsilon(1e-9));
    REQUIRE(back.buckets.size() == sig.buckets.size());
    for (std::size_t i = 0; i < sig.buckets.size(); ++i) {
      CHECK(back.buckets[i].radius ==
            doctest::Approx(sig.buckets[i].radius).epsilon(1e-9));
      CHECK(back.buckets[i].sweep ==
            doctest::Approx(sig.buckets[i].sweep).epsilon(1e-9));
    }
    // uniqueness: rebuilding yields a congruent figure
    const auto v2 = oval_from_profile(back, t);
    CHECK(congruent(v.chain, v2.chain, t).has_value());
    // both recognition routes agree
    CHECK(is_oval(v.chain, t));
    CHECK(is_oval_structural(v.chain, t));
  }
}

TEST_CASE("oval recognition rejects non-ovals") {
  const Tolerance t;
  CHECK(is_oval(make_circle(2.0), t));
  CHECK(is_oval(make_lens(1.0, kPi), t));
  CHECK_FALSE(is_oval(make_stadium(1.0, 1.0), t));  // segments on boundary
  CHECK_FALSE(is_oval(make_square(1.0), t));        // polygon class
  CHECK(is_oval_structural(make_circle(2.0), t));
  CHECK_FALSE(is_oval_structural(make_stadium(1.0, 1.0), t));

  // two-arc egg: one symmetry axis only
  ConvexChain egg;
  egg.start = {0, 0};
  egg.heading = kPi / 2;
  egg.elements = {Arc{1.0, kPi}, Arc{2.0, kPi}};
  // that chain does not close; build a proper egg-like figure instead:
  // half circle r=1 joined to half circle r=1 is a circle; use corners.
  CHECK(validate(egg).violations.size() > 0);
}

TEST_CASE("three-radius oval direct clause check") {
  const auto v = oval_from_profile(
      sig_of(0.0, {{1.0, kTwoPi / 3}, {2.0, kTwoPi / 3}, {3.0, kTwoPi / 3}}));
  CHECK(is_oval_structural(v.chain));
  CHECK(uniquely_composed(v.chain));
}

TEST_CASE("uniquely composed: circle yes, square no") {
  CHECK(uniquely_composed(make_circle(1.0)));
  CHECK_FALSE(uniquely_composed(make_square(1.0)));
}

TEST_CASE("r_offset basics") {
  const Tolerance t;
  const auto sq = make_square(2.0);
  const auto off = r_offset(sq, 1.0, t);
  CHECK(validate(off, t).ok());
  CHECK(area(off) == doctest::Approx(4.0 + 8.0 + kPi).epsilon(1e-12));
  // Monte-Carlo oracle: distance to the square is analytic
  auto inside = [&](Point p) {
    const double dx = std::max({0.0 - p.x, p.x - 2.0, 0.0});
    const double dy = std::max({0.0 - p.y, p.y - 2.0, 0.0});
    return dx * dx + dy * dy <= 1.0;
  };
  const auto est = oracles::mc_area(inside, {-1, -1}, {3, 3}, 500000, 9);
  CHECK(std::abs(area(off) - est.value) < 3 * est.sigma);

  const auto circ = r_offset(make_circle(1.0), 0.5, t);
  CHECK(congruent(circ, make_circle(1.5), t).has_value());

  const auto lens_off = r_offset(make_lens(1.0, kPi), 1.0, t);
  const auto s = signature(lens_off, t);
  REQUIRE(s.buckets.size() == 2);
  CHECK(s.buckets[0].radius == doctest::Approx(1.0));
  CHECK(s.buckets[0].sweep == doctest::Approx(kPi));
  CHECK(s.buckets[1].radius == doctest::Approx(2.0));
  CHECK(s.buckets[1].sweep == doctest::Approx(kPi));
  CHECK(s.corners == doctest::Approx(0.0));
}

TEST_CASE("inner_polygon inverts r_offset") {
  const Tolerance t;
  const auto sq = make_square(2.0);
  const auto off = r_offset(sq, 1.0, t);
  const auto back = inner_polygon(off, 1.0, t);
  CHECK(congruent(back, sq, t).has_value());

  // stadium shrunk by half its radius stays a valid rounded stadium
  const auto st = make_stadium(1.0, 2.0);
  const auto half = inner_polygon(st, 0.5, t);
  CHECK(validate(half, t).ok());
  CHECK(congruent(half, make_stadium(0.5, 2.0), t).has_value());
}

TEST_CASE("inner_polygon degenerate cores are reported") {
  const Tolerance t;
  auto expect_code = [&](auto fn, ErrorCode code) {
    try {
      (void)fn();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == code);
    }
  };
  expect_code([&] { return inner_polygon(make_circle(1.0), 1.0, t); },
              ErrorCode::degenerate_core);
  expect_code([&] { return inner_polygon(make_stadium(1.0, 2.0), 1.0, t); },
              ErrorCode::degenerate_core);
  expect_code([&] { return inner_polygon(make_circle(1.0), 2.0, t); },
              ErrorCode::radius_too_small);
}

TEST_CASE("offset round trip on random figures") {
  std::mt19937_64 rng(7);
  const Tolerance t;
  for (int it = 0; it < 20; ++it) {
    const auto sig = random_step_profile(rng);
    const auto v = oval_from_profile(sig, t);
    for (double r : {0.1, 1.0}) {
      const auto off = r_offset(v.chain, r, t);
      const auto back = inner_polygon(off, r, t);
      CHECK(congruent(back, v.chain, t).has_value());
      const double steiner =
          area(v.chain) + perimeter(v.chain) * r + kPi * r * r;
      CHECK(area(off) == doctest::Approx(steiner).epsilon(1e-9));
    }
  }
}

TEST_CASE("both oval routes agree on random class members") {
  const Tolerance t;
  // generated members of a lens class are rarely the lens itself; the
  // constructive and the structural route must agree either way
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ArcSignature sig;
    sig.corners = kPi;
    sig.buckets = {{1.0, kPi}};
    ConvexChain m;
    try {
      m = random_centrally_symmetric(sig, seed, t);
    } catch (const Error&) { continue; }
    CHECK(is_oval(m, t) == is_oval_structural(m, t));
  }
}
