#include <doctest.h>

#include <random>

#include "cpoly/geom.hpp"

using namespace cpoly;

namespace {
Isometry random_isometry(std::mt19937_64& rng) {
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  return {norm_angle(u() * kTwoPi), {u() * 10 - 5, u() * 10 - 5}, u() < 0.5};
}
Point random_point(std::mt19937_64& rng) {
  auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
  return {u() * 10 - 5, u() * 10 - 5};
}
}  // namespace

TEST_CASE("isometry basics") {
  const Isometry id = identity_isometry();
  CHECK(dist(id({1, 2}), {1, 2}) == doctest::Approx(0));

  const Isometry rot_pi = make_rotation(kPi);
  CHECK(dist(rot_pi({1, 0}), {-1, 0}) < 1e-15);

  const Isometry tr = make_translation({3, 4});
  CHECK(dist(tr({0, 0}), {3, 4}) == doctest::Approx(0));

  // rotation pi/2 twice is rotation pi
  const Isometry q = make_rotation(kPi / 2);
  const Isometry qq = compose(q, q);
  CHECK(qq.rotation == doctest::Approx(kPi));
  CHECK_FALSE(qq.reflect);

  // reflect twice is the identity
  const Isometry m{0.7, {1, -2}, true};
  const Isometry mm = compose(m, m);
  Point p{0.3, 1.9};
  CHECK(dist(mm(p), m(m(p))) < 1e-12);
  CHECK_FALSE(mm.reflect);
}

TEST_CASE("isometries preserve distance, compose associatively, invert") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Isometry a = random_isometry(rng);
    const Isometry b = random_isometry(rng);
    const Isometry c = random_isometry(rng);
    const Point p = random_point(rng), q = random_point(rng);

    CHECK(std::abs(dist(a(p), a(q)) - dist(p, q)) < 1e-12);

    const Isometry ab_c = compose(compose(a, b), c);
    const Isometry a_bc = compose(a, compose(b, c));
    CHECK(dist(ab_c(p), a_bc(p)) < 1e-9);
    CHECK(dist(compose(a, b)(p), a(b(p))) < 1e-12);

    const Isometry inv = inverse(a);
    CHECK(dist(inv(a(p)), p) < 1e-9);
    CHECK(dist(a(inv(p)), p) < 1e-9);
  }
}

TEST_CASE("angle helpers") {
  CHECK(norm_angle(-0.1) == doctest::Approx(kTwoPi - 0.1));
  CHECK(norm_angle(kTwoPi) == doctest::Approx(0));
  CHECK(angle_diff(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
  CHECK(ccw_delta(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
}
