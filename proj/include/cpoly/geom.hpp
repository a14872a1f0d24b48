#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cpoly {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

using Point = Vec2;

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }  // rotate +90 degrees
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double arg(Vec2 v) { return std::atan2(v.y, v.x); }

/// Normalize an angle into [0, 2*pi).
inline double norm_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

/// Signed smallest difference a-b, in (-pi, pi].
inline double angle_diff(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  if (d > kPi) d -= kTwoPi;
  return d;
}

/// Counterclockwise angular distance from b to a, in [0, 2*pi).
inline double ccw_delta(double a, double b) { return norm_angle(a - b); }

/// Absolute tolerances threaded through every predicate.
struct Tolerance {
  double eps_len = 1e-9;
  double eps_ang = 1e-9;
  double eps_area = 1e-9;
};

enum class ErrorCode {
  invalid_chain,
  no_oval_exists,
  radius_too_small,
  degenerate_core,
  not_centrally_symmetric,
  not_a_pair,
  not_corners,
  fold_over,
  wrong_corner_count,
  no_arcs,
  diameter_mismatch,
  infeasible_signature,
  sweep_too_large,
  degenerate,
  area_mismatch,
  figure_mismatch,
  clipping_failure,
  not_equidecomposable,
  not_antipodal,
  degenerate_result,
  bad_input,
};

const char* error_name(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(std::string(error_name(c)) + ": " + what), code(c) {}
};

/// Plane rigid motion: reflect across the x axis (optional), then rotate,
/// then translate.
struct Isometry {
  double rotation = 0.0;  // radians in [0, 2*pi)
  Vec2 translation{0.0, 0.0};
  bool reflect = false;

  Point operator()(Point p) const {
    if (reflect) p.y = -p.y;
    const double c = std::cos(rotation), s = std::sin(rotation);
    return {c * p.x - s * p.y + translation.x,
            s * p.x + c * p.y + translation.y};
  }
  /// Image of a direction angle under the linear part.
  double map_angle(double a) const {
    return norm_angle(rotation + (reflect ? -a : a));
  }
};

inline Isometry identity_isometry() { return {}; }

inline Isometry make_translation(Vec2 t) { return {0.0, t, false}; }

inline Isometry make_rotation(double angle, Point about = {0, 0}) {
  const double c = std::cos(angle), s = std::sin(angle);
  Vec2 t{about.x - (c * about.x - s * about.y),
         about.y - (s * about.x + c * about.y)};
  return {norm_angle(angle), t, false};
}

/// a then b is compose(b, a): compose applies `second` after `first`.
inline Isometry compose(const Isometry& second, const Isometry& first) {
  Isometry r;
  r.reflect = second.reflect != first.reflect;
  r.rotation = norm_angle(second.rotation +
                          (second.reflect ? -first.rotation : first.rotation));
  r.translation = second(first.translation);
  // second's linear part applied to first's translation already includes
  // second's translation via operator(); nothing more to add.
  return r;
}

inline Isometry inverse(const Isometry& m) {
  Isometry r;
  r.reflect = m.reflect;
  r.rotation = m.reflect ? m.rotation : norm_angle(-m.rotation);
  // Solve r(m(p)) = p for the translation.
  Isometry lin = r;
  lin.translation = {0, 0};
  r.translation = -lin(m.translation);
  return r;
}

}  // namespace cpoly
