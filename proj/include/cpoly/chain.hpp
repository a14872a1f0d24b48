#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cpoly/geom.hpp"

namespace cpoly {

// Boundary elements of a convex turning chain.  The boundary is traversed
// counterclockwise; every element turns left or moves straight, so total
// turning of a closed chain is 2*pi.
struct Seg {
  double len = 0.0;
};
struct Arc {
  double radius = 0.0;
  double sweep = 0.0;  // counterclockwise, radians
};
struct Corner {
  double turn = 0.0;  // exterior angle, in (0, pi)
};

using ChainElement = std::variant<Seg, Arc, Corner>;

inline bool is_seg(const ChainElement& e) { return std::holds_alternative<Seg>(e); }
inline bool is_arc(const ChainElement& e) { return std::holds_alternative<Arc>(e); }
inline bool is_corner(const ChainElement& e) { return std::holds_alternative<Corner>(e); }

/// Turning contributed by one element.
double element_turning(const ChainElement& e);

/// Arc length contributed by one element.
double element_length(const ChainElement& e);

struct Pose {
  Point point;
  double heading = 0.0;  // cumulative, not normalized
};

/// Closed convex boundary as a turning chain: a start point, an initial
/// tangent direction, and a counterclockwise sequence of segments, arcs
/// and corner turns.  All metric/combinatorial figure queries run on this
/// representation; absolute geometry is derived on demand.
struct ConvexChain {
  Point start{0, 0};
  double heading = 0.0;
  std::vector<ChainElement> elements;

  std::size_t size() const { return elements.size(); }
};

/// Pose after traversing one element.
Pose advance_pose(const Pose& p, const ChainElement& e);

/// Poses at element boundaries; result has size()+1 entries, the last being
/// the pose after traversing the whole chain (closure residual visible).
std::vector<Pose> element_poses(const ConvexChain& c);

double perimeter(const ConvexChain& c);
double total_turning(const ConvexChain& c);

/// A crude figure scale (max over 1 and a diameter estimate), used to make
/// absolute tolerances relative where the contracts ask for it.
double chain_scale(const ConvexChain& c);

struct Violation {
  std::string what;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Check every chain invariant: element parameter ranges, total turning
/// 2*pi, closure, and adjacency normal form.  Violations carry measured
/// residuals; an empty report means the chain is a valid convex figure.
ValidationReport validate(const ConvexChain& c, const Tolerance& t = {});

/// Throw Error(invalid_chain) unless validate passes.
void require_valid(const ConvexChain& c, const Tolerance& t = {});

/// Canonical adjacency form: cyclically merges consecutive corners,
/// consecutive same-radius arcs (they are concentric by tangent
/// continuity), and consecutive segments with no turn between.  The start
/// pose moves to a surviving element boundary.
ConvexChain normalized(const ConvexChain& c, const Tolerance& t = {});

/// Rigid image of the chain.  A reflecting isometry reverses traversal
/// order so the result is again counterclockwise.
ConvexChain transformed(const ConvexChain& c, const Isometry& m);

/// Mirror image across the x axis, re-oriented counterclockwise.
ConvexChain mirrored(const ConvexChain& c);

}  // namespace cpoly
