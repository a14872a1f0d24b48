#pragma once

#include <optional>

#include "cpoly/chain.hpp"
#include "cpoly/signature.hpp"

namespace cpoly {

/// Exact area of the figure: shoelace over the element-boundary polygon
/// plus one circular-segment correction per arc.
double area(const ConvexChain& c);

/// First and second moments of a plane region (about the origin).
struct Moments {
  double a = 0.0;            // area
  double mx = 0.0, my = 0.0; // integrals of x, y
  double sxx = 0.0, sxy = 0.0, syy = 0.0;

  Moments& operator+=(const Moments& o);
  Moments rotated(double angle) const;
  Moments translated(Vec2 t) const;
  Point centroid() const { return {mx / a, my / a}; }
};

Moments moments(const ConvexChain& c);
Point centroid(const ConvexChain& c);

// ---- support structure ----------------------------------------------------

/// One boundary feature indexed by its outward-normal interval.  Corner
/// features hold a fixed vertex; arc features a center and radius; segment
/// features a degenerate interval with the edge's halfplane data.
struct SupportFeature {
  enum Kind { vertex, arc_feat, seg_feat } kind = vertex;
  double nu0 = 0.0, nu1 = 0.0;  // cumulative outward-normal interval
  std::size_t element = 0;      // index into the source chain
  Point point{0, 0};            // vertex / segment start
  Point point2{0, 0};           // segment end
  Point center{0, 0};
  double radius = 0.0;
};

/// Piecewise support description of a convex chain over the normal circle.
struct SupportMap {
  std::vector<SupportFeature> features;  // nu0 ascending, covering 2*pi
  double nu_base = 0.0;

  const SupportFeature& at(double normal_angle) const;
  double height(double normal_angle) const;       // support function h
  Point support_point(double normal_angle) const;
};

SupportMap support_map(const ConvexChain& c);

/// Max distance between parallel supporting lines.
double diameter(const ConvexChain& c);
/// Min distance between parallel supporting lines.
double width(const ConvexChain& c);

/// True if p lies in the closed convex region bounded by the chain.
bool chain_contains(const SupportMap& m, Point p, double slack = 0.0);
bool chain_contains(const ConvexChain& c, Point p, double slack = 0.0);

/// Hausdorff distance between two convex figures *as posed*; equals the
/// sup-norm gap of their support functions.  Callers wanting a pose-free
/// metric should canonicalize both figures first.
double hausdorff_distance(const ConvexChain& f, const ConvexChain& g);

/// Canonical pose: centroid at the origin and principal inertia axis on +x
/// (major axis), tie-broken by lexicographic boundary signature; inertia-
/// degenerate figures fall back to a combinatorial boundary anchor.
ConvexChain canonical_pose(const ConvexChain& c, const Tolerance& t = {});

// ---- congruence and the decision ------------------------------------------

/// Witnessing isometry mapping f onto g, if the cyclic element sequences
/// match up to rotation and orientation reversal.
std::optional<Isometry> congruent(const ConvexChain& f, const ConvexChain& g,
                                  const Tolerance& t = {});

/// Equal areas and stably equidecomposable boundaries.
bool equidecomposable(const ConvexChain& f, const ConvexChain& g,
                      const Tolerance& t = {});

}  // namespace cpoly
