#pragma once

#include <map>
#include <vector>

#include "cpoly/chain.hpp"

namespace cpoly {

struct RadiusBucket {
  double radius = 0.0;
  double sweep = 0.0;
};

/// Per-radius totals of the boundary: corner turn at radius zero, arc sweep
/// per distinct positive radius, and total straight-segment length.  The
/// positive-radius part is the invariant deciding stable boundary
/// equidecomposability for circular polygons.
struct ArcSignature {
  double corners = 0.0;                // total corner turn
  std::vector<RadiusBucket> buckets;   // sorted by radius, radii distinct
  double seg_total = 0.0;

  double arc_total() const;
  double total_turning() const { return corners + arc_total(); }
  bool has_arcs() const { return !buckets.empty(); }
};

/// Bucket arcs by radius (near radii within eps_len merged), sum corner
/// turns and segment lengths.
ArcSignature signature(const ConvexChain& c, const Tolerance& t = {});

/// Compare positive-radius parts bucketwise.
bool same_arc_buckets(const ArcSignature& a, const ArcSignature& b,
                      const Tolerance& t = {});

/// Boundaries stably equidecomposable: positive-radius arc content equal;
/// corners and segments are ignored.
bool boundary_stably_equidecomposable(const ConvexChain& f,
                                      const ConvexChain& g,
                                      const Tolerance& t = {});

/// Nondecreasing right-continuous step map: rho(r) = corner turn + total
/// sweep of arcs with radius <= r.  rho(inf) = 2*pi.
struct Profile {
  double corners = 0.0;
  std::vector<RadiusBucket> steps;  // sorted by radius

  double operator()(double r) const;
  double limit() const;
};

Profile profile(const ArcSignature& sig);
Profile profile(const ConvexChain& c, const Tolerance& t = {});

}  // namespace cpoly
