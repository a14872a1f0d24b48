#pragma once

#include <utility>
#include <vector>

#include "cpoly/chain.hpp"
#include "cpoly/figure.hpp"

namespace cpoly {

/// A point on the boundary: element index plus a parameter in [0,1] along
/// that element (fraction of length for segments, of sweep for arcs, of
/// turn for corners -- a corner locator names the corner point and a split
/// of its turn).
struct BoundaryPoint {
  std::size_t element = 0;
  double t = 0.0;
  Point point{0, 0};
};

BoundaryPoint locate(const ConvexChain& c, std::size_t element, double t);

/// Outward-normal cone [nu0, nu1] at a boundary point (cumulative angles;
/// a single angle for smooth points, an interval at corners).
std::pair<double, double> normal_cone(const ConvexChain& c,
                                      const BoundaryPoint& p);

/// Split one element at parameter t; either part may be dropped when t is
/// at a boundary (within tol).
std::pair<std::vector<ChainElement>, std::vector<ChainElement>> split_element(
    const ChainElement& e, double t, const Tolerance& tol = {});

/// Open boundary path from a to b (counterclockwise), as an element list
/// with partial end elements included.  If a corner is cut, its turn is
/// split per the locator parameter.
std::vector<ChainElement> boundary_between(const ConvexChain& c,
                                           const BoundaryPoint& a,
                                           const BoundaryPoint& b,
                                           const Tolerance& tol = {});

/// Total arc sweep along the boundary from a to b (counterclockwise);
/// corners and segments contribute nothing.
double arc_measure_between(const ConvexChain& c, const BoundaryPoint& a,
                           const BoundaryPoint& b, const Tolerance& tol = {});

}  // namespace cpoly
