#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cpoly/boundary.hpp"
#include "cpoly/figure.hpp"
#include "cpoly/oval.hpp"

namespace cpoly {

/// Indices of two elements that are partners under the figure's central
/// symmetry (half-cycle shift of the normalized ring).
struct ElementPair {
  std::size_t first = 0;
  std::size_t second = 0;
};
using SegmentPair = ElementPair;
using CornerPair = ElementPair;

struct SignatureDelta {
  double seg_removed = 0.0;
  double corner_delta = 0.0;
  std::vector<RadiusBucket> arc_added;  // positive-radius content gained
  std::string describe() const;
};

struct SurgeryResult {
  ConvexChain figure;
  double area_delta = 0.0;
  SignatureDelta signature_delta;
  std::vector<std::pair<Point, Point>> cut_chords;
  std::string notes;
};

/// Center of symmetry, if the normalized element ring is invariant under
/// the half-cycle shift.
std::optional<Point> central_symmetry(const ConvexChain& c,
                                      const Tolerance& t = {});

/// Partner pairs available for surgery on a centrally symmetric figure.
/// Indices refer to normalized(c)'s element ring.
std::vector<SegmentPair> segment_pairs(const ConvexChain& c,
                                       const Tolerance& t = {});
std::vector<CornerPair> corner_pairs(const ConvexChain& c,
                                     const Tolerance& t = {});

/// Cut out the parallelogram spanned by a centrally symmetric segment pair
/// and glue the two remaining lumps.  Strictly decreases area, preserves
/// positive-radius signature, removes the pair from the segment total.
SurgeryResult excise_parallelogram(const ConvexChain& c, SegmentPair pair,
                                   const Tolerance& t = {});

/// Four-hinge shift on two centrally symmetric corner pairs: transfers the
/// whole corner turn of the straightened pair onto the other pair while
/// the four boundary lumps ride rigidly; never increases area.  The
/// straightened pair is the one whose parallelogram angle is obtuse.
SurgeryResult hinge_shift(const ConvexChain& c,
                          std::pair<CornerPair, CornerPair> corners_ab,
                          const Tolerance& t = {});

struct BalancedPair {
  BoundaryPoint a, b;
  double alpha = 0.0;  // arc sweep on the a->b side
  double beta = 0.0;   // arc sweep on the b->a side
  double support_normal = 0.0;
};

/// Antipodal support points with equal arc measure on both boundary sides,
/// found by sweeping the support direction and solving the piecewise-linear
/// balance function exactly.
BalancedPair balance_points(const ConvexChain& c, const Tolerance& t = {});

/// Cut along the chord AB and double each half with its point reflection.
/// Returns the two centrally symmetric figures; their areas sum to twice
/// the input's.
std::pair<ConvexChain, ConvexChain> double_figure(const ConvexChain& c,
                                                  const BoundaryPoint& a,
                                                  const BoundaryPoint& b,
                                                  const Tolerance& t = {});

/// On a centrally symmetric figure with exactly one corner pair, replace
/// each corner by an arc of the minimal boundary radius with the same
/// angular measure.  The result has no corners; the bookkeeping area change
/// is reported in the result.
SurgeryResult round_corners(const ConvexChain& c, const Tolerance& t = {});

/// Assemble a centrally symmetric figure from two quarters of each oval,
/// glued along their equal half-diameters.  Requires equal diameters;
/// area(result) = mean of the two oval areas.
ConvexChain quarter_reassemble(const Oval& v_minus, const Oval& v_plus,
                               const Tolerance& t = {});

/// Deterministic seeded generator: random centrally symmetric figure with
/// the given signature (buckets split into randomized sub-arcs, corners
/// and segments scattered, closed by point reflection).
ConvexChain random_centrally_symmetric(const ArcSignature& sig,
                                       std::uint64_t seed,
                                       const Tolerance& t = {});

/// Random convex polygon chain (hull of seeded points), normalized to the
/// requested area when positive.
ConvexChain random_convex_polygon(std::uint64_t seed, int min_vertices = 5,
                                  double target_area = -1.0);

/// Insert a centrally symmetric segment pair adding exactly extra_area,
/// keeping arcs and corners untouched.  Used to area-match figures within
/// one stable-boundary class.
ConvexChain insert_segment_pair(const ConvexChain& c, double extra_area,
                                std::uint64_t seed, const Tolerance& t = {});

}  // namespace cpoly
