#pragma once

#include <cstdint>
#include <map>

#include "cpoly/figure.hpp"
#include "cpoly/piece.hpp"

namespace cpoly {

/// Scissors-congruence certificate: pieces with a placement into the
/// source figure and one into the target figure.  The certificate is
/// exactly what verify() checks.
struct Dissection {
  ConvexChain source, target;
  std::vector<Piece> pieces;
  std::vector<Isometry> src_pose;  // piece-local -> source plane
  std::vector<Isometry> tgt_pose;  // piece-local -> target plane
};

struct VerificationReport {
  double src_area_residual = 0.0;
  double tgt_area_residual = 0.0;
  double coverage_defect = 0.0;   // worst side
  double escape_defect = 0.0;     // piece samples outside the figure
  int max_overlap_depth = 0;
  std::size_t piece_count = 0;
  std::size_t samples_used = 0;
  double declared_bound = 2e-3;
  bool pass = false;
  std::string detail;
};

/// Per-element arc refinement: sub-sweeps per element index (arcs only).
using ArcRefinement = std::map<std::size_t, std::vector<double>>;

/// Refinement splitting every arc into sweeps of at most max_sweep.
ArcRefinement uniform_refinement(const ConvexChain& c,
                                 double max_sweep = kPi / 2);

struct ChordedFigure {
  Piece polygon;                       // chord-gon remainder
  std::vector<Piece> lumps;            // one circular segment per sub-arc
  std::vector<std::size_t> lump_elem;  // source element per lump
};

/// Chord every (refined) arc: returns the circular-segment lumps and the
/// inscribed polygon remainder.  Arc sweeps in the refinement must not
/// exceed pi/2.
ChordedFigure chord_arcs(const ConvexChain& f, const ArcRefinement& refinement,
                         const Tolerance& t = {});

/// 3-piece dissection of a triangle onto the rectangle over its longest
/// side with half the corresponding altitude.
Dissection triangle_to_rectangle(const Piece& tri, const Tolerance& t = {});

/// Dissection of an axis-parallel-free rectangle piece onto a rectangle of
/// the given width (same area), by exact halvings plus one slide step.
Dissection rectangle_to_width(const Piece& rect, double w,
                              const Tolerance& t = {});

/// Full polygon-to-polygon chain through a common rectangle of width
/// sqrt(area).
Dissection polygons_dissect(const Piece& p, const Piece& q,
                            const Tolerance& t = {});

/// Swap source and target.
Dissection invert(const Dissection& d);

/// Chain two certificates through their common middle figure (pieces are
/// clipped pairwise; all-polygon geometry required on overlapping pairs).
Dissection compose(const Dissection& d1, const Dissection& d2,
                   const Tolerance& t = {});

/// Constructive scissors congruence for equidecomposable figures: congruent
/// lumps map pairwise, the polygon remainders run through the rectangle
/// chain.  Errors NotEquidecomposable exactly when the decision predicate
/// fails.
Dissection dissect(const ConvexChain& f, const ConvexChain& g,
                   const Tolerance& t = {});

/// Probabilistic certificate check: area bookkeeping, exact-once coverage
/// of quasi-random samples on both sides (boundary band excluded), and
/// placed pieces staying inside their figures.
VerificationReport verify(const Dissection& d, std::size_t samples,
                          std::uint64_t seed, const Tolerance& t = {});

}  // namespace cpoly
