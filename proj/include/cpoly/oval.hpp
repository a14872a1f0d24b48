#pragma once

#include "cpoly/figure.hpp"
#include "cpoly/signature.hpp"

namespace cpoly {

/// Canonical minimal-area representative of an arc-signature class: no
/// boundary segments, two perpendicular symmetry axes, corners (if any)
/// only on the corner axis, arc radii strictly increasing from the corner
/// axis to the smooth axis.  Built centered at the origin with the corner
/// axis on x.
struct Oval {
  ConvexChain chain;
  ArcSignature sig;            // seg_total = 0
  double corner_half = 0.0;    // turn of each of the two corners (0 if none)
  double quarter_turn = 0.0;   // total sweep of one quarter
  double axis_a_half = 0.0;    // center to corner-axis boundary point
  double axis_b_half = 0.0;    // center to smooth-axis boundary point
  std::vector<RadiusBucket> quarter;  // radii ascending, sweeps per quarter
};

/// The unique oval (up to congruence) whose signature matches sig's corner
/// and arc content; segment content is ignored.  Errors with NoOvalExists
/// on the polygon class (corner bucket 2*pi).
Oval oval_from_profile(const ArcSignature& sig, const Tolerance& t = {});

/// True iff the chain is congruent to the oval of its own signature class.
bool is_oval(const ConvexChain& c, const Tolerance& t = {});

/// Independent structural route: checks the defining clauses directly on
/// the normalized element ring (no segments; at most one corner pair; two
/// mirror-palindromic halves; radii strictly increasing along a quarter).
bool is_oval_structural(const ConvexChain& c, const Tolerance& t = {});

/// A convex figure is congruent to every convex figure equidecomposable
/// with it exactly when it is an oval.
bool uniquely_composed(const ConvexChain& c, const Tolerance& t = {});

/// R-neighborhood: segments stay, arcs grow by r, corners become radius-r
/// arcs.  area(result) = area + perimeter*r + pi*r^2.
ConvexChain r_offset(const ConvexChain& c, double r, const Tolerance& t = {});

/// Inverse of r_offset: arcs shrink by r (arcs at radius ~r collapse to
/// corners).  Errors: RadiusTooSmall if an arc bucket sits below r;
/// DegenerateCore if the core collapses (zero area or cusps).
ConvexChain inner_polygon(const ConvexChain& c, double r,
                          const Tolerance& t = {});

}  // namespace cpoly
