#pragma once

#include <vector>

#include "cpoly/chain.hpp"

namespace cpoly {

/// Chain through the given counterclockwise convex polygon vertices.
ConvexChain make_polygon(const std::vector<Point>& vertices);

ConvexChain make_rect(double w, double h, Point corner = {0, 0});
inline ConvexChain make_square(double side, Point corner = {0, 0}) {
  return make_rect(side, side, corner);
}

/// Circle of radius r, a single full arc.
ConvexChain make_circle(double r, Point center = {0, 0});

/// Lens: intersection of two radius-r disks; omega is the total angular
/// measure of its two arcs (omega = 2*pi gives the circle).  Centered at
/// the origin with the corner axis on x.
ConvexChain make_lens(double r, double omega);

/// Stadium: r-offset of a horizontal segment of length len.
ConvexChain make_stadium(double r, double len);

}  // namespace cpoly
