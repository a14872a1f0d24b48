#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cpoly/chain.hpp"

namespace cpoly {

struct LineEdge {
  Point a, b;
};
struct ArcEdge {
  Point center;
  double radius = 0.0;
  Point a, b;
  bool ccw = true;
};
using Edge = std::variant<LineEdge, ArcEdge>;

/// Closed edge path in absolute coordinates (counterclockwise for pieces).
struct EdgePath {
  std::vector<Edge> edges;
};

struct Box {
  Point lo{0, 0}, hi{0, 0};
  bool overlaps(const Box& o) const {
    return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
  }
};

/// Counterclockwise sweep of an arc edge; a full circle when the endpoints
/// coincide.
double arc_edge_sweep(const ArcEdge& e);

double path_area(const EdgePath& p);
Box path_bbox(const EdgePath& p);
EdgePath transformed(const EdgePath& p, const Isometry& m);
EdgePath chain_to_path(const ConvexChain& c);
EdgePath polygon_path(const std::vector<Point>& v);
std::vector<Point> path_vertices(const EdgePath& p);

/// Containment for convex counterclockwise paths: every line edge's
/// halfplane plus every arc edge's support-cone condition.
bool path_contains(const EdgePath& p, Point q, double slack = 0.0);

/// Distance from q to the path's boundary.
double path_boundary_distance(const EdgePath& p, Point q);

struct Piece {
  std::string id;
  EdgePath path;
};

}  // namespace cpoly
