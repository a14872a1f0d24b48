#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <cstdint>
#include <functional>
#include <random>

#include "cpoly/chain.hpp"
#include "cpoly/figure.hpp"

namespace oracles {

// Portable uniform double in [0,1) from a seeded engine.
inline double u01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

struct McEstimate {
  double value = 0.0;
  double sigma = 0.0;
};

// Monte-Carlo area of the region given by a membership predicate, sampled
// over an axis-aligned box.
inline McEstimate mc_area(const std::function<bool(cpoly::Point)>& inside,
                          cpoly::Point lo, cpoly::Point hi, std::size_t n,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const cpoly::Point p{lo.x + (hi.x - lo.x) * u01(rng),
                         lo.y + (hi.y - lo.y) * u01(rng)};
    if (inside(p)) ++hits;
  }
  const double box = (hi.x - lo.x) * (hi.y - lo.y);
  const double p = double(hits) / double(n);
  return {box * p, box * std::sqrt(p * (1 - p) / double(n))};
}

// Support-sampled breadth extremes: brute force over many directions.
inline std::pair<double, double> sampled_breadth(const cpoly::ConvexChain& c,
                                                 int dirs = 100000) {
  const auto m = cpoly::support_map(c);
  double bmin = std::numeric_limits<double>::infinity(), bmax = 0.0;
  for (int i = 0; i < dirs; ++i) {
    const double t = cpoly::kTwoPi * i / dirs;
    const double b = m.height(t) + m.height(t + cpoly::kPi);
    bmin = std::min(bmin, b);
    bmax = std::max(bmax, b);
  }
  return {bmin, bmax};
}

// Brute-force cyclic congruence oracle: samples many boundary points of f,
// maps them by the witness, and checks containment in g within a band.
inline bool witness_maps_onto(const cpoly::ConvexChain& f,
                              const cpoly::ConvexChain& g,
                              const cpoly::Isometry& w, double band) {
  const auto mg = cpoly::support_map(g);
  const auto poses = cpoly::element_poses(f);
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    for (double t : {0.0, 0.25, 0.5, 0.75}) {
      cpoly::Pose p = poses[i];
      // crude march along the element
      cpoly::ChainElement e = f.elements[i];
      if (auto* s = std::get_if<cpoly::Seg>(&e)) {
        p.point = p.point + t * s->len * cpoly::unit(p.heading);
      } else if (auto* a = std::get_if<cpoly::Arc>(&e)) {
        const cpoly::Point ctr =
            p.point + a->radius * cpoly::unit(p.heading + cpoly::kPi / 2);
        p.point = ctr + a->radius *
                            cpoly::unit(p.heading - cpoly::kPi / 2 + t * a->sweep);
      }
      const cpoly::Point q = w(p.point);
      if (!cpoly::chain_contains(mg, q, band)) return false;
      // boundary points must stay near the boundary, not deep inside
      if (cpoly::chain_contains(mg, q, -band)) return false;
    }
  }
  return true;
}

}  // namespace oracles
