#pragma once

// Brute-force and Monte Carlo references. Test code only: nothing in the
// library's computational path calls these.

#include "normvol/body.hpp"

#include <cstdint>

namespace normvol::oracles {

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

/// Rejection sampling in the bounding cube [-R, R]^n. Convex bodies are
/// tested with the gauge, star bodies with their radial function.
/// Throws InputError for fewer than 10^4 samples.
McEstimate mc_volume(const Body& body, std::size_t samples, std::uint64_t seed);

/// min over `points` equally spaced t in [-T, T] of ||w + t p||_B with
/// T = 4 ||w||_B / ||p||_B.
double brute_quotient_norm(const ConvexBody& b, const Vec& p, const Vec& w, int points);

/// Largest (2^k / k!) |det| over k boundary points in directions from a
/// half-sphere grid: `resolution` angles in [0, pi) in 2D, resolution x
/// 2*resolution (theta, phi) cells of the upper hemisphere in 3D. In 3D the
/// first two points come from the grid and the third is optimal exactly.
double brute_cross_polytope(const ConvexBody& k, int resolution);

/// Smallest 2^k prod h(xi_i) / |det(xi)| over normal frames from the same grid.
double brute_parallelotope(const ConvexBody& k, int resolution);

}  // namespace normvol::oracles
