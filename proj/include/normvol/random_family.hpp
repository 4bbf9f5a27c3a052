#pragma once

#include "normvol/body.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace normvol {

enum class FamilyKind { polytope, smooth_star, ellipsoid };

FamilyKind parse_family_kind(std::string_view text);

/// Reproducible random bodies.
///
/// polytope: hull of `vertices` points (symmetric pairs) on a random
/// ellipse/ellipsoid, each pushed radially by up to +-`perturbation`.
/// smooth_star: rho = exp(random even harmonic series of degree <= `degree`,
/// coefficients uniform in [-amplitude, amplitude]) sampled on a grid.
/// ellipsoid: image of the unit ball under a random map with condition <= 10.
struct RandomFamily {
    FamilyKind kind = FamilyKind::polytope;
    int dim = 2;
    int vertices = 12;
    double perturbation = 0.15;
    int degree = 6;
    double amplitude = 0.4;
    std::uint64_t seed = 1;
};

/// Engine for one trial of a seeded run; independent of thread scheduling.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);

/// Random invertible map with singular values in [1, max_condition], up to
/// a random overall scale in [0.5, 2].
Mat random_linear_map(int dim, std::mt19937_64& rng, double max_condition = 10.0);

/// Body number `trial` of the family. Degenerate polytope samples are redrawn
/// from a fresh sub-stream, at most 10 times, then DegeneracyError.
/// Star bodies live on `grid` (default grid when null).
Body generate(const RandomFamily& family, std::uint64_t trial = 0, const GridPtr& grid = nullptr);

/// generate() for the convex kinds.
ConvexBody generate_convex(const RandomFamily& family, std::uint64_t trial = 0);

}  // namespace normvol
