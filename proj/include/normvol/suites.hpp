#pragma once

#include "normvol/kernels.hpp"
#include "normvol/report.hpp"
#include "normvol/volume_definition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace normvol {

/// A seeded batch of checks over random bodies. Trial t draws its inputs from
/// trial_rng(seed, t, ...), so a report does not depend on how many threads
/// evaluated it.
struct SuiteConfig {
    std::string check;
    VolumeDefinition def{VolumeId::busemann};
    int dim = 2;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    /// Overrides the check's default tolerance.
    std::optional<double> tol;
    /// Sphere grid resolution; 0 selects the default for the dimension.
    int resolution = 0;
    Exec exec = default_exec();
};

/// Check ids accepted by run_suite.
const std::vector<std::string>& suite_ids();

/// Default tolerance of a check in the given dimension.
double default_tolerance(const std::string& check, int dim);

/// Runs the suite; InputError for unknown ids or unsupported combinations.
VerificationReport run_suite(const SuiteConfig& config);

/// Random unit ball for trial t: mostly polytopes with 2(dim+1)..2(dim+5)
/// vertices, every seventh trial an ellipsoid.
ConvexBody suite_unit_ball(int dim, std::uint64_t seed, std::uint64_t trial);

}  // namespace normvol
