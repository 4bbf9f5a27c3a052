#pragma once

#include "normvol/body.hpp"
#include "normvol/kernels.hpp"
#include "normvol/volume_definition.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace normvol {

enum class Space { primal, dual };

enum class Convexity { verified, failed, not_checked };

struct Provenance {
    std::string construction;
    std::string definition;
    std::uint64_t input_hash = 0;
};

/// A derived body together with where it lives and whether it passed the
/// sampled convexity check.
struct ConstructionResult {
    Body body;
    Space space = Space::primal;
    Convexity convexity = Convexity::not_checked;
    /// Direction of the worst violation when convexity failed.
    std::optional<Vec> witness;
    double violation = 0.0;
    Provenance provenance;

    const ConvexBody& convex() const { return std::get<ConvexBody>(body); }
    const StarBody& star() const { return std::get<StarBody>(body); }
    bool is_convex_body() const { return std::holds_alternative<ConvexBody>(body); }
};

/// Stable FNV-1a hash of a body's defining numbers.
std::uint64_t body_hash(const Body& body);

/// Intersection body IS in V*: rho(xi) = vol_{n-1}(S cap xi^perp) on grid nodes.
ConstructionResult intersection_body(const Body& s, const GridPtr& grid, Exec exec = default_exec());

/// Projection body PiK in V*: h(v) = vol_{n-1}(shadow(K, v)).
///
/// Polytopes give the exact zonotope sum over facet pairs of segments
/// [-A_f nu_f, A_f nu_f]; ellipsoids give an ellipsoid. The convexity flag
/// compares shadow volumes on the grid with the support of the result.
ConstructionResult projection_body(const ConvexBody& k, const GridPtr& grid, Exec exec = default_exec());

/// Isoperimetrix: support h(xi) = density_factor(def, B, xi) sampled on the
/// grid and canonicalized by halfspace intersection. A non-convex sample is
/// kept as a star body holding the raw support values, with the flag failed.
ConstructionResult isoperimetrix(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec = default_exec());

/// Dual isoperimetrix: rho(v) = 1 / density_factor(dual(def), polar(B), v).
///
/// When the dual definition is convex and its isoperimetrix of polar(B) is
/// verified convex, the polar of that isoperimetrix is attached as the exact
/// body of the returned star body.
ConstructionResult dual_isoperimetrix(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec = default_exec());

/// Sampled support values of the isoperimetrix (no canonicalization).
std::vector<double> isoperimetrix_support(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec = default_exec());

/// Sampled radial values of the dual isoperimetrix.
std::vector<double> dual_isoperimetrix_radial(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid, Exec exec = default_exec());

/// Convex body from support samples: intersection of <u_i, x> <= h_i.
ConvexBody body_from_support(const DirectionGrid& grid, std::span<const double> support);

}  // namespace normvol
