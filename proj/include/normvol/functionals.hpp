#pragma once

#include "normvol/body.hpp"
#include "normvol/constructions.hpp"
#include "normvol/kernels.hpp"
#include "normvol/report.hpp"
#include "normvol/volume_definition.hpp"

#include <span>

namespace normvol {

/// V(K[n-1], L) = (1/n) sum over facets of K of h_L(nu_f) A_f. K must be a polytope.
double mixed_volume_hyper(const ConvexBody& k, const ConvexBody& l);

/// (1/n) sum_i w_i prod_j rho_j(u_i); all bodies must share one grid.
double dual_mixed_volume(std::span<const StarBody* const> bodies);

/// Ṽ(S[n-1], T).
double dual_mixed_volume_hyper(const StarBody& s, const StarBody& t);

/// Volume using the exact body attached to a star body when there is one.
double best_volume(const Body& body);

/// Surface area of K in the normed space with unit ball B.
///
/// Polytopes: sum over facets of density_factor * facet area. Ellipsoids:
/// sphere quadrature of rho^{n-1} density(nu) / <nu, u> on `grid`
/// (default grid when null).
double surface_area(VolumeDefinition def, const ConvexBody& k, const ConvexBody& b, const GridPtr& grid = nullptr,
                    Exec exec = default_exec());

struct DirectOptions {
    /// Each quadrature triangle is split into 4^subdivisions pieces (3D).
    int subdivisions = 2;
    /// Subdivision level used instead when B is not a polytope, whose density
    /// has no kink planes to split along (3D).
    int smooth_subdivisions = 4;
    /// Gauss-Legendre points per edge piece (2D).
    int edge_points = 16;
    /// Grid for sampled bodies; the body's own grid or the default when null.
    GridPtr grid;
};

/// Dual surface area by integrating the quotient density over the boundary.
///
/// Polytopes: per facet, split along the planes where the quotient density
/// has kinks (p orthogonal to a facet normal of B), then Gauss-Legendre on
/// edges in 2D or the seven-point triangle rule in 3D. Sampled bodies:
/// sum_i w_i rho(u_i)^{n-1} quotient_density(u_i).
double dual_surface_area_direct(VolumeDefinition def, const Body& s, const ConvexBody& b, Exec exec = default_exec(),
                                const DirectOptions& options = {});

/// n Ṽ(S[n-1], Ĩ) with the given dual isoperimetrix; S is sampled on its grid.
double dual_surface_area_identity(const Body& s, const StarBody& dual_iso);

struct DualSurfaceArea {
    double direct = 0.0;
    double identity = 0.0;
    double relative_gap() const;
};

/// Both routes; the dual isoperimetrix is built on `grid` (default when null).
DualSurfaceArea dual_surface_area(VolumeDefinition def, const Body& s, const ConvexBody& b, const GridPtr& grid = nullptr,
                                  Exec exec = default_exec());

// Checkers. Each returns a one-trial report whose margin is >= -tolerance
// exactly when the trial passes.

/// Ṽ(K[n-1], L)^n <= vol(K)^{n-1} vol(L); margin = (rhs - lhs) / rhs.
VerificationReport check_dual_minkowski(const StarBody& k, const StarBody& l, double tol = 1e-9);

/// vol(K)^{n-1} vol(polar(Pi K)) <= omega_n^n / omega_{n-1}^n; margin = rhs - lhs.
VerificationReport check_petty(const ConvexBody& k, double tol = 1e-6);

/// sqrt(2) pi <= Ã_busemann(B) (2D only) and Ã_busemann(B) <= n omega_n;
/// margin is the smaller absolute slack.
VerificationReport check_busemann_bounds(const ConvexBody& b, double tol = 1e-3, Exec exec = default_exec());

/// A(K)^n / L(K)^{n-1} >= A(I)^n / L(I)^{n-1} for the isoperimetrix I;
/// margin = (lhs - rhs) / rhs.
VerificationReport check_isoperimetric(VolumeDefinition def, const ConvexBody& k, const ConvexBody& b, const ConvexBody& iso,
                                       double tol = 1e-3);

/// Ã(S) <= n vol(S)^{(n-1)/n} vol(Ĩ)^{1/n}; margin = (rhs - lhs) / rhs.
VerificationReport check_dual_isoperimetric(VolumeDefinition def, const Body& s, const ConvexBody& b, const StarBody& dual_iso,
                                            double tol = 1e-3, Exec exec = default_exec());

/// A(K) <= A(L) for K inside L; margin = (A(L) - A(K)) / A(L). Non-convex
/// definitions are recorded as exploratory.
VerificationReport check_convexity_monotonicity(VolumeDefinition def, const ConvexBody& k, const ConvexBody& l,
                                                const ConvexBody& b, double tol = 1e-6);

/// Direct against identity route for Ã; margin = -|direct - identity| / identity.
VerificationReport check_route_agreement(VolumeDefinition def, const Body& s, const ConvexBody& b, const StarBody& dual_iso,
                                         double tol = 1e-3, Exec exec = default_exec());

/// A_{ht,B}(B) against A_{ht,B°}(B°); margin = -|lhs - rhs| / rhs.
VerificationReport check_ht_self_duality(const ConvexBody& b, double tol = 1e-3);

/// sup over grid nodes u of |qdf(def, B, u) h(u) - 1| with h the support
/// function of the isoperimetrix of the dual definition for polar(B). The
/// quotient density is the radial function of the dual isoperimetrix
/// computed from shadows of B, independently of polar(B).
/// margin = -sup. Throws InputError when the dual definition is not convex.
VerificationReport check_dual_isoperimetrix_duality(VolumeDefinition def, const ConvexBody& b, const GridPtr& grid,
                                                    double tol = 1e-3, Exec exec = default_exec());

/// Hausdorff distance between polar(shadow(B, v)) and section(polar(B), v);
/// margin = -distance.
VerificationReport check_quotient_duality(const ConvexBody& b, const Vec& v, double tol = 1e-6);

}  // namespace normvol
