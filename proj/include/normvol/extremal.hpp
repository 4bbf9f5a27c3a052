#pragma once

#include "normvol/body.hpp"

#include <vector>

namespace normvol {

/// Largest cross-polytope conv{+-v_1, ..., +-v_k} inscribed in K.
struct InscribedCrossPolytope {
    double volume = 0.0;
    std::vector<Vec> directions;
    /// False when the search fell back to the heuristic and may have stalled.
    bool certified = true;
};

/// Smallest parallelotope {x : |<xi_i, x>| <= h_K(xi_i)} circumscribed to K.
struct CircumscribedParallelotope {
    double volume = 0.0;
    std::vector<Vec> normals;
    bool certified = true;
};

// For polytopes the optimum of |det(v_1..v_k)| over boundary points is
// attained at vertices (the determinant is linear in each slot), and the
// optimal parallelotope normals are facet normals. Both are enumerated
// exactly; very large vertex sets fall back to alternating coordinate ascent.
// Ellipsoids are handled in closed form.
InscribedCrossPolytope max_inscribed_cross_polytope(const ConvexBody& k);
CircumscribedParallelotope min_circumscribed_parallelotope(const ConvexBody& k);

/// Result of a minimal-volume ellipsoid computation.
struct EllipsoidFit {
    Ellipsoid ellipsoid;
    /// Relative volume gap to the optimum certified by the dual bound.
    double gap = 0.0;
    int iterations = 0;
};

/// Minimal-volume centered ellipsoid containing K (Loewner ellipsoid).
/// Throws NumericError if the Newton iteration cap is exceeded.
EllipsoidFit loewner_ellipsoid(const ConvexBody& k, double tol = 1e-10);

/// Maximal-volume centered ellipsoid inside K, as polar of the Loewner
/// ellipsoid of the polar body.
EllipsoidFit john_ellipsoid(const ConvexBody& k, double tol = 1e-10);

}  // namespace normvol
