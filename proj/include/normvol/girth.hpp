#pragma once

#include "normvol/body.hpp"
#include "normvol/kernels.hpp"

#include <vector>

namespace normvol {

/// Quotient norm ||w||_p = inf_t ||w + t p||_B of the tangent vector w at p,
/// found by golden-section search over |t| <= 2 ||w||_B / ||p||_B.
double quotient_norm(const ConvexBody& b, const Vec& p, const Vec& w);

/// Ordered points on the boundary of B.
struct BoundaryCurve {
    std::vector<Vec> points;
    bool closed = true;
    /// Negation maps the point list onto itself: points[i + m/2] = -points[i].
    bool symmetric = false;
};

/// Maps directions radially onto the boundary of B.
BoundaryCurve boundary_curve(const ConvexBody& b, const std::vector<Vec>& directions, bool closed = true);

/// Sum over segments of the quotient norm of the step, taken at the segment
/// midpoint pushed radially onto the boundary.
double curve_length_quotient(const ConvexBody& b, const BoundaryCurve& curve);

struct GirthOptions {
    /// Icosphere level of the 3D search mesh.
    int mesh_level = 4;
    /// Graph arcs join nodes up to this many mesh steps apart.
    int neighbour_rings = 3;
    /// Boundary samples for the 2D length.
    int boundary_points = 4096;
    /// Shortest-path candidates from distinct families (3D).
    int candidates = 8;
    /// Angle (radians) within which a source counts as lying on an earlier candidate path.
    double family_separation = 0.3;
    /// Lateral offsets on each side of the curve in the tube refinement (3D).
    int tube_offsets = 6;
    /// Planar sections through these many normals join the candidate pool (3D).
    int plane_seeds = 32;
    /// Point count at which all candidates are compared before smoothing (3D).
    int screen_points = 64;
    /// Best screened candidates carried on to smoothing (3D).
    int finalists = 3;
    /// Finest point count of the smoothed curve (3D).
    int curve_points = 256;
    /// Smoothing stops once a sweep improves the length by less than this, relatively.
    double smoothing_tol = 1e-7;
    Exec exec = default_exec();
};

struct GirthResult {
    double length = 0.0;
    /// 2 min_p d(p, -p) on the mesh graph before smoothing (3D; equals length in 2D).
    double graph_length = 0.0;
    int mesh_level = 0;
    int smoothing_iterations = 0;
    BoundaryCurve curve;
};

/// Length of the shortest centrally symmetric closed curve on the boundary
/// of B in the quotient Finsler metric.
///
/// 2D: the boundary traversed once. 3D: Dijkstra on the icosphere mesh mapped
/// onto the boundary, run from the nodes on one side of a cut every symmetric
/// loop crosses, gives 2 min_p d(p, -p). Shortest paths from distinct families
/// and planar sections are closed up symmetrically and improved by a dynamic
/// program over lateral offsets in a tube around the curve. The best screened
/// candidates are then smoothed by per-point line searches on finer resamplings.
GirthResult quotient_girth(const ConvexBody& b, const GirthOptions& options = {});

}  // namespace normvol
