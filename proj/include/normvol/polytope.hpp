#pragma once

#include "normvol/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace normvol {

/// One facet: outward unit normal, offset <normal, x> = offset, (n-1)-measure.
///
/// In 3D the vertex indices run counter-clockwise seen from outside; in 2D
/// they are the two endpoints; in 1D the single endpoint (measure 1).
struct Facet {
    Vec normal;
    double offset = 0.0;
    double area = 0.0;
    std::vector<std::size_t> vertices;
};

/// Convex polytope in dimension 1..3 with consistent vertex and facet data.
///
/// Vertices are extreme points only; facets are maximal (coplanar triangles
/// are merged). The origin is strictly interior (all offsets > 0).
class Polytope {
  public:
    Polytope() = default;
    Polytope(int dim, std::vector<Vec> vertices, std::vector<Facet> facets);

    int dim() const { return dim_; }
    std::span<const Vec> vertices() const { return vertices_; }
    std::span<const Facet> facets() const { return facets_; }
    const Vec& vertex(std::size_t i) const { return vertices_[i]; }

    /// max_v <xi, v>
    double support(const Vec& xi) const;
    /// max_f <normal_f, x> / offset_f (the gauge); zero only at the origin.
    double gauge(const Vec& x) const;

    /// Undirected edges (3D only), derived from facet cycles.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    double max_vertex_norm() const;
    /// K = -K up to tol * max vertex norm: every vertex has an antipodal vertex
    /// or its negation lies in K.
    bool is_centrally_symmetric(double tol) const;

  private:
    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;
};

/// Convex hull of a point cloud in dimension 1..3.
///
/// Throws DegeneracyError when the points span a lower-dimensional set or the
/// origin is not strictly inside the hull.
Polytope convex_hull(std::span<const Vec> points);

/// Intersection of halfspaces <normal_i, x> <= offset_i with offset_i > 0.
///
/// Normals need not be unit length. Throws DegeneracyError when the
/// intersection is unbounded or lower dimensional.
Polytope halfspace_intersection(std::span<const Vec> normals, std::span<const double> offsets);

/// Lebesgue volume via the cone decomposition from the origin.
double polytope_volume(const Polytope& p);

/// Image under an invertible linear map.
Polytope transform(const Polytope& p, const Mat& a);

/// Polar body {xi : <xi, x> <= 1 for all x in p}.
Polytope polar(const Polytope& p);

}  // namespace normvol
