#pragma once

#include "normvol/ellipsoid.hpp"
#include "normvol/linalg.hpp"
#include "normvol/polytope.hpp"
#include "normvol/sphere_grid.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace normvol {

/// Centrally symmetric convex body with the origin strictly inside.
///
/// Either an exact polytope or an ellipsoid. Immutable; all queries are pure.
class ConvexBody {
  public:
    ConvexBody() = default;
    /// Throws InputError if p is not centrally symmetric, DegeneracyError if
    /// its volume is below 1e-12.
    ConvexBody(Polytope p);
    ConvexBody(Ellipsoid e);

    int dim() const;
    bool is_polytope() const { return std::holds_alternative<Polytope>(rep_); }
    bool is_ellipsoid() const { return std::holds_alternative<Ellipsoid>(rep_); }
    const Polytope& polytope() const { return std::get<Polytope>(rep_); }
    const Ellipsoid& ellipsoid() const { return std::get<Ellipsoid>(rep_); }

    /// h_K(xi) = sup_{x in K} <xi, x>; throws InputError for xi = 0.
    double support(const Vec& xi) const;
    /// rho_K(x) = max{t >= 0 : t x in K}; throws InputError for x = 0.
    double radial(const Vec& x) const;
    /// Minkowski functional 1 / rho_K(x).
    double gauge(const Vec& x) const;
    double volume() const;
    /// Largest Euclidean norm of a point of K.
    double circumradius() const;

    ConvexBody polar() const;
    ConvexBody transform(const Mat& a) const;
    ConvexBody scaled(double factor) const;

  private:
    std::variant<Polytope, Ellipsoid> rep_;
};

/// Star body given by positive radial values on a direction grid.
///
/// Between nodes the radial function is interpolated linearly (2D: in angle,
/// 3D: barycentric on the icosphere triangle) and extended (-1)-homogeneously.
/// An optional exact convex body records the body this one was sampled from.
class StarBody {
  public:
    StarBody() = default;
    /// Throws InputError for size mismatch or non-positive values.
    StarBody(GridPtr grid, std::vector<double> rho);

    int dim() const { return grid_->dim(); }
    const DirectionGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::span<const double> rho() const { return rho_; }
    double rho_at(std::size_t node) const { return rho_[node]; }

    double radial(const Vec& x) const;
    /// (1/n) sum_i w_i rho(u_i)^n
    double volume() const;
    bool is_symmetric(double tol = 1e-12) const;

    const std::optional<ConvexBody>& exact() const { return exact_; }
    StarBody with_exact(ConvexBody body) const;

    /// Radial sum; both bodies must share the grid.
    StarBody operator+(const StarBody& other) const;
    StarBody dilated(double factor) const;

  private:
    GridPtr grid_;
    std::vector<double> rho_;
    std::optional<ConvexBody> exact_;
};

using Body = std::variant<ConvexBody, StarBody>;

int dim(const Body& body);
double radial(const Body& body, const Vec& x);
double volume(const ConvexBody& body);
double volume(const StarBody& body);
double volume(const Body& body);

/// Radial function of a convex body sampled on the grid, tagged with the body.
StarBody sample_radial(const ConvexBody& body, const GridPtr& grid);

/// Hyperplane section through the origin with unit normal `normal`, expressed
/// in complement_basis(normal). Star bodies are resampled on a grid of the
/// given resolution (ignored for planar bodies).
ConvexBody section(const ConvexBody& body, const Vec& normal);
StarBody section(const StarBody& body, const Vec& normal, int resolution = 720);

/// (n-1)-volume of the central section orthogonal to the unit vector `normal`.
double section_volume(const ConvexBody& body, const Vec& normal);
double section_volume(const StarBody& body, const Vec& normal, int resolution = 720);

/// Orthogonal projection along the unit vector v onto v^perp, expressed in
/// complement_basis(v). This is the unit ball of the quotient norm V/<v>.
ConvexBody shadow(const ConvexBody& body, const Vec& v);

/// (n-1)-volume of shadow(body, v).
double shadow_volume(const ConvexBody& body, const Vec& v);

/// Hausdorff distance between polar(shadow(B, v)) and section(polar(B), v),
/// both in complement_basis(v).
double duality_check_quotient(const ConvexBody& b, const Vec& v);

/// Hausdorff distance between two convex bodies, estimated from support
/// values on a direction grid (exact for vertex directions in 1D).
double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, const GridPtr& grid);

}  // namespace normvol
