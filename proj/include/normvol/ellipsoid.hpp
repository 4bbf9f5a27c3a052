#pragma once

#include "normvol/linalg.hpp"

namespace normvol {

/// Centered ellipsoid {x : x^T Q x <= 1} with Q symmetric positive definite.
class Ellipsoid {
  public:
    Ellipsoid() = default;
    /// Throws InputError unless q is symmetric (1e-12) and positive definite.
    explicit Ellipsoid(Mat q);

    static Ellipsoid ball(int dim, double radius = 1.0);

    int dim() const { return static_cast<int>(q_.rows()); }
    const Mat& q() const { return q_; }
    const Mat& q_inverse() const { return q_inv_; }

    double support(const Vec& xi) const { return std::sqrt(xi.dot(q_inv_ * xi)); }
    double gauge(const Vec& x) const { return std::sqrt(x.dot(q_ * x)); }
    double volume() const;

    Ellipsoid polar() const { return Ellipsoid(q_inv_); }
    /// Section by the subspace spanned by the columns of `basis`, in those coordinates.
    Ellipsoid section(const Basis& basis) const;
    /// Orthogonal projection onto span(basis), in those coordinates.
    Ellipsoid shadow(const Basis& basis) const;
    /// Image under the invertible map a.
    Ellipsoid transform(const Mat& a) const;

  private:
    Mat q_;
    Mat q_inv_;
};

}  // namespace normvol
