#include "normvol/ellipsoid.hpp"

#include "normvol/constants.hpp"
#include "normvol/error.hpp"

namespace normvol {

Ellipsoid::Ellipsoid(Mat q) : q_(std::move(q)) {
    if (q_.rows() != q_.cols() || q_.rows() < 1 || q_.rows() > 3) throw InputError("ellipsoid: Q must be square of size 1..3");
    if (!q_.allFinite()) throw InputError("ellipsoid: non-finite entry in Q");
    const double scale = q_.cwiseAbs().maxCoeff();
    if (((q_ - q_.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * std::max(scale, 1.0)) throw InputError("ellipsoid: Q is not symmetric");
    q_ = 0.5 * (q_ + q_.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> eig(q_);
    if (eig.eigenvalues().minCoeff() <= 0.0) throw InputError("ellipsoid: Q is not positive definite");
    q_inv_ = q_.inverse();
    q_inv_ = 0.5 * (q_inv_ + q_inv_.transpose());
}

Ellipsoid Ellipsoid::ball(int dim, double radius) {
    return Ellipsoid(Mat::Identity(dim, dim) / (radius * radius));
}

double Ellipsoid::volume() const { return omega(dim()) / std::sqrt(determinant_of_columns(q_)); }

Ellipsoid Ellipsoid::section(const Basis& basis) const {
    Mat m = basis.transpose() * q_ * basis;
    return Ellipsoid(0.5 * (m + m.transpose()));
}

Ellipsoid Ellipsoid::shadow(const Basis& basis) const {
    Mat m = basis.transpose() * q_inv_ * basis;
    m = 0.5 * (m + m.transpose());
    return Ellipsoid(Mat(m.inverse()));
}

Ellipsoid Ellipsoid::transform(const Mat& a) const {
    const Mat ai = a.inverse();
    Mat m = ai.transpose() * q_ * ai;
    return Ellipsoid(0.5 * (m + m.transpose()));
}

}  // namespace normvol
