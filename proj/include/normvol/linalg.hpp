#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace normvol {

// Vectors and matrices of runtime dimension 1..3, stored inline.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;
// Orthonormal basis of a hyperplane, one column per basis vector.
using Basis = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 2>;

inline Vec vec2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

inline Vec vec3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

inline Vec unit_axis(int dim, int k) {
    Vec v = Vec::Zero(dim);
    v[k] = 1.0;
    return v;
}

inline Eigen::Vector3d to3(const Vec& v) { return {v[0], v[1], v[2]}; }

/// Orthonormal basis of the hyperplane orthogonal to the unit vector `normal`.
///
/// The construction is deterministic so that every caller projecting onto
/// the same hyperplane gets the same coordinates.
inline Basis complement_basis(const Vec& normal) {
    const int n = static_cast<int>(normal.size());
    Basis basis(n, n - 1);
    if (n == 2) {
        basis(0, 0) = -normal[1];
        basis(1, 0) = normal[0];
        return basis;
    }
    int k = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(normal[i]) < std::abs(normal[k])) k = i;
    }
    Eigen::Vector3d v = to3(normal);
    Eigen::Vector3d a = Eigen::Vector3d::Unit(k) - v[k] * v;
    a.normalize();
    Eigen::Vector3d b = v.cross(a);
    basis.col(0) = a;
    basis.col(1) = b;
    return basis;
}

inline double determinant_of_columns(const Mat& m) {
    switch (m.rows()) {
        case 1: return m(0, 0);
        case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        default: return m.determinant();
    }
}

}  // namespace normvol
