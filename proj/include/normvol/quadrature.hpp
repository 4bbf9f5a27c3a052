#pragma once

#include "normvol/linalg.hpp"

#include <array>
#include <span>
#include <vector>

namespace normvol {

struct Rule1d {
    std::vector<double> nodes;  // on [0, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule with `points` nodes mapped to [0, 1].
const Rule1d& gauss_legendre(int points);

/// Degree-5 seven-point rule on the reference triangle: barycentric
/// coordinates and weights summing to 1.
struct TriangleRule {
    std::array<std::array<double, 3>, 7> bary;
    std::array<double, 7> weights;
};
const TriangleRule& triangle_rule7();

/// Splits a convex polygon (ccw in its plane, points in R^3) by the plane
/// through the origin with the given normal. Empty sides are omitted.
std::vector<std::vector<Vec>> split_polygon(const std::vector<Vec>& polygon, const Vec& plane_normal);

}  // namespace normvol
