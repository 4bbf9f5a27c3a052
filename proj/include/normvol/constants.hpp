#pragma once

#include <numbers>

namespace normvol {

/// Lebesgue volume of the k-dimensional Euclidean unit ball, 1 <= k <= 3.
double omega(int k);

/// k! for small k.
inline double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace normvol
