#pragma once

#include <functional>

namespace normvol {

struct Minimum {
    double argmin = 0.0;
    double value = 0.0;
    int evaluations = 0;
};

/// Golden-section search for a convex function on [lo, hi].
///
/// The returned argmin is within `tol` of a true minimizer. Throws
/// NumericError when f produces a non-finite value.
Minimum minimize_1d_convex(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Same search with the function type deduced, avoiding std::function in hot loops.
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double tol);

}  // namespace normvol

#include "normvol/detail/golden_section.hpp"
