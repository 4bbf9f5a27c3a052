#pragma once

#include "normvol/error.hpp"

#include <cmath>

namespace normvol {

namespace detail {
inline double checked(double v) {
    if (!std::isfinite(v)) throw NumericError("minimize_1d_convex: objective returned a non-finite value");
    return v;
}
}  // namespace detail

template <class F>
Minimum golden_section(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    Minimum out;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = detail::checked(f(c));
    double fd = detail::checked(f(d));
    out.evaluations = 2;
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = detail::checked(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = detail::checked(f(d));
        }
        ++out.evaluations;
    }
    // Compare the interior estimate with the bracket ends so that minima at an
    // edge are reported exactly.
    out.argmin = 0.5 * (a + b);
    out.value = detail::checked(f(out.argmin));
    const double flo = detail::checked(f(lo));
    const double fhi = detail::checked(f(hi));
    out.evaluations += 3;
    if (flo < out.value) {
        out.argmin = lo;
        out.value = flo;
    }
    if (fhi < out.value) {
        out.argmin = hi;
        out.value = fhi;
    }
    return out;
}

}  // namespace normvol
