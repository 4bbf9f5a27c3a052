#include "normvol/minimize.hpp"

#include "normvol/error.hpp"

namespace normvol {

Minimum minimize_1d_convex(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo <= hi) || !(tol > 0.0)) throw InputError("minimize_1d_convex: invalid bracket or tolerance");
    return golden_section(f, lo, hi, tol);
}

}  // namespace normvol
