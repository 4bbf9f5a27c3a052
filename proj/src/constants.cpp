#include "normvol/constants.hpp"

#include "normvol/error.hpp"

#include <string>

namespace normvol {

double omega(int k) {
    switch (k) {
        case 1: return 2.0;
        case 2: return std::numbers::pi;
        case 3: return 4.0 * std::numbers::pi / 3.0;
        default: throw InputError("omega: dimension " + std::to_string(k) + " outside 1..3");
    }
}

}  // namespace normvol
