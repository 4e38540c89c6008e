#include <algorithm>
#include <cmath>

#include "zlab/types.hpp"

namespace zlab {

void DomainSpec::validate() const {
    if (!(exclusion_radius > 0.0 && exclusion_radius < 0.5))
        throw DomainViolation("DomainSpec: exclusion radius must lie in (0, 0.5), got " +
                              std::to_string(exclusion_radius));
}

double DomainSpec::distance_to_exclusions(const ComplexPoint& s) const {
    // Excluded centers: odd positive integers and even non-positive integers.
    double x = s.re, y = s.im;
    double odd = 2.0 * std::round((x - 1.0) / 2.0) + 1.0;
    odd = std::max(odd, 1.0);
    double even = 2.0 * std::round(x / 2.0);
    even = std::min(even, 0.0);
    return std::min(std::hypot(x - odd, y), std::hypot(x - even, y));
}

}  // namespace zlab
