#include "pqd/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pqd {

double shannon_term(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x);
}

double binary_entropy(double x) {
    if (x < -kDomainSlack || x > 1.0 + kDomainSlack)
        throw std::domain_error("binary_entropy: x must be in [0,1]; got " +
                                std::to_string(x));
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_of_gap(double kappa) {
    if (kappa >= 1.0) return 0.0;
    if (kappa < 0.0) kappa = 0.0;
    const double hi = 0.5 * (1.0 + kappa);
    const double lo = 0.5 * (1.0 - kappa);
    double e = 0.0;
    if (hi > 0.0) e -= hi * std::log2(hi);
    if (lo > 0.0) e -= lo * std::log2(lo);
    return e;
}

} // namespace pqd
