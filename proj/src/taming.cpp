#include "spde/taming.hpp"

#include <cmath>
#include <stdexcept>

#include "spde/errors.hpp"

namespace spde {

TamingFunction::TamingFunction(double n_level) : n_(n_level) {
    if (!(n_level > 0.0) || !std::isfinite(n_level))
        throw ConfigError("taming: N must be positive and finite");
}

double TamingFunction::value(double r) const {
    if (r < 0.0) throw std::domain_error("taming: r must be nonnegative");
    if (r <= n_) return 0.0;
    if (r >= n_ + 2.0) return r - n_;
    const double s = r - n_;
    const double s3 = s * s * s;
    return s3 * (1.5 - s + (3.0 / 16.0) * s * s);
}

double TamingFunction::derivative(double r) const {
    if (r < 0.0) throw std::domain_error("taming: r must be nonnegative");
    if (r <= n_) return 0.0;
    if (r >= n_ + 2.0) return 1.0;
    const double s = r - n_;
    const double s2 = s * s;
    return s2 * (4.5 - 4.0 * s + (15.0 / 16.0) * s2);
}

} // namespace spde
