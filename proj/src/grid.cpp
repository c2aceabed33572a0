#include "spde/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace spde {

Grid Grid::make(int dim, int modes, double period, int components) {
    if (dim < 1 || dim > 3)
        throw ConfigError("grid: dim must be 1, 2 or 3, got " + std::to_string(dim));
    if (modes < 8 || modes % 2 != 0)
        throw ConfigError("grid: modes must be even and >= 8, got " + std::to_string(modes));
    if (!(period > 0.0) || !std::isfinite(period))
        throw ConfigError("grid: period must be positive and finite");
    if (components < 1)
        throw ConfigError("grid: components must be positive");
    return Grid{dim, modes, period, components};
}

std::size_t Grid::points_per_component() const {
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(modes);
    return n;
}

double Grid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= period / modes;
    return v;
}

double Grid::domain_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= period;
    return v;
}

double Grid::wavenumber(int axis_index) const {
    return 2.0 * std::numbers::pi * signed_index(axis_index) / period;
}

std::array<int, 3> Grid::unflatten(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % modes);
        flat /= modes;
    }
    return idx;
}

std::size_t Grid::flatten(const std::array<int, 3>& idx) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim; ++a)
        flat = flat * modes + static_cast<std::size_t>(idx[a]);
    return flat;
}

double Grid::k_squared(std::size_t flat) const {
    const auto idx = unflatten(flat);
    double k2 = 0.0;
    for (int a = 0; a < dim; ++a) {
        const double k = wavenumber(idx[a]);
        k2 += k * k;
    }
    return k2;
}

} // namespace spde
