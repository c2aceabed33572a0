#include "spde/spectral_ops.hpp"

#include <cmath>
#include <string>

#include "spde/errors.hpp"
#include "spde/fft_backend.hpp"

namespace spde {

SpectralField from_physical_padded(const Grid& grid, std::span<const double> values,
                                   int factor) {
    if (factor < 2) throw ConfigError("from_physical_padded: factor must be >= 2");
    const int m = grid.modes;
    const int p = factor * m;
    std::size_t np = 1;
    for (int a = 0; a < grid.dim; ++a) np *= static_cast<std::size_t>(p);
    if (values.size() != np * static_cast<std::size_t>(grid.components))
        throw ConfigError("from_physical_padded: value count does not match padded grid");

    SpectralField f(grid);
    const double scale = 1.0 / static_cast<double>(np);
    std::vector<std::complex<double>> buf(np);
    const std::size_t n = grid.points_per_component();
    for (int c = 0; c < grid.components; ++c) {
        for (std::size_t i = 0; i < np; ++i)
            buf[i] = values[static_cast<std::size_t>(c) * np + i];
        fft::transform(grid.dim, p, buf.data(), buf.data(), -1);
        for (std::size_t i = 0; i < n; ++i) {
            const auto idx = grid.unflatten(i);
            std::size_t src = 0;
            for (int a = 0; a < grid.dim; ++a) {
                const int sj = grid.signed_index(idx[a]);
                src = src * p + static_cast<std::size_t>(sj >= 0 ? sj : sj + p);
            }
            f.coeff(c, i) = buf[src] * scale;
        }
    }
    f.enforce_hermitian();
    return f;
}

SpectralField multiply_dealiased(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid()))
        throw ConfigError("multiply_dealiased: grid mismatch");
    const Grid& grid = f.grid();
    const auto fv = f.to_physical_padded(2);
    const auto gv = g.to_physical_padded(2);
    std::vector<double> prod(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i) prod[i] = fv[i] * gv[i];
    SpectralField out = from_physical_padded(grid, prod, 2);
    out.dealias();
    return out;
}

SpectralField derivative(const SpectralField& f, int axis) {
    const Grid& grid = f.grid();
    if (axis < 0 || axis >= grid.dim)
        throw ConfigError("derivative: axis " + std::to_string(axis) +
                          " out of range for dim " + std::to_string(grid.dim));
    SpectralField out(grid);
    const std::size_t n = grid.points_per_component();
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = grid.unflatten(i);
        const std::complex<double> ik(0.0, grid.wavenumber(idx[axis]));
        for (int c = 0; c < grid.components; ++c)
            out.coeff(c, i) = ik * f.coeff(c, i);
    }
    return out;
}

SpectralField laplacian(const SpectralField& f) {
    const Grid& grid = f.grid();
    SpectralField out(grid);
    const std::size_t n = grid.points_per_component();
    for (std::size_t i = 0; i < n; ++i) {
        const double k2 = grid.k_squared(i);
        for (int c = 0; c < grid.components; ++c)
            out.coeff(c, i) = -k2 * f.coeff(c, i);
    }
    return out;
}

SpectralField divergence(const SpectralField& f) {
    const Grid& grid = f.grid();
    if (grid.components != grid.dim)
        throw ConfigError("divergence: needs components == dim");
    Grid scalar = grid;
    scalar.components = 1;
    SpectralField out(scalar);
    const std::size_t n = grid.points_per_component();
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = grid.unflatten(i);
        std::complex<double> acc(0.0, 0.0);
        for (int a = 0; a < grid.dim; ++a)
            acc += std::complex<double>(0.0, grid.wavenumber(idx[a])) * f.coeff(a, i);
        out.coeff(0, i) = acc;
    }
    return out;
}

double l2_inner(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid()))
        throw ConfigError("l2_inner: grid mismatch");
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    double acc = 0.0;
    for (std::size_t i = 0; i < fc.size(); ++i)
        acc += fc[i].real() * gc[i].real() + fc[i].imag() * gc[i].imag();
    return acc * f.grid().domain_volume();
}

double l2_norm_sq(const SpectralField& f) {
    const auto fc = f.coeffs();
    double acc = 0.0;
    for (const auto& z : fc) acc += z.real() * z.real() + z.imag() * z.imag();
    return acc * f.grid().domain_volume();
}

double l2_norm(const SpectralField& f) { return std::sqrt(l2_norm_sq(f)); }

double sup_norm(const SpectralField& f, int factor) {
    const auto vals = f.to_physical_padded(factor);
    const std::size_t np = vals.size() / static_cast<std::size_t>(f.grid().components);
    double best = 0.0;
    for (std::size_t i = 0; i < np; ++i) {
        double mag2 = 0.0;
        for (int c = 0; c < f.grid().components; ++c) {
            const double v = vals[static_cast<std::size_t>(c) * np + i];
            mag2 += v * v;
        }
        best = std::max(best, mag2);
    }
    return std::sqrt(best);
}

void add_real_mode(SpectralField& f, int component, const std::array<int, 3>& signed_j,
                   std::complex<double> amp) {
    const Grid& grid = f.grid();
    std::array<int, 3> pos{0, 0, 0};
    std::array<int, 3> neg{0, 0, 0};
    for (int a = 0; a < grid.dim; ++a) {
        const int m = grid.modes;
        if (signed_j[a] < -m / 2 + 1 || signed_j[a] > m / 2)
            throw ConfigError("add_real_mode: mode index out of range");
        pos[a] = (signed_j[a] % m + m) % m;
        neg[a] = (m - pos[a]) % m;
    }
    const std::size_t ip = grid.flatten(pos);
    const std::size_t in = grid.flatten(neg);
    f.coeff(component, ip) += amp;
    if (in != ip) f.coeff(component, in) += std::conj(amp);
}

} // namespace spde
