#include "spde/spectral_field.hpp"

#include <cmath>
#include <string>

#include "spde/errors.hpp"
#include "spde/fft_backend.hpp"

namespace spde {
namespace {

void check_same_grid(const Grid& a, const Grid& b, const char* op) {
    if (!(a == b))
        throw ConfigError(std::string(op) + ": grid mismatch");
}

// position of the signed mode j of an M-grid inside a P-grid spectrum
inline std::size_t embed_index(int signed_j, int padded) {
    return static_cast<std::size_t>(signed_j >= 0 ? signed_j : signed_j + padded);
}

} // namespace

SpectralField SpectralField::from_physical(const Grid& grid, std::span<const double> values) {
    if (values.size() != grid.total_size())
        throw ConfigError("from_physical: expected " + std::to_string(grid.total_size()) +
                          " values, got " + std::to_string(values.size()));
    SpectralField f(grid);
    const std::size_t n = grid.points_per_component();
    const double scale = 1.0 / static_cast<double>(n);
    std::vector<std::complex<double>> buf(n);
    for (int c = 0; c < grid.components; ++c) {
        for (std::size_t i = 0; i < n; ++i)
            buf[i] = values[static_cast<std::size_t>(c) * n + i];
        fft::transform(grid.dim, grid.modes, buf.data(), buf.data(), -1);
        for (std::size_t i = 0; i < n; ++i)
            f.coeff(c, i) = buf[i] * scale;
    }
    f.enforce_hermitian();
    return f;
}

std::vector<double> SpectralField::to_physical() const {
    const std::size_t n = grid_.points_per_component();
    std::vector<double> out(grid_.total_size());
    std::vector<std::complex<double>> buf(n);
    for (int c = 0; c < grid_.components; ++c) {
        for (std::size_t i = 0; i < n; ++i) buf[i] = coeff(c, i);
        fft::transform(grid_.dim, grid_.modes, buf.data(), buf.data(), +1);
        for (std::size_t i = 0; i < n; ++i)
            out[static_cast<std::size_t>(c) * n + i] = buf[i].real();
    }
    return out;
}

std::vector<double> SpectralField::to_physical_padded(int factor) const {
    if (factor < 2) throw ConfigError("to_physical_padded: factor must be >= 2");
    const int m = grid_.modes;
    const int p = factor * m;
    std::size_t np = 1;
    for (int a = 0; a < grid_.dim; ++a) np *= static_cast<std::size_t>(p);

    std::vector<double> out(np * grid_.components);
    std::vector<std::complex<double>> buf(np);
    const std::size_t n = grid_.points_per_component();
    for (int c = 0; c < grid_.components; ++c) {
        std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            const auto idx = grid_.unflatten(i);
            std::size_t flat = 0;
            for (int a = 0; a < grid_.dim; ++a)
                flat = flat * p + embed_index(grid_.signed_index(idx[a]), p);
            buf[flat] = coeff(c, i);
        }
        fft::transform(grid_.dim, p, buf.data(), buf.data(), +1);
        for (std::size_t i = 0; i < np; ++i)
            out[static_cast<std::size_t>(c) * np + i] = buf[i].real();
    }
    return out;
}

void SpectralField::enforce_hermitian() {
    const std::size_t n = grid_.points_per_component();
    const int m = grid_.modes;
    for (int c = 0; c < grid_.components; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            auto idx = grid_.unflatten(i);
            std::array<int, 3> neg{0, 0, 0};
            for (int a = 0; a < grid_.dim; ++a) neg[a] = (m - idx[a]) % m;
            const std::size_t j = grid_.flatten(neg);
            if (j < i) continue; // each pair once
            const std::complex<double> ci = coeff(c, i);
            const std::complex<double> cj = coeff(c, j);
            const std::complex<double> avg = 0.5 * (ci + std::conj(cj));
            coeff(c, i) = avg;
            coeff(c, j) = std::conj(avg);
        }
    }
}

void SpectralField::dealias() {
    const std::size_t n = grid_.points_per_component();
    const int limit = grid_.dealias_limit();
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = grid_.unflatten(i);
        bool kill = false;
        for (int a = 0; a < grid_.dim; ++a)
            if (std::abs(grid_.signed_index(idx[a])) > limit) { kill = true; break; }
        if (!kill) continue;
        for (int c = 0; c < grid_.components; ++c)
            coeff(c, i) = {0.0, 0.0};
    }
}

bool SpectralField::finite() const {
    for (const auto& z : coeffs_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
    check_same_grid(grid_, rhs.grid_, "operator+=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
    check_same_grid(grid_, rhs.grid_, "operator-=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& z : coeffs_) z *= s;
    return *this;
}

void SpectralField::axpy(double a, const SpectralField& x) {
    check_same_grid(grid_, x.grid_, "axpy");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * x.coeffs_[i];
}

SpectralField operator+(SpectralField lhs, const SpectralField& rhs) {
    lhs += rhs;
    return lhs;
}

SpectralField operator-(SpectralField lhs, const SpectralField& rhs) {
    lhs -= rhs;
    return lhs;
}

SpectralField operator*(double s, SpectralField f) {
    f *= s;
    return f;
}

} // namespace spde
