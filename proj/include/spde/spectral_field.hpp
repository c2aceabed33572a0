#pragma once

// Real fields on a periodic torus stored as full complex Fourier coefficients
// c_j with u(x) = sum_j c_j exp(i k_j . x), Hermitian-symmetric so the
// physical field is real. Storage is component-major, row-major in the
// multi-index. Values are plain value types: copies are independent, and all
// free operations return new fields (per-call scratch only, no shared state).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "spde/grid.hpp"

namespace spde {

class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const Grid& grid)
        : grid_(grid), coeffs_(grid.total_size()) {}

    // values: component-major physical samples, length components * M^dim.
    // Enforces Hermitian symmetry on the result.
    static SpectralField from_physical(const Grid& grid, std::span<const double> values);

    const Grid& grid() const { return grid_; }

    std::span<const std::complex<double>> coeffs() const { return coeffs_; }
    std::span<std::complex<double>> coeffs() { return coeffs_; }

    std::complex<double>& coeff(int component, std::size_t flat) {
        return coeffs_[static_cast<std::size_t>(component) * grid_.points_per_component() + flat];
    }
    const std::complex<double>& coeff(int component, std::size_t flat) const {
        return coeffs_[static_cast<std::size_t>(component) * grid_.points_per_component() + flat];
    }

    // component-major physical samples on the native M^dim grid
    std::vector<double> to_physical() const;
    // samples on the zero-padded (factor*M)^dim grid (spectral interpolation)
    std::vector<double> to_physical_padded(int factor) const;

    // c(-j) <- conjugate pair average; makes self-paired (Nyquist) modes real
    void enforce_hermitian();
    // zero every mode with |signed j| > M/3 on any axis (includes Nyquist)
    void dealias();

    bool finite() const;

    SpectralField& operator+=(const SpectralField& rhs);
    SpectralField& operator-=(const SpectralField& rhs);
    SpectralField& operator*=(double s);
    void axpy(double a, const SpectralField& x); // this += a*x

private:
    Grid grid_;
    std::vector<std::complex<double>> coeffs_;
};

SpectralField operator+(SpectralField lhs, const SpectralField& rhs);
SpectralField operator-(SpectralField lhs, const SpectralField& rhs);
SpectralField operator*(double s, SpectralField f);

} // namespace spde
