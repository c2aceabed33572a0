#pragma once

// Mode-wise calculus and dealiased products on SpectralField. Derivatives and
// the Laplacian are exact spectral multiplications by ik and -|k|^2; products
// go through a factor-2 zero-padded physical grid and come back truncated to
// |j| <= M/3 per axis (2/3 rule), which also zeroes the Nyquist plane.

#include <array>
#include <complex>
#include <span>

#include "spde/spectral_field.hpp"

namespace spde {

// transform samples on the (factor*M)^dim grid back to M-grid coefficients
// (modes beyond M discarded); result is Hermitian-enforced, not dealiased.
SpectralField from_physical_padded(const Grid& grid, std::span<const double> values,
                                   int factor);

// componentwise pointwise product, dealiased by the 2/3 rule
SpectralField multiply_dealiased(const SpectralField& f, const SpectralField& g);

SpectralField derivative(const SpectralField& f, int axis);
SpectralField laplacian(const SpectralField& f);
// requires components == dim; result is a scalar field on the same grid
SpectralField divergence(const SpectralField& f);

// Parseval-consistent L^2 pairing <f,g>_0 = integral over the torus
double l2_inner(const SpectralField& f, const SpectralField& g);
double l2_norm_sq(const SpectralField& f);
double l2_norm(const SpectralField& f);

// max over collocation points of the pointwise Euclidean magnitude |u(x)|,
// evaluated on a factor-padded grid (default 2x per the tau_N convention)
double sup_norm(const SpectralField& f, int factor = 2);

// add amp * exp(i k_j x) + conj to one component (keeps the field real)
void add_real_mode(SpectralField& f, int component, const std::array<int, 3>& signed_j,
                   std::complex<double> amp);

} // namespace spde
