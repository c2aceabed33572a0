#pragma once

// Hilbert-scale machinery for L = Laplacian on the torus: fractional Sobolev
// norms ||u||_a = ||(I-L)^{a/2} u||, the heat semigroup T_eps = e^{eps L}
// used as mollifier, and a ladder check of the semigroup/scale estimates
// (commutation, approximation and smoothing rates).
//
// All operators are diagonal in Fourier space with eigenvalue table
// lambda(j) = 1 + |k(j)|^2 >= 1, so algebraic identities (semigroup law,
// fractional-power additivity, commutation) hold to roundoff.

#include <span>
#include <vector>

#include "json.hpp"
#include "spde/spectral_field.hpp"

namespace spde {

class ScaleOperator {
public:
    explicit ScaleOperator(const Grid& grid);

    const Grid& grid() const { return grid_; }
    std::span<const double> eigenvalues() const { return lambda_; }

    double sobolev_norm_sq(const SpectralField& f, double alpha) const;
    double sobolev_norm(const SpectralField& f, double alpha) const;
    // <f,g>_alpha, the lambda^alpha-weighted pairing; alpha = 0 is l2_inner
    double sobolev_inner(const SpectralField& f, const SpectralField& g, double alpha) const;

    // (I-L)^{alpha/2} f, mode-wise lambda^{alpha/2}
    SpectralField apply_fractional(const SpectralField& f, double alpha) const;
    // T_eps f = e^{eps Laplacian} f, mode-wise e^{-eps |k|^2}; eps = 0 is identity
    SpectralField apply_semigroup(const SpectralField& f, double eps) const;

private:
    Grid grid_;
    std::vector<double> lambda_; // 1 + |k|^2 per flat mode index
};

struct Prop21Report {
    int m = 0;
    int k = 0;
    std::vector<double> eps_ladder;
    std::vector<double> approx_ratio;    // ||T_eps f - f||_m / (eps^{k/2} ||f||_{m+k})
    std::vector<double> smoothing_ratio; // ||T_eps f||_{m+k} eps^{k/2} / ||f||_m
    double commutation_residual = 0.0;   // max rel residual of (I-L)^{m/2} T_eps vs swapped
    bool pass = false;

    nlohmann::json to_json() const;
};

// f nonzero, eps_ladder decreasing; flags PASS when both ratio families show
// no growth trend toward small eps and commutation stays below 1e-12.
Prop21Report verify_prop21(const ScaleOperator& scale, const SpectralField& f, int m,
                           int k, std::span<const double> eps_ladder);

} // namespace spde
