#include "spde/hilbert_scale.hpp"

#include <algorithm>
#include <cmath>

#include "spde/errors.hpp"
#include "spde/spectral_ops.hpp"

namespace spde {

ScaleOperator::ScaleOperator(const Grid& grid) : grid_(grid) {
    const std::size_t n = grid_.points_per_component();
    lambda_.resize(n);
    for (std::size_t i = 0; i < n; ++i) lambda_[i] = 1.0 + grid_.k_squared(i);
}

double ScaleOperator::sobolev_norm_sq(const SpectralField& f, double alpha) const {
    if (!(f.grid() == grid_)) throw ConfigError("sobolev_norm: grid mismatch");
    const std::size_t n = grid_.points_per_component();
    double acc = 0.0;
    for (int c = 0; c < grid_.components; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto z = f.coeff(c, i);
            acc += std::pow(lambda_[i], alpha) * (z.real() * z.real() + z.imag() * z.imag());
        }
    }
    return acc * grid_.domain_volume();
}

double ScaleOperator::sobolev_norm(const SpectralField& f, double alpha) const {
    return std::sqrt(sobolev_norm_sq(f, alpha));
}

double ScaleOperator::sobolev_inner(const SpectralField& f, const SpectralField& g,
                                    double alpha) const {
    if (!(f.grid() == grid_) || !(g.grid() == grid_))
        throw ConfigError("sobolev_inner: grid mismatch");
    const std::size_t n = grid_.points_per_component();
    double acc = 0.0;
    for (int c = 0; c < grid_.components; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto a = f.coeff(c, i);
            const auto b = g.coeff(c, i);
            acc += std::pow(lambda_[i], alpha) * (a.real() * b.real() + a.imag() * b.imag());
        }
    }
    return acc * grid_.domain_volume();
}

SpectralField ScaleOperator::apply_fractional(const SpectralField& f, double alpha) const {
    if (!(f.grid() == grid_)) throw ConfigError("apply_fractional: grid mismatch");
    SpectralField out = f;
    const std::size_t n = grid_.points_per_component();
    for (std::size_t i = 0; i < n; ++i) {
        const double w = std::pow(lambda_[i], 0.5 * alpha);
        for (int c = 0; c < grid_.components; ++c) out.coeff(c, i) *= w;
    }
    return out;
}

SpectralField ScaleOperator::apply_semigroup(const SpectralField& f, double eps) const {
    if (!(f.grid() == grid_)) throw ConfigError("apply_semigroup: grid mismatch");
    if (eps < 0.0) throw std::domain_error("apply_semigroup: eps must be nonnegative");
    if (eps == 0.0) return f;
    SpectralField out = f;
    const std::size_t n = grid_.points_per_component();
    for (std::size_t i = 0; i < n; ++i) {
        const double w = std::exp(-eps * (lambda_[i] - 1.0)); // |k|^2 = lambda - 1
        for (int c = 0; c < grid_.components; ++c) out.coeff(c, i) *= w;
    }
    return out;
}

nlohmann::json Prop21Report::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["k"] = k;
    j["eps_ladder"] = eps_ladder;
    j["approx_ratio"] = approx_ratio;
    j["smoothing_ratio"] = smoothing_ratio;
    j["commutation_residual"] = commutation_residual;
    j["pass"] = pass;
    return j;
}

Prop21Report verify_prop21(const ScaleOperator& scale, const SpectralField& f, int m,
                           int k, std::span<const double> eps_ladder) {
    const double f_m = scale.sobolev_norm(f, m);
    if (f_m == 0.0) throw std::domain_error("verify_prop21: zero field");
    if (eps_ladder.size() < 2) throw ConfigError("verify_prop21: need at least 2 eps values");
    for (std::size_t i = 1; i < eps_ladder.size(); ++i)
        if (!(eps_ladder[i] < eps_ladder[i - 1]) || !(eps_ladder[i] > 0.0))
            throw ConfigError("verify_prop21: eps ladder must be positive and decreasing");

    Prop21Report rep;
    rep.m = m;
    rep.k = k;
    rep.eps_ladder.assign(eps_ladder.begin(), eps_ladder.end());

    const double f_mk = scale.sobolev_norm(f, m + k);
    for (const double eps : eps_ladder) {
        const SpectralField tf = scale.apply_semigroup(f, eps);
        const double khalf = std::pow(eps, 0.5 * k);
        rep.approx_ratio.push_back(scale.sobolev_norm(tf - f, m) / (khalf * f_mk));
        rep.smoothing_ratio.push_back(scale.sobolev_norm(tf, m + k) * khalf / f_m);

        // Prop 2.1(ii): the fractional power and the semigroup commute
        const SpectralField lhs = scale.apply_fractional(tf, m);
        const SpectralField rhs = scale.apply_semigroup(scale.apply_fractional(f, m), eps);
        rep.commutation_residual =
            std::max(rep.commutation_residual, l2_norm(lhs - rhs) / f_m);
    }

    // "no growth trend": the ratio at the smallest eps must not exceed twice
    // the max seen over the larger-eps half of the ladder
    auto no_growth = [](const std::vector<double>& r) {
        const std::size_t half = std::max<std::size_t>(1, r.size() / 2);
        double head = 0.0;
        for (std::size_t i = 0; i < half; ++i) head = std::max(head, r[i]);
        for (double v : r)
            if (!std::isfinite(v)) return false;
        return r.back() <= 2.0 * head;
    };
    rep.pass = no_growth(rep.approx_ratio) && no_growth(rep.smoothing_ratio) &&
               rep.commutation_residual < 1e-12;
    return rep;
}

} // namespace spde
