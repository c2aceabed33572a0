#include "spde/integrator.hpp"

#include <cmath>

#include "spde/errors.hpp"
#include "spde/spectral_ops.hpp"

namespace spde {

std::size_t SchemeConfig::step_count() const {
    if (!(dt > 0.0)) throw ConfigError("scheme: dt must be positive");
    if (T < 0.0) throw ConfigError("scheme: T must be nonnegative");
    return static_cast<std::size_t>(std::llround(T / dt));
}

Stepper::Stepper(const Dynamics& dyn, const SchemeConfig& cfg) : dyn_(dyn), cfg_(cfg) {
    if (!(cfg.dt > 0.0)) throw ConfigError("scheme: dt must be positive");
    if (cfg.epsilon < 0.0) throw ConfigError("scheme: epsilon must be nonnegative");
    const Grid& grid = dyn.grid();
    const std::size_t n = grid.points_per_component();
    linear_factor_.resize(n);
    if (cfg.epsilon > 0.0) mollify_factor_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k2 = grid.k_squared(i);
        const double moll = cfg.epsilon > 0.0 ? std::exp(-2.0 * cfg.epsilon * k2) : 1.0;
        const double symbol = k2 * moll; // -symbol is the mollified generator
        linear_factor_[i] = cfg.scheme == Scheme::exponential_euler
                                ? std::exp(-cfg.dt * symbol)
                                : 1.0 / (1.0 + cfg.dt * symbol);
        if (cfg.epsilon > 0.0) mollify_factor_[i] = std::exp(-cfg.epsilon * k2);
    }
}

SpectralField Stepper::step(const SpectralField& u, std::span<const double> increments,
                            std::size_t step_index) const {
    const Grid& grid = dyn_.grid();
    const std::size_t n = grid.points_per_component();

    auto mollify = [&](SpectralField& f) {
        if (mollify_factor_.empty()) return;
        for (std::size_t i = 0; i < n; ++i)
            for (int c = 0; c < grid.components; ++c) f.coeff(c, i) *= mollify_factor_[i];
    };

    SpectralField v = u;
    mollify(v); // T_eps u

    SpectralField forcing = dyn_.drift(v);
    forcing *= cfg_.dt;
    SpectralField noise_term = dyn_.diffusion_apply(v, increments);
    forcing += noise_term;
    mollify(forcing); // T_eps on drift and noise alike

    SpectralField next = u;
    for (std::size_t i = 0; i < n; ++i)
        for (int c = 0; c < grid.components; ++c) next.coeff(c, i) *= linear_factor_[i];
    next += forcing;

    if (!next.finite())
        throw BlowupError(step_index, "state left finite range at step " +
                                          std::to_string(step_index));
    return next;
}

Trajectory simulate(const Dynamics& dyn, const SpectralField& u0, const NoisePath& noise,
                    const SchemeConfig& cfg) {
    if (!(u0.grid() == dyn.grid())) throw ConfigError("simulate: u0 grid mismatch");
    if (noise.k_count() != dyn.noise_dim())
        throw ConfigError("simulate: noise path k_count != dynamics noise_dim");
    if (std::abs(noise.dt() - cfg.dt) > 1e-15 * std::max(1.0, cfg.dt))
        throw ConfigError("simulate: noise path dt != scheme dt");

    const Stepper stepper(dyn, cfg);
    const std::size_t steps = cfg.step_count();
    const bool need_sup = cfg.track_sup || std::isfinite(cfg.blowup_guard);

    Trajectory traj;
    traj.config = cfg;
    traj.noise_seed = noise.seed();
    traj.noise_k = noise.k_count();
    traj.noise_level = noise.level();

    auto diag_of = [&](double t, const SpectralField& u) {
        StepDiagnostics d;
        d.t = t;
        const Grid& grid = u.grid();
        const std::size_t n = grid.points_per_component();
        for (int c = 0; c < grid.components; ++c)
            for (std::size_t i = 0; i < n; ++i) {
                const auto z = u.coeff(c, i);
                const double mag = z.real() * z.real() + z.imag() * z.imag();
                d.l2_sq += mag;
                d.h1_sq += (1.0 + grid.k_squared(i)) * mag;
            }
        d.l2_sq *= grid.domain_volume();
        d.h1_sq *= grid.domain_volume();
        if (need_sup) d.sup = sup_norm(u);
        return d;
    };

    SpectralField u = u0;
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    traj.diagnostics.push_back(diag_of(0.0, u));
    if (need_sup && traj.diagnostics.back().sup >= cfg.blowup_guard) {
        traj.blown_up = true;
        traj.blowup_step = 0;
        return traj;
    }

    std::vector<double> dw(static_cast<std::size_t>(dyn.noise_dim()));
    for (std::size_t i = 0; i < steps; ++i) {
        try {
            noise.increments(i, dw);
            u = stepper.step(u, dw, i);
        } catch (const BlowupError& e) {
            traj.blown_up = true;
            traj.blowup_step = e.step();
            return traj;
        }
        const double t = static_cast<double>(i + 1) * cfg.dt;
        const auto d = diag_of(t, u);
        traj.diagnostics.push_back(d);
        const bool last = (i + 1 == steps);
        if (cfg.record_every > 0 &&
            ((i + 1) % static_cast<std::size_t>(cfg.record_every) == 0 || last)) {
            if (traj.times.back() != t) {
                traj.times.push_back(t);
                traj.states.push_back(u);
            }
        }
        if (need_sup && d.sup >= cfg.blowup_guard) {
            traj.blown_up = true;
            traj.blowup_step = i + 1;
            return traj;
        }
    }
    return traj;
}

} // namespace spde
