#pragma once

// Time discretization of du = [L u + F(u)] dt + sum_k B_k(u) dW_k and of its
// mollified counterpart with generator T_eps L T_eps and coefficients
// T_eps F(T_eps u), T_eps B_k(T_eps u). The stiff linear part is handled by an
// exact diagonal factor exp(-dt |k|^2 e^{-2 eps |k|^2}) (exponential Euler) or
// its resolvent stand-in (semi-implicit); drift and noise are explicit with
// noise at the left endpoint (Ito).

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "spde/dynamics.hpp"
#include "spde/noise.hpp"
#include "spde/spectral_field.hpp"

namespace spde {

enum class Scheme { exponential_euler, semi_implicit_euler };

struct SchemeConfig {
    Scheme scheme = Scheme::exponential_euler;
    double dt = 1e-3;
    double T = 1.0;
    double epsilon = 0.0; // 0 = target equation, > 0 = mollified scheme
    int record_every = 1; // steps between state snapshots
    // sup-norm guard; crossing it raises BlowupError (tau_N threshold sqrt(N))
    double blowup_guard = std::numeric_limits<double>::infinity();
    // evaluate the collocation sup on the 2x grid every step (needed by the
    // guard and the stopping-time diagnostics)
    bool track_sup = false;

    std::size_t step_count() const;
};

struct StepDiagnostics {
    double t = 0.0;
    double l2_sq = 0.0; // ||u||_0^2
    double h1_sq = 0.0; // ||u||_1^2
    double sup = 0.0;   // collocation sup |u|, 0 when not tracked
};

struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
    std::vector<StepDiagnostics> diagnostics; // one entry per step incl. t=0
    bool blown_up = false;
    std::size_t blowup_step = 0;
    // enough to regenerate the driving noise and re-run bit-identically
    std::uint64_t noise_seed = 0;
    int noise_k = 0;
    int noise_level = 0;
    SchemeConfig config;
};

// Precomputed diagonal factors for one (grid, scheme, dt, epsilon) combination.
class Stepper {
public:
    Stepper(const Dynamics& dyn, const SchemeConfig& cfg);

    const SchemeConfig& config() const { return cfg_; }

    // one step from u with the given K noise increments; throws BlowupError
    // (carrying step_index) on NaN/Inf or a sup-norm guard crossing
    SpectralField step(const SpectralField& u, std::span<const double> increments,
                       std::size_t step_index) const;

private:
    const Dynamics& dyn_;
    SchemeConfig cfg_;
    std::vector<double> linear_factor_;  // per-mode stiff multiplier
    std::vector<double> mollify_factor_; // e^{-eps |k|^2}, empty when eps = 0
};

// Iterates the stepper; records snapshots every record_every steps (state 0
// and the last reached state always included) and per-step diagnostics. A
// blow-up truncates the trajectory and sets blown_up/blowup_step instead of
// propagating the error.
Trajectory simulate(const Dynamics& dyn, const SpectralField& u0, const NoisePath& noise,
                    const SchemeConfig& cfg);

} // namespace spde
