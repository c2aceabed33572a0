#pragma once

// Drift/diffusion operator pairs for the three concrete equations. Every
// drift carries only the nonlinear/lower-order terms; the Laplacian is the
// integrator's job (exact diagonal semigroup factor). Nonlinear terms are
// evaluated pointwise on a 2x zero-padded grid and truncated to |j| <= M/3,
// so drifts map band-limited fields to band-limited fields. Instances are
// immutable after construction and evaluation is pure.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "spde/spectral_field.hpp"
#include "spde/taming.hpp"

namespace spde {

// Orthogonal projection onto divergence-free fields, mode-wise
// u(k) <- (I - k k^T/|k|^2) u(k); the k = 0 mode is untouched.
SpectralField leray_project(const SpectralField& f);

enum class NoiseKind { additive, multiplicative };

// Diffusion column family B_k: amplitude c_k = amplitude * (1+k)^{-decay},
// spatial profile e_k = k-th normalized real Fourier mode, pointwise map
// h(z) = 1 (additive) or sin(z) (multiplicative, bounded with all bounded
// derivatives). Columns of vector dynamics are Leray-projected.
struct NoiseSpec {
    int k_count = 16;
    double amplitude = 0.5;
    double decay = 1.5; // > 1 so the l2 sums converge under truncation
    NoiseKind kind = NoiseKind::additive;

    double column_amplitude(int k) const;
    // mass of the dropped tail sum_{k >= k_count} c_k^2
    double truncation_tail() const;
};

class Dynamics {
public:
    virtual ~Dynamics() = default;

    const Grid& grid() const { return grid_; }
    const NoiseSpec& noise_spec() const { return noise_; }
    int noise_dim() const { return noise_.k_count; }

    virtual int regularity() const = 0; // N: drift domain regularity in (H1_N)
    virtual bool solenoidal() const { return false; }

    virtual SpectralField drift(const SpectralField& u) const = 0;
    // the energy-neutral convective piece of the drift, by itself
    virtual SpectralField convective_part(const SpectralField& u) const = 0;

    // sum_k B_k(u) * weight_k in one pass (stepper fast path)
    SpectralField diffusion_apply(const SpectralField& u,
                                  std::span<const double> weights) const;
    std::vector<SpectralField> diffusion_columns(const SpectralField& u) const;

protected:
    Dynamics(const Grid& grid, const NoiseSpec& noise);

    virtual bool project_columns() const { return false; }

    Grid grid_;
    NoiseSpec noise_;
    // k-th column direction (component) and unit-L2 single-mode profile
    std::vector<int> column_component_;
    std::vector<SpectralField> column_profile_;
};

// --- Burgers--Ginzburg-Landau on the 1-D torus -------------------------------

struct BurgersGLCoefficients {
    double nu = 1.0; // fixed 1 in the scaled form
    double c0 = 1.0;
    double c1 = 1.0;
    double c2 = 1.0; // > 0
    // optional overrides; canonical instance is f(z) = c0 z^2, g(z) = c1 z - c2 z^3
    std::function<double(double)> f;
    std::function<double(double, double)> g; // g(x, z)
};

// drift F(u) = d/dx f(u) + g(., u)
class BurgersGLDynamics final : public Dynamics {
public:
    BurgersGLDynamics(const Grid& grid, const BurgersGLCoefficients& coeffs,
                      const NoiseSpec& noise);

    int regularity() const override { return 1; }
    SpectralField drift(const SpectralField& u) const override;
    SpectralField convective_part(const SpectralField& u) const override;

    const BurgersGLCoefficients& coefficients() const { return coeffs_; }

private:
    BurgersGLCoefficients coeffs_;
};

// --- (tamed) Navier-Stokes on the 2-D/3-D torus ------------------------------

// drift F(u) = -P((u.grad)u) - P(g_N(|u|^2) u); taming can be switched off,
// which gives the plain 2D Navier-Stokes drift.
class TamedNSDynamics final : public Dynamics {
public:
    TamedNSDynamics(const Grid& grid, double taming_level, const NoiseSpec& noise);
    // untamed variant (2D Navier-Stokes)
    TamedNSDynamics(const Grid& grid, const NoiseSpec& noise);

    int regularity() const override { return 2; }
    bool solenoidal() const override { return true; }
    SpectralField drift(const SpectralField& u) const override;
    SpectralField convective_part(const SpectralField& u) const override;

    bool tamed() const { return taming_.has_value(); }
    const TamingFunction& taming() const { return *taming_; }

private:
    bool project_columns() const override { return true; }
    void check_solenoidal(const SpectralField& u) const;

    std::optional<TamingFunction> taming_;
};

// --- linear test equation (F = 0) --------------------------------------------

class LinearTestDynamics final : public Dynamics {
public:
    LinearTestDynamics(const Grid& grid, const NoiseSpec& noise);
    int regularity() const override { return 1; }
    SpectralField drift(const SpectralField& u) const override;
    SpectralField convective_part(const SpectralField& u) const override;
};

} // namespace spde
