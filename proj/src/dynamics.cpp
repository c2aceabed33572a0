#include "spde/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spde/errors.hpp"
#include "spde/spectral_ops.hpp"

namespace spde {
namespace {

std::size_t padded_points(const Grid& grid) {
    std::size_t np = 1;
    for (int a = 0; a < grid.dim; ++a) np *= static_cast<std::size_t>(2 * grid.modes);
    return np;
}

double h1_norm(const SpectralField& f) {
    const Grid& grid = f.grid();
    const std::size_t n = grid.points_per_component();
    double acc = 0.0;
    for (int c = 0; c < grid.components; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            const auto z = f.coeff(c, i);
            acc += (1.0 + grid.k_squared(i)) * (z.real() * z.real() + z.imag() * z.imag());
        }
    return std::sqrt(acc * grid.domain_volume());
}

// canonical low-mode enumeration: m = 0 first, then one representative of
// each +-m pair ordered by (|m|^2, lex), cos before sin
struct ProfileId {
    std::array<int, 3> mode{0, 0, 0};
    bool is_sin = false;
};

std::vector<ProfileId> enumerate_profiles(const Grid& grid, int count) {
    std::vector<std::array<int, 3>> canonical;
    const int band = grid.dealias_limit();
    std::array<int, 3> m{0, 0, 0};
    auto scan = [&](auto&& self, int axis) -> void {
        if (axis == grid.dim) {
            for (int a = 0; a < grid.dim; ++a) {
                if (m[a] > 0) { canonical.push_back(m); return; }
                if (m[a] < 0) return;
            }
            return; // m == 0 handled separately
        }
        for (int v = -band; v <= band; ++v) {
            m[axis] = v;
            self(self, axis + 1);
        }
        m[axis] = 0;
    };
    scan(scan, 0);
    std::sort(canonical.begin(), canonical.end(), [](const auto& a, const auto& b) {
        const int na = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
        const int nb = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
        if (na != nb) return na < nb;
        return a < b;
    });

    std::vector<ProfileId> out;
    out.push_back(ProfileId{}); // constant profile
    for (const auto& mode : canonical) {
        out.push_back(ProfileId{mode, false});
        out.push_back(ProfileId{mode, true});
        if (static_cast<int>(out.size()) >= count) break;
    }
    if (static_cast<int>(out.size()) < count)
        throw ConfigError("noise: k_count too large for the grid's dealiased band");
    out.resize(static_cast<std::size_t>(count));
    return out;
}

SpectralField build_profile(const Grid& grid, const ProfileId& id) {
    Grid scalar = grid;
    scalar.components = 1;
    SpectralField f(scalar);
    const double vol = scalar.domain_volume();
    if (id.mode == std::array<int, 3>{0, 0, 0}) {
        f.coeff(0, 0) = 1.0 / std::sqrt(vol);
        return f;
    }
    const double amp = 0.5 * std::sqrt(2.0 / vol);
    if (id.is_sin)
        add_real_mode(f, 0, id.mode, std::complex<double>(0.0, -amp));
    else
        add_real_mode(f, 0, id.mode, std::complex<double>(amp, 0.0));
    return f;
}

} // namespace

SpectralField leray_project(const SpectralField& f) {
    const Grid& grid = f.grid();
    if (grid.components != grid.dim || grid.dim < 2)
        throw ConfigError("leray_project: needs a vector field with components == dim >= 2");
    SpectralField out = f;
    const std::size_t n = grid.points_per_component();
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = grid.unflatten(i);
        double k[3] = {0.0, 0.0, 0.0};
        double k2 = 0.0;
        for (int a = 0; a < grid.dim; ++a) {
            k[a] = grid.wavenumber(idx[a]);
            k2 += k[a] * k[a];
        }
        if (k2 == 0.0) continue;
        std::complex<double> kdot(0.0, 0.0);
        for (int a = 0; a < grid.dim; ++a) kdot += k[a] * out.coeff(a, i);
        kdot /= k2;
        for (int a = 0; a < grid.dim; ++a) out.coeff(a, i) -= k[a] * kdot;
    }
    return out;
}

double NoiseSpec::column_amplitude(int k) const {
    return amplitude * std::pow(1.0 + k, -decay);
}

double NoiseSpec::truncation_tail() const {
    double tail = 0.0;
    for (int k = k_count; k < k_count + 100000; ++k) {
        const double c = column_amplitude(k);
        tail += c * c;
    }
    // integral remainder of the dropped far tail
    const double edge = 1.0 + k_count + 100000;
    tail += amplitude * amplitude * std::pow(edge, 1.0 - 2.0 * decay) / (2.0 * decay - 1.0);
    return tail;
}

Dynamics::Dynamics(const Grid& grid, const NoiseSpec& noise) : grid_(grid), noise_(noise) {
    if (noise.k_count <= 0) throw ConfigError("noise: k_count must be positive");
    if (!(noise.decay > 1.0))
        throw ConfigError("noise: decay must exceed 1 for a convergent column sum");
    const int ncomp = grid.components;
    const int profiles = (noise.k_count + ncomp - 1) / ncomp;
    const auto ids = enumerate_profiles(grid, profiles);
    column_component_.resize(static_cast<std::size_t>(noise.k_count));
    column_profile_.reserve(static_cast<std::size_t>(noise.k_count));
    for (int k = 0; k < noise.k_count; ++k) {
        column_component_[static_cast<std::size_t>(k)] = k % ncomp;
        column_profile_.push_back(build_profile(grid, ids[static_cast<std::size_t>(k / ncomp)]));
    }
}

SpectralField Dynamics::diffusion_apply(const SpectralField& u,
                                        std::span<const double> weights) const {
    if (weights.size() != static_cast<std::size_t>(noise_.k_count))
        throw ConfigError("diffusion_apply: weight count != k_count");
    const std::size_t n = grid_.points_per_component();

    if (noise_.kind == NoiseKind::additive) {
        SpectralField out(grid_);
        for (int k = 0; k < noise_.k_count; ++k) {
            const double w = weights[static_cast<std::size_t>(k)] * noise_.column_amplitude(k);
            const auto& phi = column_profile_[static_cast<std::size_t>(k)];
            const int c = column_component_[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < n; ++i) out.coeff(c, i) += w * phi.coeff(0, i);
        }
        return project_columns() ? leray_project(out) : out;
    }

    // multiplicative: sum_k w_k c_k P[phi_k(x) sin(u_a(x)) e_a]
    //               = P[(sum_k w_k c_k phi_k)(x) sin(u_a(x)) e_a]
    SpectralField psi(grid_);
    for (int k = 0; k < noise_.k_count; ++k) {
        const double w = weights[static_cast<std::size_t>(k)] * noise_.column_amplitude(k);
        const auto& phi = column_profile_[static_cast<std::size_t>(k)];
        const int c = column_component_[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < n; ++i) psi.coeff(c, i) += w * phi.coeff(0, i);
    }
    const auto uphys = u.to_physical_padded(2);
    const auto pphys = psi.to_physical_padded(2);
    std::vector<double> vals(uphys.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = pphys[i] * std::sin(uphys[i]);
    SpectralField out = from_physical_padded(grid_, vals, 2);
    out.dealias();
    return project_columns() ? leray_project(out) : out;
}

std::vector<SpectralField> Dynamics::diffusion_columns(const SpectralField& u) const {
    std::vector<SpectralField> cols;
    cols.reserve(static_cast<std::size_t>(noise_.k_count));
    const std::size_t n = grid_.points_per_component();

    std::vector<double> uphys;
    if (noise_.kind == NoiseKind::multiplicative) uphys = u.to_physical_padded(2);
    const std::size_t np = padded_points(grid_);

    for (int k = 0; k < noise_.k_count; ++k) {
        const double ck = noise_.column_amplitude(k);
        const auto& phi = column_profile_[static_cast<std::size_t>(k)];
        const int c = column_component_[static_cast<std::size_t>(k)];
        SpectralField col(grid_);
        if (noise_.kind == NoiseKind::additive) {
            for (std::size_t i = 0; i < n; ++i) col.coeff(c, i) = ck * phi.coeff(0, i);
        } else {
            const auto phiphys = phi.to_physical_padded(2);
            std::vector<double> vals(np * static_cast<std::size_t>(grid_.components), 0.0);
            for (std::size_t i = 0; i < np; ++i)
                vals[static_cast<std::size_t>(c) * np + i] =
                    ck * phiphys[i] * std::sin(uphys[static_cast<std::size_t>(c) * np + i]);
            col = from_physical_padded(grid_, vals, 2);
            col.dealias();
        }
        cols.push_back(project_columns() ? leray_project(col) : col);
    }
    return cols;
}

// --- Burgers--Ginzburg-Landau -------------------------------------------------

BurgersGLDynamics::BurgersGLDynamics(const Grid& grid, const BurgersGLCoefficients& coeffs,
                                     const NoiseSpec& noise)
    : Dynamics(grid, noise), coeffs_(coeffs) {
    if (grid.dim != 1 || grid.components != 1)
        throw ConfigError("burgers_gl: needs a 1-D scalar grid (dim=1, components=1)");
    if (!(coeffs.c2 > 0.0)) throw ConfigError("burgers_gl: c2 must be positive");
}

SpectralField BurgersGLDynamics::convective_part(const SpectralField& u) const {
    const auto uphys = u.to_physical_padded(2);
    std::vector<double> fvals(uphys.size());
    if (coeffs_.f) {
        for (std::size_t i = 0; i < uphys.size(); ++i) fvals[i] = coeffs_.f(uphys[i]);
    } else {
        for (std::size_t i = 0; i < uphys.size(); ++i)
            fvals[i] = coeffs_.c0 * uphys[i] * uphys[i];
    }
    SpectralField comp = derivative(from_physical_padded(grid_, fvals, 2), 0);
    comp.dealias();
    return comp;
}

SpectralField BurgersGLDynamics::drift(const SpectralField& u) const {
    const auto uphys = u.to_physical_padded(2);
    std::vector<double> fvals(uphys.size());
    std::vector<double> gvals(uphys.size());
    const std::size_t np = uphys.size();
    const double h = grid_.period / static_cast<double>(np);
    for (std::size_t i = 0; i < np; ++i) {
        const double z = uphys[i];
        fvals[i] = coeffs_.f ? coeffs_.f(z) : coeffs_.c0 * z * z;
        gvals[i] = coeffs_.g ? coeffs_.g(static_cast<double>(i) * h, z)
                             : coeffs_.c1 * z - coeffs_.c2 * z * z * z;
    }
    SpectralField out = derivative(from_physical_padded(grid_, fvals, 2), 0);
    out += from_physical_padded(grid_, gvals, 2);
    out.dealias();
    return out;
}

// --- (tamed) Navier-Stokes ----------------------------------------------------

TamedNSDynamics::TamedNSDynamics(const Grid& grid, double taming_level, const NoiseSpec& noise)
    : Dynamics(grid, noise), taming_(TamingFunction(taming_level)) {
    if (grid.dim < 2 || grid.components != grid.dim)
        throw ConfigError("tamed_ns: needs dim in {2,3} with components == dim");
}

TamedNSDynamics::TamedNSDynamics(const Grid& grid, const NoiseSpec& noise)
    : Dynamics(grid, noise), taming_(std::nullopt) {
    if (grid.dim != 2 || grid.components != 2)
        throw ConfigError("ns_2d: needs dim == 2 with components == 2");
}

void TamedNSDynamics::check_solenoidal(const SpectralField& u) const {
    const double div = l2_norm(divergence(u));
    const double scale = std::max(1.0, h1_norm(u));
    if (div > 1e-8 * scale)
        throw PreconditionError("ns drift: input field is not divergence-free (|div u| = " +
                                std::to_string(div) + ")");
}

SpectralField TamedNSDynamics::convective_part(const SpectralField& u) const {
    check_solenoidal(u);
    const int d = grid_.dim;
    const std::size_t np = padded_points(grid_);
    const auto uphys = u.to_physical_padded(2);

    std::vector<std::vector<double>> grad(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) grad[static_cast<std::size_t>(a)] = derivative(u, a).to_physical_padded(2);

    std::vector<double> conv(uphys.size(), 0.0);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a) {
            const double* ua = &uphys[static_cast<std::size_t>(a) * np];
            const double* dauc = &grad[static_cast<std::size_t>(a)][static_cast<std::size_t>(c) * np];
            double* out = &conv[static_cast<std::size_t>(c) * np];
            for (std::size_t i = 0; i < np; ++i) out[i] += ua[i] * dauc[i];
        }
    SpectralField f = from_physical_padded(grid_, conv, 2);
    f.dealias();
    f *= -1.0;
    return leray_project(f);
}

SpectralField TamedNSDynamics::drift(const SpectralField& u) const {
    check_solenoidal(u);
    const int d = grid_.dim;
    const std::size_t np = padded_points(grid_);
    const auto uphys = u.to_physical_padded(2);

    std::vector<std::vector<double>> grad(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) grad[static_cast<std::size_t>(a)] = derivative(u, a).to_physical_padded(2);

    // (u.grad)u plus, when tamed, g_N(|u|^2) u, assembled pointwise
    std::vector<double> vals(uphys.size(), 0.0);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a) {
            const double* ua = &uphys[static_cast<std::size_t>(a) * np];
            const double* dauc = &grad[static_cast<std::size_t>(a)][static_cast<std::size_t>(c) * np];
            double* out = &vals[static_cast<std::size_t>(c) * np];
            for (std::size_t i = 0; i < np; ++i) out[i] += ua[i] * dauc[i];
        }
    if (taming_) {
        for (std::size_t i = 0; i < np; ++i) {
            double r = 0.0;
            for (int c = 0; c < d; ++c) {
                const double v = uphys[static_cast<std::size_t>(c) * np + i];
                r += v * v;
            }
            const double s = taming_->value(r);
            if (s != 0.0)
                for (int c = 0; c < d; ++c)
                    vals[static_cast<std::size_t>(c) * np + i] +=
                        s * uphys[static_cast<std::size_t>(c) * np + i];
        }
    }
    SpectralField f = from_physical_padded(grid_, vals, 2);
    f.dealias();
    f *= -1.0;
    return leray_project(f);
}

// --- linear test ----------------------------------------------------------------

LinearTestDynamics::LinearTestDynamics(const Grid& grid, const NoiseSpec& noise)
    : Dynamics(grid, noise) {}

SpectralField LinearTestDynamics::drift(const SpectralField& u) const {
    return SpectralField(u.grid());
}

SpectralField LinearTestDynamics::convective_part(const SpectralField& u) const {
    return SpectralField(u.grid());
}

} // namespace spde
