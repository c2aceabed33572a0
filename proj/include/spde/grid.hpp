#pragma once

// Periodic torus discretization [0,L)^d with M collocation points per axis.
// Fourier modes are stored in standard DFT order: axis index j in [0,M)
// maps to the signed integer mode j <= M/2 ? j : j-M, with wavenumber
// k = 2*pi*signed(j)/L. The Nyquist index M/2 sits on the positive side.

#include <array>
#include <cstddef>

#include "spde/errors.hpp"

namespace spde {

struct Grid {
    int dim = 1;          // 1, 2 or 3
    int modes = 8;        // M per axis, even, >= 8
    double period = 1.0;  // L, same on every axis
    int components = 1;   // 1 for scalars, dim for velocity fields

    static Grid make(int dim, int modes, double period, int components);

    std::size_t points_per_component() const;   // M^dim
    std::size_t total_size() const { return points_per_component() * components; }

    double cell_volume() const;                  // (L/M)^dim, quadrature weight
    double domain_volume() const;                // L^dim, Parseval weight

    // keep |signed j| <= M/3 on every axis (2/3 rule)
    int dealias_limit() const { return modes / 3; }

    int signed_index(int axis_index) const {
        return axis_index <= modes / 2 ? axis_index : axis_index - modes;
    }
    double wavenumber(int axis_index) const;

    // flat row-major index <-> per-axis indices
    std::array<int, 3> unflatten(std::size_t flat) const;
    std::size_t flatten(const std::array<int, 3>& idx) const;

    // |k|^2 of a flat mode index
    double k_squared(std::size_t flat) const;

    bool operator==(const Grid&) const = default;
};

} // namespace spde
