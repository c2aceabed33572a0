#pragma once

// Truncated cylindrical Brownian motion: K independent scalar Brownian
// increment streams, reproducible from (seed, step, k) alone.
//
// Increments are held on an integer lattice: node values are int64 multiples
// of a power-of-two quantum ~ 2^-40 * sqrt(dt0). Refinement runs a Brownian
// bridge in integer arithmetic (left = parent>>1 + xi, right = parent - left),
// and int -> double conversion scales by a power of two, so refined pairs sum
// to their parent increment bit-exactly at any depth. The 2^-40 relative
// quantization is far below any statistical resolution.

#include <cstddef>
#include <cstdint>
#include <span>

namespace spde {

class NoisePath {
public:
    // base path at refinement level 0 with step size dt
    NoisePath(std::uint64_t seed, int k_count, double dt);

    // same Brownian motion sampled at dt/2 (bridge-consistent with *this)
    NoisePath refine() const;

    std::uint64_t seed() const { return seed_; }
    int k_count() const { return k_count_; }
    double dt() const { return dt_; }
    int level() const { return level_; }

    // Delta W_k over [step*dt, (step+1)*dt] ~ Normal(0, dt)
    double increment(std::size_t step, int k) const;
    void increments(std::size_t step, std::span<double> out) const;

private:
    std::int64_t node(int level, std::size_t step, int k) const;

    std::uint64_t seed_ = 0;
    int k_count_ = 1;
    double dt_ = 1.0;
    double dt0_ = 1.0;   // level-0 step size
    int level_ = 0;
    double quantum_ = 1.0; // power of two ~ 2^-40 * sqrt(dt0)
};

} // namespace spde
