#include "spde/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "spde/errors.hpp"
#include "spde/philox.hpp"

namespace spde {
namespace {

// counter layout: (k, step lo, step hi, level)
std::array<std::uint32_t, 4> counter(int k, std::size_t step, int level) {
    return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(step),
            static_cast<std::uint32_t>(step >> 32), static_cast<std::uint32_t>(level)};
}

} // namespace

NoisePath::NoisePath(std::uint64_t seed, int k_count, double dt)
    : seed_(seed), k_count_(k_count), dt_(dt), dt0_(dt) {
    if (k_count < 1) throw ConfigError("noise: k_count must be positive");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("noise: dt must be positive");
    const int e = static_cast<int>(std::ceil(std::log2(std::sqrt(dt)))) - 40;
    quantum_ = std::ldexp(1.0, e);
}

NoisePath NoisePath::refine() const {
    NoisePath child = *this;
    child.dt_ = 0.5 * dt_;
    child.level_ = level_ + 1;
    return child;
}

std::int64_t NoisePath::node(int level, std::size_t step, int k) const {
    if (level == 0) {
        const double g = rng::standard_normal(seed_, counter(k, step, 0));
        return std::llround(g * std::sqrt(dt0_) / quantum_);
    }
    // Brownian bridge split of the parent increment; the single bridge draw is
    // keyed by the parent step so both children see the same offset.
    const std::size_t parent_step = step >> 1;
    const std::int64_t parent = node(level - 1, parent_step, k);
    const double sd = std::sqrt(dt0_ / std::ldexp(1.0, level + 1));
    const double g = rng::standard_normal(seed_, counter(k, parent_step, level));
    const std::int64_t left = (parent >> 1) + std::llround(g * sd / quantum_);
    return (step & 1u) == 0 ? left : parent - left;
}

double NoisePath::increment(std::size_t step, int k) const {
    if (k < 0 || k >= k_count_) throw ConfigError("noise: component index out of range");
    return static_cast<double>(node(level_, step, k)) * quantum_;
}

void NoisePath::increments(std::size_t step, std::span<double> out) const {
    if (out.size() != static_cast<std::size_t>(k_count_))
        throw ConfigError("noise: output span size must equal k_count");
    for (int k = 0; k < k_count_; ++k) out[static_cast<std::size_t>(k)] = increment(step, k);
}

} // namespace spde
