#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011): a pure
// function (key, counter) -> 128 random bits. Draws are addressed, never
// streamed, so any draw can be produced in any order on any thread with
// identical results.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace spde::rng {

namespace detail {
constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;
constexpr std::uint32_t kMultA = 0xD2511F53u;
constexpr std::uint32_t kMultB = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMultA) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMultB) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeylA;
    key[1] += kWeylB;
}
} // namespace detail

inline std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                               std::array<std::uint32_t, 4> ctr) {
    std::array<std::uint32_t, 2> k{static_cast<std::uint32_t>(key),
                                   static_cast<std::uint32_t>(key >> 32)};
    for (int r = 0; r < 10; ++r) detail::round_once(ctr, k);
    return ctr;
}

// uniform in (0,1]: 53 mantissa bits from two 32-bit words
inline double uniform_open(std::uint32_t lo, std::uint32_t hi) {
    const std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>((v >> 11) + 1) * 0x1p-53;
}

// uniform in [0,1)
inline double uniform_half_open(std::uint32_t lo, std::uint32_t hi) {
    const std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(v >> 11) * 0x1p-53;
}

// one standard normal per (key, counter) via Box-Muller
inline double standard_normal(std::uint64_t key, const std::array<std::uint32_t, 4>& ctr) {
    const auto b = philox4x32(key, ctr);
    const double u1 = uniform_open(b[0], b[1]);
    const double u2 = uniform_half_open(b[2], b[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// splitmix64 step, used to derive independent per-path seeds from a master seed
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace spde::rng
