#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spde {

// Bad grids, shape mismatches, invalid run configurations.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical precondition was violated (e.g. non-solenoidal input to an
// incompressible drift).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by the time stepper when the state turns NaN/Inf or exceeds the
// sup-norm guard. Carries the step index for stopping-time diagnostics.
class BlowupError : public std::runtime_error {
public:
    BlowupError(std::size_t step, const std::string& msg)
        : std::runtime_error(msg), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace spde
