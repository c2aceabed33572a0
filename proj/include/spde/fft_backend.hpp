#pragma once

// Thin FFTW wrapper: cached complex-to-complex plans per (dim, n, sign).
// Plans are cached thread_local (planner creation guarded by a global mutex,
// FFTW's planner is not thread-safe); execution goes through per-plan scratch
// buffers, so concurrent transforms from many threads never share state.
// All plans use FFTW_ESTIMATE so the chosen algorithm, and therefore the
// bit-level result, is independent of timing and thread count.

#include <complex>
#include <cstddef>

namespace spde::fft {

// sign: -1 forward (physical -> unscaled DFT sum), +1 backward (synthesis).
// in/out hold n^dim complex values, row-major; in == out is allowed.
void transform(int dim, int n, const std::complex<double>* in,
               std::complex<double>* out, int sign);

} // namespace spde::fft
