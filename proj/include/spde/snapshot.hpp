#pragma once

// Binary field snapshots. Layout (little-endian, packed):
//   8 bytes  magic "SPDEFLD\0"
//   u32      version (1)
//   u32      dim
//   u32      modes per axis
//   f64      period
//   u32      n_components
//   then components * modes^dim coefficients as complex64
//   (float32 re, float32 im), row-major multi-index order, component-major.

#include <filesystem>

#include "spde/spectral_field.hpp"

namespace spde {

void save_snapshot(const SpectralField& f, const std::filesystem::path& path);
SpectralField load_snapshot(const std::filesystem::path& path);

} // namespace spde
