#include "spde/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "spde/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace spde {
namespace {

constexpr char kMagic[8] = {'S', 'P', 'D', 'E', 'F', 'L', 'D', '\0'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_raw(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_raw(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw ConfigError("snapshot: truncated file");
    return v;
}

} // namespace

void save_snapshot(const SpectralField& f, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("snapshot: cannot open " + path.string() + " for writing");
    const Grid& g = f.grid();
    os.write(kMagic, sizeof(kMagic));
    write_raw(os, kVersion);
    write_raw(os, static_cast<std::uint32_t>(g.dim));
    write_raw(os, static_cast<std::uint32_t>(g.modes));
    write_raw(os, g.period);
    write_raw(os, static_cast<std::uint32_t>(g.components));
    for (const auto& z : f.coeffs()) {
        write_raw(os, static_cast<float>(z.real()));
        write_raw(os, static_cast<float>(z.imag()));
    }
    if (!os) throw ConfigError("snapshot: write failed for " + path.string());
}

SpectralField load_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("snapshot: cannot open " + path.string());
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(magic)) != 0)
        throw ConfigError("snapshot: bad magic in " + path.string());
    const auto version = read_raw<std::uint32_t>(is);
    if (version != kVersion)
        throw ConfigError("snapshot: unsupported version " + std::to_string(version));
    const auto dim = read_raw<std::uint32_t>(is);
    const auto modes = read_raw<std::uint32_t>(is);
    const auto period = read_raw<double>(is);
    const auto components = read_raw<std::uint32_t>(is);
    const Grid grid = Grid::make(static_cast<int>(dim), static_cast<int>(modes), period,
                                 static_cast<int>(components));
    SpectralField f(grid);
    for (auto& z : f.coeffs()) {
        const float re = read_raw<float>(is);
        const float im = read_raw<float>(is);
        z = {static_cast<double>(re), static_cast<double>(im)};
    }
    return f;
}

} // namespace spde
