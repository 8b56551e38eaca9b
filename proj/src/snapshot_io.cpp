#include "wblab/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "wblab/error.hpp"

namespace wblab {

static_assert(std::endian::native == std::endian::little, "snapshot container assumes a little-endian host");

nlohmann::json grid_metadata(const Grid& grid) {
  return {{"n", grid.n()},
          {"length", grid.length()},
          {"cell_measure", grid.cell_measure()},
          {"min_wavenumber", grid.min_wavenumber()},
          {"max_radial_wavenumber", grid.max_radial_wavenumber()},
          {"layout", "row-major, index = i1 * n + i2, x = (i1, i2) * L / n"},
          {"dtype", "float64"}};
}

void write_snapshot(const std::filesystem::path& path, std::span<const ScalarField> components) {
  if (components.empty()) throw ConfigError("write_snapshot: no components");
  const Grid& grid = components.front().grid();
  for (const auto& c : components) require_same_grid(grid, c.grid());

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::uint64_t n = static_cast<std::uint64_t>(grid.n());
  const double length = grid.length();
  const std::uint64_t count = components.size();
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&length), sizeof length);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  for (const auto& c : components) {
    out.write(reinterpret_cast<const char*>(c.values().data()),
              static_cast<std::streamsize>(c.values().size() * sizeof(double)));
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());

  nlohmann::json meta = grid_metadata(grid);
  meta["format"] = "wblab-snapshot";
  meta["components"] = count;
  meta["header_bytes"] = 24;
  std::ofstream side(path.string() + ".json");
  side << meta.dump(2) << '\n';
}

std::vector<ScalarField> read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint64_t n = 0;
  double length = 0.0;
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&length), sizeof length);
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!in || n > (1u << 16) || count > 64) throw std::runtime_error("corrupt snapshot header in " + path.string());
  const Grid grid = make_grid(static_cast<int>(n), length);
  std::vector<ScalarField> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<double> values(grid.size());
    in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in) throw std::runtime_error("truncated snapshot " + path.string());
    out.emplace_back(grid, std::move(values));
  }
  return out;
}

}  // namespace wblab
