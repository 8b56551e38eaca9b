#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "json.hpp"
#include "wblab/field.hpp"

namespace wblab {

/// Flat binary snapshot container, little-endian:
///   u64 n | f64 L | u64 component count | count × n² f64 samples (row-major).
/// A JSON sidecar `<path>.json` carries the grid metadata.
void write_snapshot(const std::filesystem::path& path, std::span<const ScalarField> components);
std::vector<ScalarField> read_snapshot(const std::filesystem::path& path);

nlohmann::json grid_metadata(const Grid& grid);

}  // namespace wblab
