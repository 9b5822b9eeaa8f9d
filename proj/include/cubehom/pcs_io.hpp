#pragma once

#include <optional>
#include <string>

#include "cubehom/precubical.hpp"

namespace cubehom {

struct PcsDocument {
  PrecubicalSet complex;
  std::optional<CubeIdx> source;
  std::optional<CubeIdx> target;
};

/// Parses the on-disk format:
///   { "dims": D,
///     "cubes": [ {"id": "...", "dim": n, "faces": [["d0","d1"], ...]}, ... ],
///     "source": "...", "target": "..." }
/// Face references are resolved structurally; the pre-cubical relations are
/// not checked here.
PcsDocument parse_pcs(const std::string& text);

/// Serializes so that parse_pcs(serialize_pcs(k)) reproduces the cube
/// inventory with ids preserved. Output is deterministic: cubes sorted by
/// (dim, id), two-space indentation, trailing newline.
std::string serialize_pcs(const PrecubicalSet& k, std::optional<CubeIdx> source = std::nullopt,
                          std::optional<CubeIdx> target = std::nullopt);

}  // namespace cubehom
