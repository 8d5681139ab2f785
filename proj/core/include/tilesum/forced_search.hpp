#pragma once

#include <cstdint>
#include <optional>

#include "tilesum/certificate.hpp"
#include "tilesum/edge_map.hpp"
#include "tilesum/tiles.hpp"

namespace tilesum {

struct ForcedSearchLimits {
  std::int64_t max_m = 8;
  std::int64_t max_rows = 64;
};

/// Re-derives a zero tiling sum for an input map from tile colors alone.
///
/// For each width m = n+1..max_m it lays the bottom boundary row, then
/// fills rows upward; within a row every column's south color is fixed by
/// the row below and the west color by the tile to its left. A row must
/// admit exactly one completion, otherwise this width is abandoned. The
/// search succeeds when a row's north side is entirely c0.
///
/// nullopt means nothing was found within the limits; it is not a proof
/// that no tiling exists. Throws MalformedInput if `f0` is not shaped like
/// an input map.
std::optional<Certificate> forced_search(const TilingSystem& ts, const EdgeMap& f0, ForcedSearchLimits limits);

}  // namespace tilesum
