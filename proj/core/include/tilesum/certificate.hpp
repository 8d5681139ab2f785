#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilesum/edge_map.hpp"
#include "tilesum/tiles.hpp"

namespace tilesum {

/// A finite multiset of placements meant to cancel an input map.
/// `width_m` is the column of the right boundary and `height_n` the row of
/// the cap (the number of configuration rows).
struct Certificate {
  std::vector<Placement> placements;
  std::int64_t width_m = 0;
  std::int64_t height_n = 0;

  /// Placements sorted row-major (y, then x, then tile).
  Certificate canonical() const;
};

/// The layout of an input map as produced by initial_map: a down-arrow at
/// ((0,1),H), one colored edge at ((i,1),H) for 1 <= i <= n, and a
/// right-arrow at ((n+1,0),V), all with value 1.
struct InitialShape {
  std::int64_t n = 0;
  std::vector<Color> row;  // colors at x = 0..n on row 1
};

/// Throws MalformedInput if `f0` does not have the initial-map layout.
InitialShape parse_initial_shape(const EdgeMap& f0);

/// f0 + sum of placements == 0.
bool verify_zero(const EdgeMap& f0, const Certificate& cert, const TilingSystem& ts);

enum class AuditRule { OutsideRegion, BottomTileRaised, PastLastColumn, Stacked };

std::string to_string(AuditRule r);

struct AuditFinding {
  AuditRule rule = AuditRule::OutsideRegion;
  Point pos;
  std::string message;
};

/// Flags placements that a tiling of an input map cannot contain: anything
/// outside the shaded region, bottom-row tiles above row 0, columns past m,
/// and stacked tiles in rows >= 1.
std::vector<AuditFinding> audit_certificate(const Certificate& cert, const EdgeMap& f0);

}  // namespace tilesum
