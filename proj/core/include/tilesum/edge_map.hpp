#pragma once

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tilesum/geometry.hpp"
#include "tilesum/ring.hpp"
#include "tilesum/tiles.hpp"

namespace tilesum {

struct EdgeColor {
  EdgeId edge;
  Color color;

  friend bool operator==(const EdgeColor&, const EdgeColor&) = default;
  // Canonical order: row, column, orientation, color.
  friend std::strong_ordering operator<=>(const EdgeColor& a, const EdgeColor& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    return a.color <=> b.color;
  }
};

/// Finitely supported map (grid edge x color) -> ring. Zero values are
/// never stored, so the support is exactly the set of keys.
class EdgeMap {
 public:
  using Entries = std::map<EdgeColor, Integer>;

  EdgeMap() = default;
  explicit EdgeMap(Ring ring) : ring_(ring) {}

  const Ring& ring() const noexcept { return ring_; }
  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Integer get(const EdgeId& e, const Color& c) const;
  /// Adds `v` to the value at (e, c).
  void accumulate(const EdgeId& e, const Color& c, const Integer& v);
  void accumulate(const EdgeColor& key, const Integer& v);

  EdgeMap& operator+=(const EdgeMap& other);

  /// Entries in canonical order.
  std::vector<std::pair<EdgeColor, Integer>> support() const;

  friend bool operator==(const EdgeMap&, const EdgeMap&) = default;

 private:
  Ring ring_;
  Entries entries_;
};

EdgeMap add(const EdgeMap& a, const EdgeMap& b);
EdgeMap negate(const EdgeMap& f);
EdgeMap translate(const EdgeMap& f, Point shift);

/// Signed boundary of a unit tile at the origin: +1 on north and east,
/// -1 on south and west, nothing for c0 sides.
EdgeMap tile_eval(const Tile& t, const Ring& ring);

struct Placement {
  Tile tile;
  Point pos;

  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement& a, const Placement& b) {
    if (auto c = a.pos <=> b.pos; c != 0) return c;
    return a.tile <=> b.tile;
  }
};

/// Sum of translated tile evaluations. Repeated placements accumulate.
/// Throws UnknownTile if a tile is not in `ts`.
EdgeMap evaluate_placements(const TilingSystem& ts, std::span<const Placement> placements, const Ring& ring);

}  // namespace tilesum
