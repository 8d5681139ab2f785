#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tilesum/edge_map.hpp"
#include "tilesum/geometry.hpp"
#include "tilesum/ring.hpp"

namespace tilesum {

/// Basis index of a free R[Z x Z]-module: a lattice point and a coordinate.
struct ModuleKey {
  Point pos;
  std::size_t idx = 0;

  friend bool operator==(const ModuleKey&, const ModuleKey&) = default;
  // Ordered by (y, x, idx).
  friend std::strong_ordering operator<=>(const ModuleKey& a, const ModuleKey& b) {
    if (auto c = a.pos <=> b.pos; c != 0) return c;
    return a.idx <=> b.idx;
  }
};

/// Element of the free R[Z x Z]-module of rank k, as a finitely supported
/// map (Z x Z) x {0..k-1} -> R with zeros pruned.
class ModuleElement {
 public:
  using Entries = std::map<ModuleKey, Integer>;

  ModuleElement() = default;
  ModuleElement(Ring ring, std::size_t rank) : ring_(ring), rank_(rank) {}

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Integer get(Point pos, std::size_t idx) const;
  /// Throws BadIndex if idx >= rank.
  void accumulate(Point pos, std::size_t idx, const Integer& v);
  void accumulate(const ModuleKey& key, const Integer& v) { accumulate(key.pos, key.idx, v); }

  /// Adds factor * (shift . other). Ranks and rings must agree.
  void add_scaled(const ModuleElement& other, Point shift, const Integer& factor);

  ModuleElement& operator+=(const ModuleElement& other) {
    add_scaled(other, {0, 0}, 1);
    return *this;
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
  friend bool operator<(const ModuleElement& a, const ModuleElement& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.entries_ < b.entries_;
  }

 private:
  Ring ring_;
  std::size_t rank_ = 0;
  Entries entries_;
};

ModuleElement add(const ModuleElement& a, const ModuleElement& b);
ModuleElement negate(const ModuleElement& e);
ModuleElement translate(const ModuleElement& e, Point shift);

/// Edge (base, H, color i) maps to index i and (base, V, color i) to
/// |colors| + i. Throws UnknownColor for colors missing from the index.
ModuleElement from_edgemap(const EdgeMap& f, std::span<const Color> color_index);

/// Inverse of from_edgemap. Throws RankMismatch unless rank = 2|colors|.
EdgeMap to_edgemap(const ModuleElement& e, std::span<const Color> color_index);

}  // namespace tilesum
