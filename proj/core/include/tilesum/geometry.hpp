#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace tilesum {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend bool operator==(Point, Point) = default;

  // Right-lexicographic: row first, then column.
  friend std::strong_ordering operator<=>(Point a, Point b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// H is the edge {base, base+(1,0)}; V is {base, base+(0,1)}.
enum class Orient : std::uint8_t { H, V };

/// Canonical name of an undirected grid edge: lower-left endpoint plus
/// orientation.
struct EdgeId {
  Point base;
  Orient orient = Orient::H;

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend std::strong_ordering operator<=>(const EdgeId& a, const EdgeId& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.orient <=> b.orient;
  }

  EdgeId shifted(Point d) const { return {base + d, orient}; }
};

/// Closed rectangle [x0,x1] x [y0,y1] of lattice points.
struct Window {
  std::int64_t x0 = 0, y0 = 0, x1 = -1, y1 = -1;

  bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  bool empty() const { return x1 < x0 || y1 < y0; }
  friend bool operator==(const Window&, const Window&) = default;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    return hash_combine(std::hash<std::int64_t>{}(p.x), std::hash<std::int64_t>{}(p.y));
  }
};

}  // namespace tilesum
