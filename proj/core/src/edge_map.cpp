#include "tilesum/edge_map.hpp"

#include "tilesum/error.hpp"

namespace tilesum {

Integer EdgeMap::get(const EdgeId& e, const Color& c) const {
  auto it = entries_.find({e, c});
  return it == entries_.end() ? Integer{0} : it->second;
}

void EdgeMap::accumulate(const EdgeColor& key, const Integer& v) {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    Integer n = ring_.normalize(v);
    if (n != 0) entries_.emplace(key, std::move(n));
    return;
  }
  it->second = ring_.add(it->second, v);
  if (it->second == 0) entries_.erase(it);
}

void EdgeMap::accumulate(const EdgeId& e, const Color& c, const Integer& v) { accumulate(EdgeColor{e, c}, v); }

EdgeMap& EdgeMap::operator+=(const EdgeMap& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [k, v] : other.entries_) accumulate(k, v);
  return *this;
}

std::vector<std::pair<EdgeColor, Integer>> EdgeMap::support() const {
  return {entries_.begin(), entries_.end()};
}

EdgeMap add(const EdgeMap& a, const EdgeMap& b) {
  EdgeMap out = a;
  out += b;
  return out;
}

EdgeMap negate(const EdgeMap& f) {
  EdgeMap out(f.ring());
  for (const auto& [k, v] : f.entries()) out.accumulate(k, f.ring().neg(v));
  return out;
}

EdgeMap translate(const EdgeMap& f, Point shift) {
  EdgeMap out(f.ring());
  for (const auto& [k, v] : f.entries()) out.accumulate(EdgeColor{k.edge.shifted(shift), k.color}, v);
  return out;
}

EdgeMap tile_eval(const Tile& t, const Ring& ring) {
  EdgeMap out(ring);
  if (!t.south.is_blank0()) out.accumulate(EdgeId{{0, 0}, Orient::H}, t.south, -1);
  if (!t.east.is_blank0()) out.accumulate(EdgeId{{1, 0}, Orient::V}, t.east, 1);
  if (!t.north.is_blank0()) out.accumulate(EdgeId{{0, 1}, Orient::H}, t.north, 1);
  if (!t.west.is_blank0()) out.accumulate(EdgeId{{0, 0}, Orient::V}, t.west, -1);
  return out;
}

EdgeMap evaluate_placements(const TilingSystem& ts, std::span<const Placement> placements, const Ring& ring) {
  EdgeMap out(ring);
  for (const auto& p : placements) {
    if (!ts.find(p.tile)) throw Error(Errc::UnknownTile, "placement at (" + std::to_string(p.pos.x) + "," +
                                                            std::to_string(p.pos.y) + ") uses a tile outside the system");
    const EdgeMap t = tile_eval(p.tile, ring);
    for (const auto& [k, v] : t.entries())
      out.accumulate(EdgeColor{k.edge.shifted(p.pos), k.color}, v);
  }
  return out;
}

}  // namespace tilesum
