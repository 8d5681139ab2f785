#include "tilesum/module_element.hpp"

#include <algorithm>

#include "tilesum/error.hpp"

namespace tilesum {

Integer ModuleElement::get(Point pos, std::size_t idx) const {
  auto it = entries_.find({pos, idx});
  return it == entries_.end() ? Integer(0) : it->second;
}

void ModuleElement::accumulate(Point pos, std::size_t idx, const Integer& v) {
  if (idx >= rank_)
    throw Error(Errc::BadIndex, "module index " + std::to_string(idx) + " >= rank " + std::to_string(rank_));
  const ModuleKey key{pos, idx};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    Integer n = ring_.normalize(v);
    if (n != 0) entries_.emplace(key, std::move(n));
    return;
  }
  it->second = ring_.add(it->second, v);
  if (it->second == 0) entries_.erase(it);
}

void ModuleElement::add_scaled(const ModuleElement& other, Point shift, const Integer& factor) {
  require_same_ring(ring_, other.ring_);
  if (rank_ != other.rank_)
    throw Error(Errc::RankMismatch, "ranks " + std::to_string(rank_) + " and " + std::to_string(other.rank_));
  for (const auto& [k, v] : other.entries_) accumulate(k.pos + shift, k.idx, v * factor);
}

ModuleElement add(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out = a;
  out += b;
  return out;
}

ModuleElement negate(const ModuleElement& e) {
  ModuleElement out(e.ring(), e.rank());
  out.add_scaled(e, {0, 0}, -1);
  return out;
}

ModuleElement translate(const ModuleElement& e, Point shift) {
  ModuleElement out(e.ring(), e.rank());
  out.add_scaled(e, shift, 1);
  return out;
}

namespace {

std::size_t color_position(std::span<const Color> index, const Color& c) {
  auto it = std::find(index.begin(), index.end(), c);
  if (it == index.end()) throw Error(Errc::UnknownColor, c.to_string() + " is not in the color index");
  return static_cast<std::size_t>(it - index.begin());
}

}  // namespace

ModuleElement from_edgemap(const EdgeMap& f, std::span<const Color> color_index) {
  ModuleElement out(f.ring(), 2 * color_index.size());
  for (const auto& [k, v] : f.entries()) {
    const std::size_t offset = k.edge.orient == Orient::H ? 0 : color_index.size();
    out.accumulate(k.edge.base, offset + color_position(color_index, k.color), v);
  }
  return out;
}

EdgeMap to_edgemap(const ModuleElement& e, std::span<const Color> color_index) {
  const std::size_t c = color_index.size();
  if (e.rank() != 2 * c)
    throw Error(Errc::RankMismatch, "rank " + std::to_string(e.rank()) + " needs " + std::to_string(c) + " colors");
  EdgeMap out(e.ring());
  for (const auto& [k, v] : e.entries()) {
    const Orient o = k.idx < c ? Orient::H : Orient::V;
    out.accumulate(EdgeId{k.pos, o}, color_index[k.idx % c], v);
  }
  return out;
}

}  // namespace tilesum
