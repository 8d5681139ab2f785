#include "tilesum/wreath.hpp"

#include <cctype>

#include "tilesum/error.hpp"

namespace tilesum {

WreathElement wreath_id(const Ring& ring, std::size_t rank) { return {ModuleElement(ring, rank), {0, 0}}; }

WreathElement wreath_mul(const WreathElement& a, const WreathElement& b) {
  WreathElement out = a;
  out.fun.add_scaled(b.fun, a.shift, 1);
  out.shift = a.shift + b.shift;
  return out;
}

WreathElement wreath_inv(const WreathElement& g) {
  WreathElement out = wreath_id(g.fun.ring(), g.fun.rank());
  out.fun.add_scaled(g.fun, -g.shift, -1);
  out.shift = -g.shift;
  return out;
}

WreathElement wreath_shift(const Ring& ring, std::size_t rank, Point z) { return {ModuleElement(ring, rank), z}; }

namespace {

// Returns the bound element for `token`, inverting through the lower-case
// letter when only that one is bound.
const WreathElement& lookup(const Binding& binding, const std::string& token, std::map<std::string, WreathElement>& cache) {
  if (auto it = binding.find(token); it != binding.end()) return it->second;
  if (auto it = cache.find(token); it != cache.end()) return it->second;
  const std::string inv = inverse_token(token);
  if (!token.empty() && std::isupper(static_cast<unsigned char>(token[0]))) {
    if (auto it = binding.find(inv); it != binding.end()) return cache.emplace(token, wreath_inv(it->second)).first->second;
  }
  throw Error(Errc::UnboundSymbol, "letter '" + token + "' has no binding");
}

}  // namespace

WreathElement eval_word(const Binding& binding, const Word& w, const Ring& ring, std::size_t rank) {
  WreathElement out = wreath_id(ring, rank);
  std::map<std::string, WreathElement> inverses;
  for (const auto& token : w) {
    const WreathElement& g = lookup(binding, token, inverses);
    out.fun.add_scaled(g.fun, out.shift, 1);
    out.shift = out.shift + g.shift;
  }
  return out;
}

Binding shift_binding(const Ring& ring, std::size_t rank) {
  return {{"x", wreath_shift(ring, rank, {1, 0})}, {"y", wreath_shift(ring, rank, {0, 1})}};
}

WreathElement embed_module(const ModuleElement& e, std::size_t m) {
  if (e.rank() > m)
    throw Error(Errc::RankExceedsIndex,
                "rank " + std::to_string(e.rank()) + " does not fit index " + std::to_string(m));
  WreathElement out = wreath_id(e.ring(), 1);
  const auto mm = static_cast<std::int64_t>(m);
  for (const auto& [k, v] : e.entries())
    out.fun.accumulate({mm * k.pos.x + static_cast<std::int64_t>(k.idx), k.pos.y}, 0, v);
  return out;
}

ModuleElement unembed_module(const ModuleElement& fun, std::size_t m, std::size_t rank) {
  ModuleElement out(fun.ring(), rank);
  const auto mm = static_cast<std::int64_t>(m);
  for (const auto& [k, v] : fun.entries()) {
    std::int64_t j = k.pos.x % mm;
    if (j < 0) j += mm;
    out.accumulate({(k.pos.x - j) / mm, k.pos.y}, static_cast<std::size_t>(j), v);
  }
  return out;
}

}  // namespace tilesum
