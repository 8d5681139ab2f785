#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "tilesum/module_element.hpp"
#include "tilesum/word.hpp"

namespace tilesum {

/// Element (f, z) of M x| (Z x Z) where M is the free R[Z x Z]-module of
/// the given rank. Rank 1 gives the wreath product R wr (Z x Z).
struct WreathElement {
  ModuleElement fun;
  Point shift;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend bool operator<(const WreathElement& a, const WreathElement& b) {
    if (a.shift != b.shift) return a.shift < b.shift;
    return a.fun < b.fun;
  }
};

WreathElement wreath_id(const Ring& ring, std::size_t rank);

/// (f1, z1)(f2, z2) = (f1 + z1.f2, z1 + z2).
WreathElement wreath_mul(const WreathElement& a, const WreathElement& b);
WreathElement wreath_inv(const WreathElement& g);

/// Pure translation (0, z).
WreathElement wreath_shift(const Ring& ring, std::size_t rank, Point z);

/// Letter name -> element. A capitalised letter not in the map denotes the
/// inverse of its lower-case form.
using Binding = std::map<std::string, WreathElement>;

/// Left-to-right product; the empty word is the identity of `ring`/`rank`.
/// Throws UnboundSymbol.
WreathElement eval_word(const Binding& binding, const Word& w, const Ring& ring, std::size_t rank);

/// x -> (0,(1,0)), y -> (0,(0,1)).
Binding shift_binding(const Ring& ring, std::size_t rank);

/// Places the rank-k module over Z[mZ x Z] inside rank 1 with coset
/// representatives (j, 0): entry ((a,b), j) goes to lattice point
/// (m*a + j, b). Throws RankExceedsIndex if k > m.
WreathElement embed_module(const ModuleElement& e, std::size_t m);

/// Inverse of embed_module on its image.
ModuleElement unembed_module(const ModuleElement& fun, std::size_t m, std::size_t rank);

}  // namespace tilesum
