#pragma once

#include <span>
#include <vector>

#include "tilesum/edge_map.hpp"
#include "tilesum/tiles.hpp"
#include "tilesum/turing_machine.hpp"

namespace tilesum {

Color state_color(const TuringMachine& tm, StateId q);
Color letter_color(const TuringMachine& tm, SymbolId a);
Color head_color(const TuringMachine& tm, StateId q, SymbolId a);

/// Color of one configuration-word letter.
Color config_color(const TuringMachine& tm, const ConfigLetter& l);

/// The machine's tiling system: alphabet, merging, action and the eight
/// boundary tiles b0..b7. Tile count is 2|G| + 2|G||Q| + |dom d| + 8.
TilingSystem compile_tiles(const TuringMachine& tm);

/// The boundary tiles b0..b7 for a machine (shared with the builder).
std::vector<Tile> boundary_tiles(const TuringMachine& tm);

/// Input map f_w: the initial configuration row at height 1 plus the
/// right-arrow feeding the bottom boundary row. Throws EmptyInput.
EdgeMap initial_map(const TuringMachine& tm, std::span<const SymbolId> input, const Ring& ring = Ring::integers());

}  // namespace tilesum
