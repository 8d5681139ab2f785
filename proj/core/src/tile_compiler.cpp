#include "tilesum/tile_compiler.hpp"

#include "tilesum/error.hpp"

namespace tilesum {

using K = Color::Kind;

Color state_color(const TuringMachine& tm, StateId q) { return Color::of_state(tm.states.at(q)); }
Color letter_color(const TuringMachine& tm, SymbolId a) { return Color::of_letter(tm.symbols.at(a)); }
Color head_color(const TuringMachine& tm, StateId q, SymbolId a) {
  return Color::of_head(tm.states.at(q), tm.symbols.at(a));
}

Color config_color(const TuringMachine& tm, const ConfigLetter& l) {
  switch (l.kind) {
    case ConfigLetter::Kind::Begin:
      return Color::of(K::ArrowDown);
    case ConfigLetter::Kind::End:
      return Color::of(K::ArrowUp);
    case ConfigLetter::Kind::Head:
      return head_color(tm, l.state, l.symbol);
    case ConfigLetter::Kind::Symbol:
      break;
  }
  return letter_color(tm, l.symbol);
}

std::vector<Tile> boundary_tiles(const TuringMachine& tm) {
  const Color c0 = Color::blank0();
  const Color blank = letter_color(tm, tm.blank);
  const Color right = Color::of(K::ArrowRight), up = Color::of(K::ArrowUp);
  const Color left = Color::of(K::ArrowLeft), down = Color::of(K::ArrowDown);
  const Color diag = Color::of(K::ArrowDiag);
  const Color tri_l = Color::of(K::TriLeft), tri_r = Color::of(K::TriRight);
  const Color final_head = head_color(tm, tm.accepting, tm.blank);

  // {north, east, south, west}
  return {
      Tile{blank, right, c0, right, "b0"},
      Tile{up, c0, c0, right, "b1"},
      Tile{up, c0, up, tri_r, "b2"},
      Tile{c0, c0, up, left, "b3"},
      Tile{c0, left, blank, left, "b4"},
      Tile{c0, left, final_head, diag, "b5"},
      Tile{c0, diag, down, c0, "b6"},
      Tile{down, tri_l, down, c0, "b7"},
  };
}

TilingSystem compile_tiles(const TuringMachine& tm) {
  TilingSystem ts;
  const Color tri_l = Color::of(K::TriLeft), tri_r = Color::of(K::TriRight);

  ts.colors.insert(Color::blank0());
  for (K k : {K::ArrowRight, K::ArrowUp, K::ArrowLeft, K::ArrowDown, K::ArrowDiag, K::TriLeft, K::TriRight})
    ts.colors.insert(Color::of(k));
  for (StateId q = 0; q < tm.states.size(); ++q) ts.colors.insert(state_color(tm, q));
  for (SymbolId a = 0; a < tm.symbols.size(); ++a) {
    ts.colors.insert(letter_color(tm, a));
    for (StateId q = 0; q < tm.states.size(); ++q) ts.colors.insert(head_color(tm, q, a));
  }

  auto push = [&](Tile t) {
    if (!ts.find(t)) ts.tiles.push_back(std::move(t));
  };

  for (SymbolId a = 0; a < tm.symbols.size(); ++a) {
    const Color la = letter_color(tm, a);
    push({la, tri_r, la, tri_r, std::nullopt});
    push({la, tri_l, la, tri_l, std::nullopt});
  }
  for (SymbolId a = 0; a < tm.symbols.size(); ++a) {
    for (StateId p = 0; p < tm.states.size(); ++p) {
      const Color pa = head_color(tm, p, a), la = letter_color(tm, a), cp = state_color(tm, p);
      push({pa, tri_r, la, cp, std::nullopt});
      push({pa, cp, la, tri_l, std::nullopt});
    }
  }
  for (const auto& [key, t] : tm.transitions) {
    const auto [q, a] = key;
    const Color b = letter_color(tm, t.write), qa = head_color(tm, q, a), p = state_color(tm, t.next);
    if (t.move == Move::Left)
      push({b, tri_r, qa, p, std::nullopt});
    else
      push({b, p, qa, tri_l, std::nullopt});
  }
  for (auto& t : boundary_tiles(tm)) push(std::move(t));
  return ts;
}

EdgeMap initial_map(const TuringMachine& tm, std::span<const SymbolId> input, const Ring& ring) {
  if (input.empty()) throw Error(Errc::EmptyInput, "the input map needs at least one input symbol");
  EdgeMap f(ring);
  const auto n = static_cast<std::int64_t>(input.size());
  f.accumulate(EdgeId{{0, 1}, Orient::H}, Color::of(K::ArrowDown), 1);
  f.accumulate(EdgeId{{1, 1}, Orient::H}, head_color(tm, tm.initial, input[0]), 1);
  for (std::int64_t i = 2; i <= n; ++i)
    f.accumulate(EdgeId{{i, 1}, Orient::H}, letter_color(tm, input[static_cast<std::size_t>(i - 1)]), 1);
  f.accumulate(EdgeId{{n + 1, 0}, Orient::V}, Color::of(K::ArrowRight), 1);
  return f;
}

}  // namespace tilesum
