#include "tilesum/tiling_builder.hpp"

#include <algorithm>

#include "tilesum/error.hpp"
#include "tilesum/tile_compiler.hpp"

namespace tilesum {

std::int64_t tiling_width(const RunTrace& trace, std::size_t input_length) {
  return static_cast<std::int64_t>(std::max(trace.space, input_length)) + 1;
}

namespace {

SymbolId cell(const TuringMachine& tm, const Configuration& c, std::size_t i) {
  return i < c.tape.size() ? c.tape[i] : tm.blank;
}

}  // namespace

std::optional<Certificate> build_accepting_tiling(const TuringMachine& tm, std::span<const SymbolId> input,
                                                  std::size_t fuel) {
  if (input.empty()) throw Error(Errc::EmptyInput, "tilings start from a nonempty input");
  auto result = run(tm, input, fuel);
  auto* accepted = std::get_if<Accepted>(&result);
  if (!accepted) return std::nullopt;
  const RunTrace& trace = accepted->trace;

  const Configuration& last = trace.configs.back();
  if (last.head != 0 || cells_used(tm, last) != 1 || cell(tm, last, 0) != tm.blank)
    throw Error(Errc::InvalidMachine, "accepting configuration is not blank with the head on cell 0");

  const auto boundary = boundary_tiles(tm);
  const Tile &b0 = boundary[0], &b1 = boundary[1], &b2 = boundary[2], &b3 = boundary[3];
  const Tile &b4 = boundary[4], &b5 = boundary[5], &b6 = boundary[6], &b7 = boundary[7];
  const Color tri_l = Color::of(Color::Kind::TriLeft), tri_r = Color::of(Color::Kind::TriRight);

  Certificate cert;
  const auto n = static_cast<std::int64_t>(input.size());
  const std::int64_t m = tiling_width(trace, input.size());
  const auto rows = static_cast<std::int64_t>(trace.configs.size());
  cert.width_m = m;
  cert.height_n = rows;
  auto place = [&](const Tile& t, std::int64_t x, std::int64_t y) { cert.placements.push_back({t, {x, y}}); };

  for (std::int64_t x = n + 1; x <= m - 1; ++x) place(b0, x, 0);
  place(b1, m, 0);

  for (std::int64_t y = 1; y < rows; ++y) {
    const Configuration& c = trace.configs[static_cast<std::size_t>(y - 1)];
    const SymbolId read = cell(tm, c, c.head);
    const Transition* t = tm.find(c.state, read);
    const auto hx = static_cast<std::int64_t>(c.head) + 1;
    const Color write = letter_color(tm, t->write), qa = head_color(tm, c.state, read);
    const Color p = state_color(tm, t->next);

    // Columns in [lo, hi] hold the action tile and its merging neighbour.
    std::int64_t lo = hx, hi = hx;
    place(b7, 0, y);
    if (t->move == Move::Left) {
      const SymbolId u = cell(tm, c, c.head - 1);
      place({head_color(tm, t->next, u), p, letter_color(tm, u), tri_l, std::nullopt}, hx - 1, y);
      place({write, tri_r, qa, p, std::nullopt}, hx, y);
      lo = hx - 1;
    } else {
      const SymbolId u = cell(tm, c, c.head + 1);
      place({write, p, qa, tri_l, std::nullopt}, hx, y);
      place({head_color(tm, t->next, u), tri_r, letter_color(tm, u), p, std::nullopt}, hx + 1, y);
      hi = hx + 1;
    }
    for (std::int64_t x = 1; x < lo; ++x) {
      const Color a = letter_color(tm, cell(tm, c, static_cast<std::size_t>(x - 1)));
      place({a, tri_l, a, tri_l, std::nullopt}, x, y);
    }
    for (std::int64_t x = hi + 1; x <= m - 1; ++x) {
      const Color a = letter_color(tm, cell(tm, c, static_cast<std::size_t>(x - 1)));
      place({a, tri_r, a, tri_r, std::nullopt}, x, y);
    }
    place(b2, m, y);
  }

  place(b6, 0, rows);
  place(b5, 1, rows);
  for (std::int64_t x = 2; x <= m - 1; ++x) place(b4, x, rows);
  place(b3, m, rows);

  // Use the compiled system's own tiles so names match other producers.
  const TilingSystem ts = compile_tiles(tm);
  for (auto& pl : cert.placements) pl.tile = ts.tiles[*ts.find(pl.tile)];
  return cert.canonical();
}

}  // namespace tilesum
