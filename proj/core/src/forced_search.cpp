#include "tilesum/forced_search.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace tilesum {

namespace {

class RowSolver {
 public:
  explicit RowSolver(const TilingSystem& ts) : ts_(ts) {
    for (std::size_t i = 0; i < ts.tiles.size(); ++i)
      by_south_west_[{ts.tiles[i].south, ts.tiles[i].west}].push_back(i);
  }

  // Tiles for columns x0..x0+south.size()-1: the first tile's west side is
  // `west_in`, the last tile's east side is c0, and column i's south side
  // is south[i]. Returns the completion if it is unique.
  std::optional<std::vector<std::size_t>> solve(const Color& west_in, const std::vector<Color>& south) const {
    std::vector<std::size_t> current, found;
    int solutions = 0;
    dfs(0, west_in, south, current, found, solutions);
    if (solutions != 1) return std::nullopt;
    return found;
  }

 private:
  void dfs(std::size_t col, const Color& west, const std::vector<Color>& south, std::vector<std::size_t>& current,
           std::vector<std::size_t>& found, int& solutions) const {
    if (solutions > 1) return;
    if (col == south.size()) {
      if (++solutions == 1) found = current;
      return;
    }
    auto it = by_south_west_.find({south[col], west});
    if (it == by_south_west_.end()) return;
    const bool last = col + 1 == south.size();
    for (std::size_t idx : it->second) {
      const Tile& t = ts_.tiles[idx];
      if (last && !t.east.is_blank0()) continue;
      current.push_back(idx);
      dfs(col + 1, t.east, south, current, found, solutions);
      current.pop_back();
    }
  }

  const TilingSystem& ts_;
  std::map<std::pair<Color, Color>, std::vector<std::size_t>> by_south_west_;
};

std::optional<Certificate> attempt(const TilingSystem& ts, const RowSolver& solver, const InitialShape& shape,
                                   const EdgeMap& f0, std::int64_t m, std::int64_t max_rows) {
  const Color c0 = Color::blank0();
  Certificate cert;
  cert.width_m = m;

  // Bottom row: columns n+1..m, nothing below, fed by the input arrow.
  const std::vector<Color> bottom_south(static_cast<std::size_t>(m - shape.n), c0);
  auto bottom = solver.solve(Color::of(Color::Kind::ArrowRight), bottom_south);
  if (!bottom) return std::nullopt;

  std::vector<Color> pending = shape.row;
  for (std::size_t i = 0; i < bottom->size(); ++i) {
    const Tile& t = ts.tiles[(*bottom)[i]];
    cert.placements.push_back({t, {shape.n + 1 + static_cast<std::int64_t>(i), 0}});
    pending.push_back(t.north);
  }

  std::set<std::vector<Color>> seen;
  for (std::int64_t y = 1; y <= max_rows; ++y) {
    // The deduction is deterministic, so a repeated row means it cycles.
    if (!seen.insert(pending).second) return std::nullopt;
    auto row = solver.solve(c0, pending);
    if (!row) return std::nullopt;
    bool capped = true;
    for (std::size_t x = 0; x < row->size(); ++x) {
      const Tile& t = ts.tiles[(*row)[x]];
      cert.placements.push_back({t, {static_cast<std::int64_t>(x), y}});
      pending[x] = t.north;
      capped = capped && t.north.is_blank0();
    }
    if (capped) {
      cert.height_n = y;
      if (!verify_zero(f0, cert, ts)) return std::nullopt;
      return cert.canonical();
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Certificate> forced_search(const TilingSystem& ts, const EdgeMap& f0, ForcedSearchLimits limits) {
  const InitialShape shape = parse_initial_shape(f0);
  const RowSolver solver(ts);
  for (std::int64_t m = shape.n + 1; m <= limits.max_m; ++m) {
    if (auto cert = attempt(ts, solver, shape, f0, m, limits.max_rows)) return cert;
  }
  return std::nullopt;
}

}  // namespace tilesum
