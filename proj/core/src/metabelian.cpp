#include "tilesum/metabelian.hpp"

#include "tilesum/error.hpp"

namespace tilesum {

void flow_add(Flow& f, const EdgeId& e, const Integer& v) {
  if (v == 0) return;
  auto [it, inserted] = f.emplace(e, v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) f.erase(it);
}

Flow translate_flow(const Flow& f, Point shift) {
  Flow out;
  for (const auto& [e, v] : f) out.emplace(e.shifted(shift), v);
  return out;
}

std::map<Point, Integer> flow_boundary(const Flow& f) {
  std::map<Point, Integer> out;
  auto bump = [&](Point p, const Integer& v) {
    auto& slot = out[p];
    slot += v;
    if (slot == 0) out.erase(p);
  };
  for (const auto& [e, v] : f) {
    const Point head = e.base + (e.orient == Orient::H ? Point{1, 0} : Point{0, 1});
    bump(e.base, v);
    bump(head, -v);
  }
  return out;
}

MetabelianElement metabelian_id() { return {}; }

MetabelianElement metabelian_eval(const Word& w) {
  MetabelianElement g;
  Point& p = g.ab;
  for (const auto& t : w) {
    if (t == "x") {
      flow_add(g.flow, {p, Orient::H}, 1);
      p.x += 1;
    } else if (t == "X") {
      p.x -= 1;
      flow_add(g.flow, {p, Orient::H}, -1);
    } else if (t == "y") {
      flow_add(g.flow, {p, Orient::V}, 1);
      p.y += 1;
    } else if (t == "Y") {
      p.y -= 1;
      flow_add(g.flow, {p, Orient::V}, -1);
    } else {
      throw Error(Errc::UnboundSymbol, "letter '" + t + "' is not a metabelian generator");
    }
  }
  return g;
}

MetabelianElement metabelian_mul(const MetabelianElement& a, const MetabelianElement& b) {
  MetabelianElement out = a;
  for (const auto& [e, v] : b.flow) flow_add(out.flow, e.shifted(a.ab), v);
  out.ab = a.ab + b.ab;
  return out;
}

MetabelianElement metabelian_inv(const MetabelianElement& g) {
  MetabelianElement out;
  out.ab = -g.ab;
  for (const auto& [e, v] : g.flow) flow_add(out.flow, e.shifted(-g.ab), -v);
  return out;
}

Flow unit_cycle() {
  return {{{{0, 0}, Orient::H}, 1}, {{{1, 0}, Orient::V}, 1}, {{{0, 1}, Orient::H}, -1}, {{{0, 0}, Orient::V}, -1}};
}

Flow cell_boundary(const CellMap& phi) {
  Flow out;
  const Flow c = unit_cycle();
  for (const auto& [cell, v] : phi)
    for (const auto& [e, s] : c) flow_add(out, e.shifted(cell), s * v);
  return out;
}

CellMap flow_decompose(const Flow& f) {
  // Horizontal entries grouped by column, rows ascending.
  std::map<std::int64_t, std::map<std::int64_t, Integer>> columns;
  for (const auto& [e, v] : f)
    if (e.orient == Orient::H) columns[e.base.x][e.base.y] = v;

  CellMap phi;
  for (const auto& [a, col] : columns) {
    Integer running = 0;
    auto it = col.begin();
    for (std::int64_t b = col.begin()->first; b <= col.rbegin()->first; ++b) {
      if (it != col.end() && it->first == b) running += (it++)->second;
      if (running != 0) phi[{a, b}] = running;
    }
  }
  if (cell_boundary(phi) != f) throw Error(Errc::NotACycle, "flow has nonzero boundary");
  return phi;
}

ModuleElement regroup_cells(const CellMap& phi, std::size_t m) {
  ModuleElement out(Ring::integers(), m);
  const auto mm = static_cast<std::int64_t>(m);
  for (const auto& [cell, v] : phi) {
    std::int64_t i = cell.x % mm;
    if (i < 0) i += mm;
    out.accumulate({(cell.x - i) / mm, cell.y}, static_cast<std::size_t>(i), v);
  }
  return out;
}

CellMap ungroup_cells(const ModuleElement& e) {
  CellMap out;
  const auto mm = static_cast<std::int64_t>(e.rank());
  for (const auto& [k, v] : e.entries()) out[{mm * k.pos.x + static_cast<std::int64_t>(k.idx), k.pos.y}] += v;
  return out;
}

ModuleElement to_split_basis(const ModuleElement& a) {
  const std::size_t last = a.rank() - 1;
  ModuleElement out(a.ring(), a.rank());
  for (const auto& [k, v] : a.entries()) {
    if (k.idx != last) {
      out.accumulate(k, v);
      continue;
    }
    out.accumulate(k, v);
    for (std::size_t i = 0; i < last; ++i) out.accumulate(k.pos, i, -v);
  }
  return out;
}

ModuleElement from_split_basis(const ModuleElement& b) {
  const std::size_t last = b.rank() - 1;
  ModuleElement out(b.ring(), b.rank());
  for (const auto& [k, v] : b.entries()) {
    out.accumulate(k, v);
    if (k.idx == last)
      for (std::size_t i = 0; i < last; ++i) out.accumulate(k.pos, i, v);
  }
  return out;
}

Word flow_to_word(const Flow& f) {
  Word w;
  for (const auto& [cell, v] : flow_decompose(f)) {
    const bool positive = v > 0;
    const auto times = static_cast<std::int64_t>(positive ? v : -v);
    append(w, power("x", cell.x));
    append(w, power("y", cell.y));
    for (std::int64_t i = 0; i < times; ++i) append(w, positive ? Word{"x", "y", "X", "Y"} : Word{"y", "x", "Y", "X"});
    append(w, power("y", -cell.y));
    append(w, power("x", -cell.x));
  }
  return free_reduce(w);
}

}  // namespace tilesum
