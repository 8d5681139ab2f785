#include "tilesum/submonoid.hpp"

#include "tilesum/error.hpp"

namespace tilesum {

const char* to_string(SubmonoidFlavor f) { return f == SubmonoidFlavor::Wreath ? "wreath" : "metabelian"; }

SubmonoidFlavor parse_flavor(std::string_view text) {
  if (text == "wreath") return SubmonoidFlavor::Wreath;
  if (text == "metabelian") return SubmonoidFlavor::FreeMetabelian;
  throw Error(Errc::Parse, "flavor must be 'wreath' or 'metabelian', got '" + std::string(text) + "'");
}

namespace {

std::int64_t index_for(const ModuleElement& e, SubmonoidFlavor flavor) {
  return static_cast<std::int64_t>(flavor == SubmonoidFlavor::Wreath ? e.rank() : e.rank() + 1);
}

// Entry ((a,b), idx) lands at lattice point (m*a + idx, b).
Point lattice_point(const ModuleKey& k, std::int64_t m) {
  return {m * k.pos.x + static_cast<std::int64_t>(k.idx), k.pos.y};
}

Word conjugate(Point p, const Word& inner) {
  Word w = power("x", p.x);
  append(w, power("y", p.y));
  append(w, inner);
  append(w, power("y", -p.y));
  append(w, power("x", -p.x));
  return w;
}

Word wreath_module_word(const ModuleElement& e, std::int64_t m) {
  Word w;
  for (const auto& [k, v] : e.entries())
    append(w, conjugate(lattice_point(k, m), power("g0", static_cast<std::int64_t>(v))));
  return free_reduce(w);
}

Word metabelian_module_word(const ModuleElement& e, std::int64_t m) {
  CellMap cells;
  for (const auto& [k, v] : e.entries()) cells[lattice_point(k, m)] += v;
  return flow_to_word(cell_boundary(cells));
}

Binding unit_binding() {
  Binding b = shift_binding(Ring::integers(), 1);
  WreathElement g0 = wreath_id(Ring::integers(), 1);
  g0.fun.accumulate({0, 0}, 0, 1);
  b.emplace("g0", std::move(g0));
  return b;
}

}  // namespace

Word module_word(const ModuleElement& e, SubmonoidFlavor flavor) {
  const std::int64_t m = index_for(e, flavor);
  return flavor == SubmonoidFlavor::Wreath ? wreath_module_word(e, m) : metabelian_module_word(e, m);
}

SubmonoidInstance make_submonoid_instance(const SemimoduleInstance& inst, SubmonoidFlavor flavor) {
  if (!inst.ring.is_integers()) throw Error(Errc::RingMismatch, "submonoid instances are built over Z");
  if (auto problems = inst.check(); !problems.empty()) throw Error(Errc::RankMismatch, problems.front());
  if (inst.rank == 0) throw Error(Errc::RankMismatch, "rank must be at least 1");

  SubmonoidInstance out;
  out.flavor = flavor;
  out.m = index_for(inst.target, flavor);
  out.module_generators = inst.generators.size();
  for (const auto& g : inst.generators) out.generators.push_back(module_word(g, flavor));
  out.generators.push_back(power("x", out.m));
  out.generators.push_back(power("x", -out.m));
  out.generators.push_back({"y"});
  out.generators.push_back({"Y"});
  out.target = module_word(inst.target, flavor);
  return out;
}

std::vector<std::size_t> witness_to_certificate(const SubmonoidInstance& inst, const Witness& w) {
  const std::size_t right = inst.module_generators, left = right + 1, up = right + 2, down = right + 3;
  std::vector<std::size_t> cert;
  auto repeat = [&](std::size_t idx, std::int64_t n) { cert.insert(cert.end(), static_cast<std::size_t>(n), idx); };
  for (const auto& t : w) {
    if (t.generator >= inst.module_generators)
      throw Error(Errc::BadIndex, "witness names generator " + std::to_string(t.generator));
    const std::int64_t a = t.shift.x, b = t.shift.y;
    repeat(a >= 0 ? right : left, a >= 0 ? a : -a);
    repeat(b >= 0 ? up : down, b >= 0 ? b : -b);
    repeat(t.generator, static_cast<std::int64_t>(t.coeff));
    repeat(b >= 0 ? down : up, b >= 0 ? b : -b);
    repeat(a >= 0 ? left : right, a >= 0 ? a : -a);
  }
  return cert;
}

Word certificate_word(const SubmonoidInstance& inst, const std::vector<std::size_t>& certificate) {
  Word w;
  for (std::size_t idx : certificate) {
    if (idx >= inst.generators.size())
      throw Error(Errc::BadIndex, "certificate names generator " + std::to_string(idx));
    append(w, inst.generators[idx]);
  }
  return w;
}

bool same_element(SubmonoidFlavor flavor, const Word& a, const Word& b) {
  if (flavor == SubmonoidFlavor::FreeMetabelian) return metabelian_eval(a) == metabelian_eval(b);
  const Binding binding = unit_binding();
  return eval_word(binding, a, Ring::integers(), 1) == eval_word(binding, b, Ring::integers(), 1);
}

bool verify_submonoid_certificate(const SubmonoidInstance& inst, const std::vector<std::size_t>& certificate) {
  return same_element(inst.flavor, certificate_word(inst, certificate), inst.target);
}

}  // namespace tilesum
