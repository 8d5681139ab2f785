#pragma once

#include <map>
#include <string>

#include "support.hpp"
#include "tilesum/render.hpp"
#include "tilesum/semimodule.hpp"
#include "tilesum/submonoid.hpp"
#include "tilesum/tile_compiler.hpp"
#include "tilesum/tiling_builder.hpp"

namespace tilesum::test {

// Two tiles meeting along one vertical edge; small enough that every
// derived artifact stays readable.
inline TilingSystem toy_tiles() {
  const Color e = Color::of_letter("e"), n = Color::of_letter("n"), m = Color::of_letter("m");
  TilingSystem ts;
  for (auto c : {Color::blank0(), e, n, m}) ts.colors.insert(c);
  ts.tiles = {{n, e, Color::blank0(), Color::blank0(), "t"}, {m, Color::blank0(), Color::blank0(), e, "u"}};
  return ts;
}

// Every file format the library writes, keyed by golden file name.
inline std::map<std::string, std::string> make_artifacts() {
  std::map<std::string, std::string> out;

  const TuringMachine tm = machine("eraser.json");
  const auto input = parse_input(tm, "a");
  const TilingSystem ts = compile_tiles(tm);
  const EdgeMap f0 = initial_map(tm, input);
  const Certificate cert = *build_accepting_tiling(tm, input, 1000);
  out["eraser.normalized.json"] = io::write_machine(tm);
  out["eraser.tiles.json"] = io::write_tiling_system(ts);
  out["eraser_a.initial.json"] = io::write_edge_map(f0);
  out["eraser_a.initial.txt"] = render_ascii(f0);
  out["eraser_a.initial.svg"] = render_svg(f0);
  out["eraser_a.cert.json"] = io::write_certificate(cert);
  out["eraser_a.cert.txt"] = render_ascii(cert);
  out["eraser_a.cert.svg"] = render_svg(cert);

  const TilingSystem toy = toy_tiles();
  const std::vector<Placement> pair{{toy.tiles[0], {0, 0}}, {toy.tiles[1], {1, 0}}};
  const EdgeMap residue = evaluate_placements(toy, pair, Ring::integers());
  const SemimoduleInstance inst = tiling_to_instance(toy, negate(residue));
  const Witness w = *member_bounded(inst, {0, 0, 2, 1}, 1);
  out["toy.instance.json"] = io::write_instance(inst, io::InstanceMode::Semimodule);
  out["toy.witness.json"] = io::write_witness(w);
  for (auto flavor : {SubmonoidFlavor::Wreath, SubmonoidFlavor::FreeMetabelian}) {
    const auto sub = make_submonoid_instance(inst, flavor);
    out[std::string("toy.submonoid.") + to_string(flavor) + ".json"] = io::write_submonoid(sub);
    out[std::string("toy.submonoid.") + to_string(flavor) + ".cert.json"] =
        io::write_submonoid_certificate(witness_to_certificate(sub, w));
  }

  const SemimoduleInstance inst2 = tiling_to_instance(toy, negate(evaluate_placements(toy, pair, Ring::modulo(2))));
  const io::RationalInstance rat{inst2, build_L(inst2.generators.size())};
  out["toy.subset.json"] = io::write_instance(inst2, io::InstanceMode::SubsetSum);
  out["toy.rational.json"] = io::write_rational(rat);
  out["toy.nfa.json"] = io::write_nfa(regex_to_nfa(rat.expr));
  out["toy.word.txt"] = format_word(certificate_to_word(*subset_sum_bounded(inst2, {0, 0, 2, 1}))) + "\n";
  return out;
}

}  // namespace tilesum::test
