// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any
// criterion fails. `--update-golden` rewrites tests/golden from the current
// writers instead.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "artifacts.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "tilesum/certificate.hpp"
#include "tilesum/error.hpp"
#include "tilesum/forced_search.hpp"
#include "tilesum/metabelian.hpp"
#include "tilesum/rational.hpp"
#include "tilesum/semimodule.hpp"
#include "tilesum/submonoid.hpp"
#include "tilesum/tile_compiler.hpp"
#include "tilesum/tiling_builder.hpp"
#include "tilesum/wreath.hpp"

namespace fs = std::filesystem;
using namespace tilesum;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Pair {
  std::string machine;
  std::string input;
  TuringMachine tm;
  std::vector<SymbolId> symbols;
  TilingSystem ts;
  EdgeMap f0;
  bool accepted = false;
  std::optional<Certificate> built;
};

std::vector<Pair> load_pairs() {
  std::vector<Pair> out;
  for (const auto& name : test::corpus()) {
    const TuringMachine tm = test::machine(name);
    const TilingSystem ts = compile_tiles(tm);
    for (const auto& input : test::all_inputs(tm, 1, 4)) {
      Pair p{name, input, tm, parse_input(tm, input), ts, EdgeMap(), false, std::nullopt};
      p.f0 = initial_map(tm, p.symbols);
      p.accepted = test::accepts(tm, p.symbols);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::string label(const Pair& p) { return p.machine + " on " + p.input; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1 and 2 -------------------------------------------------------------

Outcome end_to_end(std::vector<Pair>& pairs, std::vector<bool>& forced_found) {
  Outcome o;
  const ForcedSearchLimits limits{8, 64};
  std::size_t accepted = 0;
  std::set<std::string> machines;
  for (auto& p : pairs) {
    machines.insert(p.machine);
    const auto found = forced_search(p.ts, p.f0, limits);
    forced_found.push_back(found.has_value());
    if (!p.accepted) {
      o.expect(!found, "forced search tiled non-accepted " + label(p));
      continue;
    }
    ++accepted;
    p.built = build_accepting_tiling(p.tm, p.symbols, 100000);
    if (!p.built) {
      o.fail("builder produced nothing for " + label(p));
      continue;
    }
    o.expect(verify_zero(p.f0, *p.built, p.ts), "built tiling does not cancel for " + label(p));
    o.expect(found && found->canonical().placements == p.built->canonical().placements,
             "forced search differs from builder for " + label(p));
    o.expect(audit_certificate(*p.built, p.f0).empty(), "audit findings for " + label(p));
  }
  o.expect(machines.size() >= 3, "corpus has fewer than three machines");
  o.expect(accepted > 0, "no accepted pairs");
  for (const auto& p : pairs)
    if (p.machine == "looper.json") o.expect(!p.accepted, "looper accepted " + p.input);
  o.notes.insert(o.notes.begin(), std::to_string(pairs.size()) + " pairs, " + std::to_string(accepted) + " accepted");
  return o;
}

std::vector<std::string> quoted_includes(const std::string& text) {
  static const std::regex inc(R"re(#include\s+"([^"]+)")re");
  std::vector<std::string> out;
  for (std::sregex_iterator it(text.begin(), text.end(), inc), end; it != end; ++it) out.push_back((*it)[1]);
  return out;
}

Outcome oracle_independence(const std::vector<Pair>& pairs, const std::vector<bool>& forced_found) {
  Outcome o;
  const fs::path root(TILESUM_SOURCE_DIR);
  // Everything the forced search can see: its sources plus the closure of
  // project headers they include.
  std::vector<fs::path> todo{root / "core/src/forced_search.cpp"};
  std::set<fs::path> seen;
  while (!todo.empty()) {
    const fs::path f = todo.back();
    todo.pop_back();
    if (!seen.insert(f).second) continue;
    const std::string text = test::slurp(f.string());
    if (text.empty()) {
      o.fail("cannot read " + f.string());
      continue;
    }
    for (const char* banned : {"TuringMachine", "turing_machine", "tile_compiler", "RunTrace"})
      o.expect(text.find(banned) == std::string::npos, f.filename().string() + " mentions " + banned);
    for (const auto& inc : quoted_includes(text)) todo.push_back(root / "core/include" / inc);
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (forced_found[i] == pairs[i].accepted) ++agree;
    else o.fail("forced search disagrees with simulator on " + label(pairs[i]));
  }
  o.notes.insert(o.notes.begin(), std::to_string(seen.size()) + " files scanned, " + std::to_string(agree) + "/" +
                                      std::to_string(pairs.size()) + " agree");
  return o;
}

// --- 3 -------------------------------------------------------------------

WreathElement random_wreath(test::Rng& rng, const Ring& ring) {
  return {test::random_module_element(rng, ring, 2), {test::uniform(rng, -3, 3), test::uniform(rng, -3, 3)}};
}

MetabelianElement random_metabelian(test::Rng& rng) { return metabelian_eval(test::random_word(rng, test::xy_letters(), 10)); }

Word commutator(const Word& a, const Word& b) {
  Word w = a;
  append(w, b);
  append(w, inverse_word(a));
  append(w, inverse_word(b));
  return w;
}

Outcome law_suite() {
  Outcome o;
  test::Rng rng(2024);
  constexpr int N = 1000;
  const std::array<Ring, 2> rings{Ring::integers(), Ring::modulo(3)};
  for (int i = 0; i < N; ++i) {
    const Ring& ring = rings[static_cast<std::size_t>(i % 2)];
    const EdgeMap a = test::random_edge_map(rng, ring), b = test::random_edge_map(rng, ring),
                  c = test::random_edge_map(rng, ring);
    const EdgeMap zero(ring);
    o.expect(add(add(a, b), c) == add(a, add(b, c)), "edge map addition not associative");
    o.expect(add(a, b) == add(b, a), "edge map addition not commutative");
    o.expect(add(a, zero) == a, "edge map zero not neutral");
    o.expect(add(a, negate(a)).is_zero(), "edge map negation not inverse");

    const Point s{test::uniform(rng, -4, 4), test::uniform(rng, -4, 4)}, t{test::uniform(rng, -4, 4), test::uniform(rng, -4, 4)};
    o.expect(translate(a, {0, 0}) == a, "translation by zero moves");
    o.expect(translate(translate(a, s), t) == translate(a, s + t), "translation does not compose");
    o.expect(translate(add(a, b), s) == add(translate(a, s), translate(b, s)), "translation not additive");
    const ModuleElement e = test::random_module_element(rng, ring, 3), e2 = test::random_module_element(rng, ring, 3);
    o.expect(translate(translate(e, s), t) == translate(e, s + t), "module translation does not compose");
    o.expect(translate(add(e, e2), s) == add(translate(e, s), translate(e2, s)), "module translation not additive");

    const WreathElement g = random_wreath(rng, ring), h = random_wreath(rng, ring), k = random_wreath(rng, ring);
    const WreathElement id = wreath_id(ring, 2);
    o.expect(wreath_mul(wreath_mul(g, h), k) == wreath_mul(g, wreath_mul(h, k)), "wreath product not associative");
    o.expect(wreath_mul(g, id) == g && wreath_mul(id, g) == g, "wreath identity not neutral");
    o.expect(wreath_mul(g, wreath_inv(g)) == id && wreath_mul(wreath_inv(g), g) == id, "wreath inverse wrong");

    const MetabelianElement p = random_metabelian(rng), q = random_metabelian(rng), r = random_metabelian(rng);
    o.expect(metabelian_mul(metabelian_mul(p, q), r) == metabelian_mul(p, metabelian_mul(q, r)),
             "metabelian product not associative");
    o.expect(metabelian_mul(p, metabelian_id()) == p && metabelian_mul(metabelian_id(), p) == p,
             "metabelian identity not neutral");
    o.expect(metabelian_mul(p, metabelian_inv(p)) == metabelian_id(), "metabelian inverse wrong");

    Binding bind = shift_binding(ring, 2);
    bind["g0"] = random_wreath(rng, ring);
    bind["g1"] = random_wreath(rng, ring);
    const std::vector<std::string> letters{"x", "X", "y", "Y", "g0", "G0", "g1", "G1"};
    const Word u = test::random_word(rng, letters, 8), v = test::random_word(rng, letters, 8);
    Word uv = u;
    append(uv, v);
    o.expect(eval_word(bind, uv, ring, 2) == wreath_mul(eval_word(bind, u, ring, 2), eval_word(bind, v, ring, 2)),
             "eval_word not a homomorphism: " + format_word(uv));
    o.expect(eval_word(bind, inverse_word(u), ring, 2) == wreath_inv(eval_word(bind, u, ring, 2)),
             "eval_word does not respect inverses");

    const Word a1 = test::random_word(rng, test::xy_letters(), 6), a2 = test::random_word(rng, test::xy_letters(), 6);
    Word a12 = a1;
    append(a12, a2);
    o.expect(metabelian_eval(a12) == metabelian_mul(metabelian_eval(a1), metabelian_eval(a2)),
             "metabelian_eval not a homomorphism: " + format_word(a12));
    const auto walked = test::path_walk(a12);
    Flow flow;
    for (const auto& [key, val] : walked.second)
      flow_add(flow, {key.first, key.second == 0 ? Orient::H : Orient::V}, Integer(val));
    o.expect(metabelian_eval(a12) == MetabelianElement{walked.first, flow}, "metabelian_eval disagrees with path tracer");

    const Word s1 = test::random_word(rng, letters, 5), s2 = test::random_word(rng, letters, 5);
    const Word s3 = test::random_word(rng, letters, 5), s4 = test::random_word(rng, letters, 5);
    o.expect(eval_word(bind, commutator(commutator(s1, s2), commutator(s3, s4)), ring, 2) == wreath_id(ring, 2),
             "metabelian law fails in the wreath product");
    const Word m1 = test::random_word(rng, test::xy_letters(), 5), m2 = test::random_word(rng, test::xy_letters(), 5);
    const Word m3 = test::random_word(rng, test::xy_letters(), 5), m4 = test::random_word(rng, test::xy_letters(), 5);
    o.expect(metabelian_eval(commutator(commutator(m1, m2), commutator(m3, m4))) == metabelian_id(),
             "metabelian law fails: " + format_word(commutator(commutator(m1, m2), commutator(m3, m4))));
  }
  o.notes.insert(o.notes.begin(), std::to_string(N) + " cases per law");
  return o;
}

// --- 4 -------------------------------------------------------------------

Outcome homology_round_trip() {
  Outcome o;
  test::Rng rng(4242);
  for (int i = 0; i < 500; ++i) {
    Word w = test::random_word(rng, test::xy_letters(), 24);
    const MetabelianElement g = metabelian_eval(w);
    // Close the path so its flow is a cycle.
    append(w, power("x", -g.ab.x));
    append(w, power("y", -g.ab.y));
    const MetabelianElement closed = metabelian_eval(w);
    o.expect(closed.ab == Point{0, 0}, "closing the path failed");
    const CellMap phi = flow_decompose(closed.flow);
    o.expect(cell_boundary(phi) == closed.flow, "boundary of decomposition differs from flow: " + format_word(w));
    o.expect(metabelian_eval(flow_to_word(closed.flow)) == closed, "flow_to_word does not re-evaluate: " + format_word(w));
  }
  for (std::size_t m : {2, 3, 5}) {
    for (int i = 0; i < 500; ++i) {
      const ModuleElement a = test::random_module_element(rng, Ring::integers(), m, 6, 4, 5);
      o.expect(from_split_basis(to_split_basis(a)) == a, "split basis does not invert");
      o.expect(to_split_basis(from_split_basis(a)) == a, "split basis is not onto");
      const CellMap cells = ungroup_cells(a);
      o.expect(regroup_cells(cells, m) == a, "cell regrouping does not invert");
    }
  }
  o.notes.push_back("500 words, 3x500 vectors");
  return o;
}

// --- 5 -------------------------------------------------------------------

bool independently_equal(SubmonoidFlavor flavor, const Word& a, const Word& b) {
  if (flavor == SubmonoidFlavor::Wreath) return test::lamp_walk(a) == test::lamp_walk(b);
  return test::path_walk(a) == test::path_walk(b);
}

Outcome reduction_transport(const std::vector<Pair>& pairs) {
  Outcome o;
  struct Ready {
    SubmonoidInstance sub;
    std::vector<std::size_t> cert;
  };
  std::vector<Ready> ready;
  std::size_t checked = 0;
  for (const auto& p : pairs) {
    if (!p.accepted || !p.built) continue;
    const SemimoduleInstance inst = tiling_to_instance(p.ts, p.f0);
    const Witness w = certificate_to_witness(p.ts, *p.built);
    if (!verify_witness(inst, w)) {
      o.fail("semimodule witness does not verify for " + label(p));
      continue;
    }
    for (auto flavor : {SubmonoidFlavor::Wreath, SubmonoidFlavor::FreeMetabelian}) {
      SubmonoidInstance sub = make_submonoid_instance(inst, flavor);
      auto cert = witness_to_certificate(sub, w);
      o.expect(verify_submonoid_certificate(sub, cert),
               std::string(to_string(flavor)) + " certificate rejected for " + label(p));
      ++checked;
      ready.push_back({std::move(sub), std::move(cert)});
    }
  }
  test::Rng rng(55);
  std::size_t flipped = 0, genuine = 0, total = 0;
  for (auto flavor : {SubmonoidFlavor::Wreath, SubmonoidFlavor::FreeMetabelian}) {
    std::vector<const Ready*> pool;
    for (const auto& r : ready)
      if (r.sub.flavor == flavor && !r.cert.empty()) pool.push_back(&r);
    if (pool.empty()) {
      o.fail("nothing to mutate");
      continue;
    }
    std::size_t flavor_flipped = 0;
    for (int i = 0; i < 100; ++i) {
      const Ready& r = *pool[static_cast<std::size_t>(test::uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
      auto mutant = r.cert;
      const auto at = static_cast<std::size_t>(test::uniform(rng, 0, static_cast<std::int64_t>(mutant.size()) - 1));
      const auto gens = static_cast<std::int64_t>(r.sub.generators.size());
      std::size_t repl = mutant[at];
      while (repl == mutant[at]) repl = static_cast<std::size_t>(test::uniform(rng, 0, gens - 1));
      mutant[at] = repl;
      ++total;
      if (!verify_submonoid_certificate(r.sub, mutant)) {
        ++flavor_flipped;
        continue;
      }
      // A surviving mutant must really be another certificate.
      if (independently_equal(flavor, certificate_word(r.sub, mutant), r.sub.target)) ++genuine;
      else o.fail(std::string(to_string(flavor)) + " mutant accepted but evaluates elsewhere");
    }
    o.expect(flavor_flipped >= 95, std::string(to_string(flavor)) + ": only " + std::to_string(flavor_flipped) +
                                       "/100 mutants rejected");
    flipped += flavor_flipped;
  }
  o.notes.insert(o.notes.begin(), std::to_string(checked) + " certificates, " + std::to_string(flipped) + "/" +
                                      std::to_string(total) + " mutants rejected, " + std::to_string(genuine) +
                                      " genuine survivors");
  return o;
}

// --- 6 -------------------------------------------------------------------

bool distinct_unit(const Witness& w) {
  std::set<Point> shifts;
  for (const auto& t : w)
    if (t.coeff != 1 || !shifts.insert(t.shift).second) return false;
  return true;
}

Outcome rational_suite(const std::vector<Pair>& pairs) {
  Outcome o;
  std::size_t solved = 0;
  for (const auto& p : pairs) {
    if (!p.accepted || !p.built) continue;
    for (int n : {2, 3}) {
      const Ring ring = Ring::modulo(n);
      const SemimoduleInstance inst = tiling_to_instance(p.ts, initial_map(p.tm, p.symbols, ring));
      const auto w = subset_sum_bounded(inst, certificate_window(*p.built));
      const std::string where = label(p) + " over Z/" + std::to_string(n);
      if (!w) {
        o.fail("no subset sum for " + where);
        continue;
      }
      ++solved;
      o.expect(verify_witness(inst, *w) && distinct_unit(*w), "bad subset-sum witness for " + where);
      Certificate cert;
      cert.width_m = p.built->width_m;
      cert.height_n = p.built->height_n;
      for (const auto& t : *w) cert.placements.push_back({p.ts.tiles[t.generator], t.shift});
      o.expect(verify_zero(initial_map(p.tm, p.symbols, ring), cert, p.ts), "witness tiling does not cancel for " + where);
      o.expect(audit_certificate(cert, p.f0).empty(), "witness tiling has audit findings for " + where);
      const Word word = certificate_to_word(*w);
      o.expect(nfa_accepts(regex_to_nfa(build_L(inst.generators.size())), word), "word outside L for " + where);
      o.expect(eval_word(rational_binding(inst), word, ring, 1) == rational_target(inst),
               "word misses the target for " + where);
    }
  }

  // Every accepted L-word of length <= 12 for one generator f = d(0,0) + d(1,0)
  // over Z/2, walked letter by letter through a determinized automaton.
  const Ring z2 = Ring::modulo(2);
  ModuleElement f(z2, 1);
  f.accumulate({0, 0}, 0, 1);
  f.accumulate({1, 0}, 0, 1);
  const SemimoduleInstance one{z2, 1, {f}, ModuleElement(z2, 1)};
  const Nfa nfa = regex_to_nfa(build_L(1));
  const std::vector<std::string> letters{"x", "X", "y", "Y", "g0"};
  const test::Dfa dfa = test::determinize(nfa, letters);
  constexpr int L = 12;
  std::set<std::vector<Point>> hits;
  std::set<Point> lit;
  std::size_t words = 0;
  std::function<void(int, Point, int)> walk = [&](int state, Point at, int left) {
    ++words;
    if (dfa.accepting[static_cast<std::size_t>(state)] && at == Point{0, 0})
      hits.insert(std::vector<Point>(lit.begin(), lit.end()));
    if (left == 0) return;
    for (std::size_t l = 0; l < letters.size(); ++l) {
      const int next = dfa.next[static_cast<std::size_t>(state)][l];
      if (next == 0) continue;
      Point to = at;
      if (l == 0) ++to.x;
      else if (l == 1) --to.x;
      else if (l == 2) ++to.y;
      else if (l == 3) --to.y;
      // Paths that cannot get back to the origin never produce a hit.
      if (std::abs(to.x) + std::abs(to.y) > left - 1) continue;
      if (l == 4) {
        for (Point q : {at, at + Point{1, 0}})
          if (!lit.erase(q)) lit.insert(q);
      }
      walk(next, to, left - 1);
      if (l == 4) {
        for (Point q : {at, at + Point{1, 0}})
          if (!lit.erase(q)) lit.insert(q);
      }
    }
  };
  walk(dfa.start, {0, 0}, L);

  std::set<WreathElement> from_bfs;
  for (const auto& g : reachable_images(nfa, rational_binding(one), z2, 1, L))
    if (g.shift == Point{0, 0}) from_bfs.insert(g);
  std::set<WreathElement> from_walk;
  for (const auto& h : hits) {
    WreathElement g = wreath_id(z2, 1);
    for (Point p : h) g.fun.accumulate(p, 0, 1);
    from_walk.insert(g);
  }
  o.expect(from_bfs == from_walk, "breadth-first images differ from word enumeration");

  for (const auto& h : hits) {
    // Translates of f come in horizontal pairs, so a sum of distinct ones
    // lights an even number of lamps in every row, and conversely.
    std::map<std::int64_t, int> per_row;
    for (Point p : h) ++per_row[p.y];
    bool even = true;
    for (const auto& [row, count] : per_row) even = even && count % 2 == 0;
    o.expect(even, "hit with an odd row");
    SemimoduleInstance inst = one;
    for (Point p : h) inst.target.accumulate(p, 0, 1);
    Window win{0, 0, -1, -1};
    if (!h.empty()) {
      win = {h.front().x, h.front().y, h.front().x, h.front().y};
      for (Point p : h) {
        win.x0 = std::min(win.x0, p.x), win.x1 = std::max(win.x1, p.x);
        win.y0 = std::min(win.y0, p.y), win.y1 = std::max(win.y1, p.y);
      }
    }
    const auto w = subset_sum_bounded(inst, win);
    o.expect(w && verify_witness(inst, *w) && distinct_unit(*w), "hit is not found as a subset sum");
  }
  o.notes.insert(o.notes.begin(), std::to_string(solved) + " subset sums, " + std::to_string(words) +
                                      " L-prefixes walked, " + std::to_string(hits.size()) + " hits at the origin");
  return o;
}

// --- 7 -------------------------------------------------------------------

#ifdef TILESUM_CLI
int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TILESUM_CLI + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}
#endif

Outcome format_stability() {
  Outcome o;
  const auto first = test::make_artifacts();
  const auto second = test::make_artifacts();
  o.expect(first == second, "two runs of the writers differ");
  for (const auto& [name, text] : first) {
    const std::string path = test::golden_path(name);
    if (!fs::exists(path)) o.fail("missing golden file " + name);
    else o.expect(test::slurp(path) == text, name + " differs from its golden file");
  }

  std::size_t compared = 0;
#ifdef TILESUM_CLI
  const fs::path work = fs::path(TILESUM_WORK_DIR) / "acceptance-cli";
  fs::create_directories(work);
  const std::string tm = "--tm \"" + test::data_path("eraser.json") + "\"";
  for (int round = 0; round < 2; ++round) {
    const std::string r = std::to_string(round);
    o.expect(run_cli("tile build " + tm + " --input a -o \"" + (work / ("cert" + r + ".json")).string() + "\"") == 0,
             "cli build failed");
    o.expect(run_cli("render " + tm + " --cert \"" + (work / ("cert" + r + ".json")).string() + "\" --format svg -o \"" +
                     (work / ("cert" + r + ".svg")).string() + "\"") == 0,
             "cli svg render failed");
    o.expect(run_cli("render " + tm + " --cert \"" + (work / ("cert" + r + ".json")).string() +
                     "\" --format ascii -o \"" + (work / ("cert" + r + ".txt")).string() + "\"") == 0,
             "cli ascii render failed");
  }
  for (const std::string ext : {".json", ".svg", ".txt"}) {
    const std::string a = test::slurp((work / ("cert0" + ext)).string());
    const std::string b = test::slurp((work / ("cert1" + ext)).string());
    o.expect(!a.empty() && a == b, "cli output " + ext + " differs between runs");
    o.expect(a == first.at("eraser_a.cert" + ext), "cli output " + ext + " differs from golden file");
    ++compared;
  }
#endif
  o.notes.insert(o.notes.begin(),
                 std::to_string(first.size()) + " library artifacts, " + std::to_string(compared) + " cli artifacts");
  return o;
}

int update_golden() {
  const fs::path dir(TILESUM_GOLDEN_DIR);
  fs::create_directories(dir);
  for (const auto& [name, text] : test::make_artifacts()) {
    std::ofstream out(dir / name, std::ios::binary);
    out << text;
    std::cout << "wrote " << (dir / name).string() << " (" << text.size() << " bytes)\n";
  }
  return 0;
}

void report(int id, const std::string& title, const Outcome& o, double secs) {
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  line << " [" << buf << " s]";
  for (const auto& n : o.notes) line << "; " << n;
  std::cout << line.str() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--update-golden") return update_golden();
  bool all = true;
  auto timed = [&](int id, const std::string& title, double limit, auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (limit > 0 && secs >= limit) o.fail("took longer than " + std::to_string(static_cast<int>(limit)) + " s");
    report(id, title, o, secs);
    all = all && o.pass;
  };

  std::vector<Pair> pairs;
  std::vector<bool> forced;
  timed(1, "end-to-end equivalence", 60, [&] {
    pairs = load_pairs();
    return end_to_end(pairs, forced);
  });
  timed(2, "oracle independence", 0, [&] { return oracle_independence(pairs, forced); });
  timed(3, "algebraic laws", 0, [&] { return law_suite(); });
  timed(4, "homology round trip", 0, [&] { return homology_round_trip(); });
  timed(5, "reduction transport", 0, [&] { return reduction_transport(pairs); });
  timed(6, "subset sums and rational words", 120, [&] { return rational_suite(pairs); });
  timed(7, "format stability", 0, [&] { return format_stability(); });
  return all ? 0 : 1;
}
