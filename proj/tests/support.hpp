#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tilesum/edge_map.hpp"
#include "tilesum/io.hpp"
#include "tilesum/module_element.hpp"
#include "tilesum/turing_machine.hpp"
#include "tilesum/word.hpp"

namespace tilesum::test {

inline std::string data_path(const std::string& name) { return std::string(TILESUM_TEST_DATA) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(TILESUM_GOLDEN_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline TuringMachine raw_machine(const std::string& name) { return io::read_machine(slurp(data_path(name))); }

inline TuringMachine machine(const std::string& name) {
  TuringMachine tm = raw_machine(name);
  return is_normal_form(tm) ? tm : normalize(tm);
}

// The machines every end-to-end check runs over.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"eraser.json", "eraser_ab.json", "parity.json", "looper.json"};
  return names;
}

// Every word over the input alphabet with length in [lo, hi], as
// comma-separated symbol names.
inline std::vector<std::string> all_inputs(const TuringMachine& tm, std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= hi; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (SymbolId a : tm.input_alphabet) next.push_back(w.empty() ? tm.symbols[a] : w + "," + tm.symbols[a]);
    layer = std::move(next);
    if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline bool accepts(const TuringMachine& tm, const std::vector<SymbolId>& input, std::size_t fuel = 100000) {
  return std::holds_alternative<Accepted>(run(tm, input, fuel));
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Color random_color(Rng& rng) {
  static const std::vector<Color> palette{Color::of(Color::Kind::ArrowRight), Color::of(Color::Kind::ArrowUp),
                                          Color::of_state("q0"), Color::of_letter("a"), Color::of_head("q1", "_")};
  return palette[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(palette.size()) - 1))];
}

inline EdgeMap random_edge_map(Rng& rng, const Ring& ring, int max_terms = 6, int spread = 3) {
  EdgeMap f(ring);
  const auto terms = uniform(rng, 0, max_terms);
  for (std::int64_t i = 0; i < terms; ++i) {
    const EdgeId e{{uniform(rng, -spread, spread), uniform(rng, -spread, spread)},
                   uniform(rng, 0, 1) ? Orient::H : Orient::V};
    f.accumulate(e, random_color(rng), Integer(uniform(rng, -4, 4)));
  }
  return f;
}

inline ModuleElement random_module_element(Rng& rng, const Ring& ring, std::size_t rank, int max_terms = 5,
                                           int spread = 3, int max_value = 4) {
  ModuleElement e(ring, rank);
  const auto terms = uniform(rng, 0, max_terms);
  for (std::int64_t i = 0; i < terms; ++i)
    e.accumulate({uniform(rng, -spread, spread), uniform(rng, -spread, spread)},
                 static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(rank) - 1)),
                 Integer(uniform(rng, -max_value, max_value)));
  return e;
}

inline Word random_word(Rng& rng, const std::vector<std::string>& letters, std::size_t max_len) {
  Word w;
  const auto len = uniform(rng, 0, static_cast<std::int64_t>(max_len));
  for (std::int64_t i = 0; i < len; ++i)
    w.push_back(letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(letters.size()) - 1))]);
  return w;
}

inline const std::vector<std::string>& xy_letters() {
  static const std::vector<std::string> l{"x", "X", "y", "Y"};
  return l;
}

}  // namespace tilesum::test
