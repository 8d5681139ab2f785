#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tilesum/semimodule.hpp"
#include "tilesum/word.hpp"
#include "tilesum/wreath.hpp"

namespace tilesum {

struct Regex {
  enum class Kind : std::uint8_t { Epsilon, Literal, Concat, Union, Star };
  Kind kind = Kind::Epsilon;
  std::string token;  // Literal only
  std::vector<Regex> children;

  static Regex epsilon() { return {}; }
  static Regex literal(std::string t) { return {Kind::Literal, std::move(t), {}}; }
  static Regex concat(std::vector<Regex> parts) { return {Kind::Concat, {}, std::move(parts)}; }
  static Regex alt(std::vector<Regex> parts) { return {Kind::Union, {}, std::move(parts)}; }
  static Regex star(Regex r) { return {Kind::Star, {}, {std::move(r)}}; }

  friend bool operator==(const Regex&, const Regex&) = default;
};

/// Tokens as in words, "|" for union, juxtaposition for concatenation,
/// postfix "*", parentheses; "()" is the empty word. Throws Parse.
Regex parse_regex(std::string_view text);
std::string format_regex(const Regex& r);

/// {x,X,y,Y}* [ (x | g0 x | ... | g{k-1} x)* y X* ]* {x,X,y,Y}*
Regex build_L(std::size_t k);

struct Nfa {
  struct Edge {
    std::size_t from = 0, to = 0;
    std::optional<std::string> label;  // nullopt = empty-word move
  };
  std::size_t states = 0;
  std::size_t initial = 0;
  std::set<std::size_t> finals;
  std::vector<Edge> edges;
};

/// Thompson construction.
Nfa regex_to_nfa(const Regex& r);
bool nfa_accepts(const Nfa& nfa, const Word& w);

/// Walks the witness translates in right-lexicographic order: move to the
/// lowest row, then one inner block per row (x steps with a generator
/// letter before the x at each witness column, then y and back with X),
/// then return to the origin. Generator i is letter g<i>. Throws
/// DuplicateShift if two terms share a shift or a coefficient is not 1.
Word certificate_to_word(const Witness& w);

/// Letters for the subset-sum module inside R wr (Z x Z): g<i> is the
/// embedded generator i, x moves by (rank, 0), y by (0, 1).
Binding rational_binding(const SemimoduleInstance& inst);
/// (embedded target, origin).
WreathElement rational_target(const SemimoduleInstance& inst);

/// Breadth-first search over (set of automaton states, group element)
/// pairs for words of length <= max_len, deduplicating exact pairs.
/// Returns a shortest accepted word evaluating to `target`.
/// Throws UnboundSymbol.
std::optional<Word> rational_member_bounded(const Nfa& nfa, const Binding& binding, const WreathElement& target,
                                            std::size_t max_len);

/// Every element reached by an accepted word of length <= max_len.
std::set<WreathElement> reachable_images(const Nfa& nfa, const Binding& binding, const Ring& ring, std::size_t rank,
                                         std::size_t max_len);

}  // namespace tilesum
