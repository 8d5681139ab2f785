#include "tilesum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <stdexcept>

#include "tilesum/error.hpp"

namespace tilesum {

namespace {

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  Regex parse() {
    Regex r = parse_union();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " at offset " + std::to_string(pos_) + " of regex");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Regex parse_union() {
    std::vector<Regex> parts{parse_concat()};
    while (peek() == '|') {
      ++pos_;
      parts.push_back(parse_concat());
    }
    return parts.size() == 1 ? std::move(parts[0]) : Regex::alt(std::move(parts));
  }

  Regex parse_concat() {
    std::vector<Regex> parts;
    for (char c = peek(); c != '\0' && c != '|' && c != ')'; c = peek()) parts.push_back(parse_repeat());
    if (parts.empty()) return Regex::epsilon();
    return parts.size() == 1 ? std::move(parts[0]) : Regex::concat(std::move(parts));
  }

  Regex parse_repeat() {
    Regex r = parse_atom();
    while (peek() == '*') {
      ++pos_;
      r = Regex::star(std::move(r));
    }
    return r;
  }

  Regex parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Regex r = parse_union();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (c == 'x' || c == 'X' || c == 'y' || c == 'Y') {
      ++pos_;
      return Regex::literal(std::string(1, c));
    }
    if (c == 'g' || c == 'G') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == pos_ + 1) fail("generator letter without an index");
      Regex r = Regex::literal(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      return r;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence: union 0, concat 1, star 2, atoms 3.
int precedence(const Regex& r) {
  switch (r.kind) {
    case Regex::Kind::Union:
      return 0;
    case Regex::Kind::Concat:
      return 1;
    case Regex::Kind::Star:
      return 2;
    default:
      return 3;
  }
}

std::string format_at(const Regex& r, int outer) {
  std::string s;
  switch (r.kind) {
    case Regex::Kind::Epsilon:
      return "()";
    case Regex::Kind::Literal:
      return r.token;
    case Regex::Kind::Star:
      s = format_at(r.children[0], 3) + "*";
      break;
    case Regex::Kind::Concat:
      for (std::size_t i = 0; i < r.children.size(); ++i) s += (i ? " " : "") + format_at(r.children[i], 2);
      break;
    case Regex::Kind::Union:
      for (std::size_t i = 0; i < r.children.size(); ++i) s += (i ? " | " : "") + format_at(r.children[i], 1);
      break;
  }
  return precedence(r) < outer ? "(" + s + ")" : s;
}

struct Fragment {
  std::size_t start, end;
};

class Thompson {
 public:
  Nfa build(const Regex& r) {
    Fragment f = emit(r);
    nfa_.initial = f.start;
    nfa_.finals = {f.end};
    return std::move(nfa_);
  }

 private:
  std::size_t fresh() { return nfa_.states++; }
  void edge(std::size_t a, std::size_t b, std::optional<std::string> label = std::nullopt) {
    nfa_.edges.push_back({a, b, std::move(label)});
  }

  Fragment emit(const Regex& r) {
    switch (r.kind) {
      case Regex::Kind::Epsilon: {
        Fragment f{fresh(), fresh()};
        edge(f.start, f.end);
        return f;
      }
      case Regex::Kind::Literal: {
        Fragment f{fresh(), fresh()};
        edge(f.start, f.end, r.token);
        return f;
      }
      case Regex::Kind::Concat: {
        Fragment first = emit(r.children.front());
        std::size_t end = first.end;
        for (std::size_t i = 1; i < r.children.size(); ++i) {
          Fragment next = emit(r.children[i]);
          edge(end, next.start);
          end = next.end;
        }
        return {first.start, end};
      }
      case Regex::Kind::Union: {
        Fragment f{fresh(), fresh()};
        for (const auto& c : r.children) {
          Fragment part = emit(c);
          edge(f.start, part.start);
          edge(part.end, f.end);
        }
        return f;
      }
      case Regex::Kind::Star: {
        Fragment f{fresh(), fresh()};
        Fragment body = emit(r.children[0]);
        edge(f.start, body.start);
        edge(f.start, f.end);
        edge(body.end, body.start);
        edge(body.end, f.end);
        return f;
      }
    }
    return {0, 0};
  }

  Nfa nfa_;
};

// Subset simulation over sorted state sets closed under empty-word moves.
class Subsets {
 public:
  explicit Subsets(const Nfa& nfa) : nfa_(nfa), empty_(nfa.states), labeled_(nfa.states) {
    for (const auto& e : nfa.edges) {
      if (e.label)
        labeled_[e.from].push_back({*e.label, e.to});
      else
        empty_[e.from].push_back(e.to);
    }
  }

  using Set = std::vector<std::size_t>;

  Set closure(Set seeds) const {
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    std::vector<bool> in(nfa_.states, false);
    Set stack = seeds, out;
    for (std::size_t s : seeds) in[s] = true;
    while (!stack.empty()) {
      const std::size_t s = stack.back();
      stack.pop_back();
      out.push_back(s);
      for (std::size_t t : empty_[s])
        if (!in[t]) {
          in[t] = true;
          stack.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Set start() const { return closure({nfa_.initial}); }

  /// Successor sets per letter, letters in sorted order.
  std::map<std::string, Set> moves(const Set& from) const {
    std::map<std::string, Set> raw;
    for (std::size_t s : from)
      for (const auto& [label, t] : labeled_[s]) raw[label].push_back(t);
    for (auto& [label, seeds] : raw) seeds = closure(std::move(seeds));
    return raw;
  }

  Set step(const Set& from, const std::string& letter) const {
    Set seeds;
    for (std::size_t s : from)
      for (const auto& [label, t] : labeled_[s])
        if (label == letter) seeds.push_back(t);
    return closure(std::move(seeds));
  }

  bool accepting(const Set& s) const {
    return std::any_of(s.begin(), s.end(), [&](std::size_t q) { return nfa_.finals.count(q) > 0; });
  }

 private:
  const Nfa& nfa_;
  std::vector<std::vector<std::size_t>> empty_;
  std::vector<std::vector<std::pair<std::string, std::size_t>>> labeled_;
};

// Visits (state set, element) pairs breadth first. `visit` returns true to
// stop; the node index lets the caller rebuild the word.
struct BfsNode {
  std::size_t set_id;
  WreathElement element;
  std::size_t parent;
  std::string letter;
};

template <typename Visit>
void bfs(const Nfa& nfa, const Binding& binding, const WreathElement& identity, std::size_t max_len,
         std::vector<BfsNode>& nodes, Visit&& visit) {
  for (const auto& e : nfa.edges)
    if (e.label && !binding.count(*e.label) && !binding.count(inverse_token(*e.label)))
      throw Error(Errc::UnboundSymbol, "letter '" + *e.label + "' has no binding");
  const Subsets subsets(nfa);
  std::map<Subsets::Set, std::size_t> ids;
  std::vector<Subsets::Set> sets;
  std::vector<std::map<std::string, std::size_t>> next_ids;
  std::vector<bool> accepting;
  auto intern = [&](const Subsets::Set& s) {
    auto [it, inserted] = ids.emplace(s, sets.size());
    if (inserted) {
      sets.push_back(s);
      accepting.push_back(subsets.accepting(s));
      next_ids.emplace_back();
    }
    return it->second;
  };
  auto successors = [&](std::size_t id) -> const std::map<std::string, std::size_t>& {
    if (next_ids[id].empty() && !sets[id].empty()) {
      std::map<std::string, std::size_t> out;
      for (const auto& [letter, s] : subsets.moves(sets[id]))
        if (!s.empty()) out[letter] = intern(s);
      next_ids[id] = std::move(out);
    }
    return next_ids[id];
  };

  // Element letters are resolved once.
  std::map<std::string, WreathElement> letter_values;
  auto value_of = [&](const std::string& letter) -> const WreathElement& {
    auto it = letter_values.find(letter);
    if (it != letter_values.end()) return it->second;
    WreathElement v = eval_word(binding, {letter}, identity.fun.ring(), identity.fun.rank());
    return letter_values.emplace(letter, std::move(v)).first->second;
  };

  std::set<std::pair<std::size_t, WreathElement>> seen;
  nodes.clear();
  nodes.push_back({intern(subsets.start()), identity, 0, {}});
  seen.insert({nodes[0].set_id, identity});
  std::size_t layer_begin = 0;
  for (std::size_t len = 0;; ++len) {
    const std::size_t layer_end = nodes.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      if (accepting[nodes[i].set_id] && visit(i)) return;
    if (len == max_len || layer_begin == layer_end) return;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& [letter, next] : successors(nodes[i].set_id)) {
        WreathElement g = wreath_mul(nodes[i].element, value_of(letter));
        if (!seen.insert({next, g}).second) continue;
        nodes.push_back({next, std::move(g), i, letter});
      }
    }
    layer_begin = layer_end;
  }
}

}  // namespace

Regex parse_regex(std::string_view text) { return RegexParser(text).parse(); }

std::string format_regex(const Regex& r) { return format_at(r, 0); }

Regex build_L(std::size_t k) {
  auto lit = [](const char* t) { return Regex::literal(t); };
  auto free_moves = [&] { return Regex::star(Regex::alt({lit("x"), lit("X"), lit("y"), lit("Y")})); };
  std::vector<Regex> steps{lit("x")};
  for (std::size_t i = 0; i < k; ++i) steps.push_back(Regex::concat({Regex::literal("g" + std::to_string(i)), lit("x")}));
  Regex inner = Regex::concat({Regex::star(Regex::alt(std::move(steps))), lit("y"), Regex::star(lit("X"))});
  return Regex::concat({free_moves(), Regex::star(std::move(inner)), free_moves()});
}

Nfa regex_to_nfa(const Regex& r) { return Thompson().build(r); }

bool nfa_accepts(const Nfa& nfa, const Word& w) {
  const Subsets subsets(nfa);
  Subsets::Set current = subsets.start();
  for (const auto& letter : w) {
    current = subsets.step(current, letter);
    if (current.empty()) return false;
  }
  return subsets.accepting(current);
}

Word certificate_to_word(const Witness& w) {
  if (w.empty()) return {};
  std::map<Point, std::size_t> at;  // right-lex order
  for (const auto& t : w) {
    if (t.coeff != 1) throw Error(Errc::DuplicateShift, "subset-sum terms have coefficient 1");
    if (!at.emplace(t.shift, t.generator).second)
      throw Error(Errc::DuplicateShift,
                  "shift (" + std::to_string(t.shift.x) + "," + std::to_string(t.shift.y) + ") used twice");
  }
  std::int64_t x0 = at.begin()->first.x;
  for (const auto& [p, g] : at) x0 = std::min(x0, p.x);
  const std::int64_t y0 = at.begin()->first.y, y1 = at.rbegin()->first.y;

  Word out = power("x", x0);
  append(out, power("y", y0));
  for (std::int64_t row = y0; row <= y1; ++row) {
    auto first = at.lower_bound({x0, row});
    auto last = at.lower_bound({x0, row + 1});
    std::int64_t steps = 0;
    if (first != last) {
      const std::int64_t x1 = std::prev(last)->first.x;
      for (std::int64_t x = x0; x <= x1; ++x) {
        if (auto it = at.find({x, row}); it != at.end()) out.push_back("g" + std::to_string(it->second));
        out.push_back("x");
      }
      steps = x1 - x0 + 1;
    }
    out.push_back("y");
    append(out, power("X", steps));
  }
  append(out, power("y", -(y1 + 1)));
  append(out, power("x", -x0));
  return out;
}

Binding rational_binding(const SemimoduleInstance& inst) {
  Binding b = shift_binding(inst.ring, 1);
  b["x"] = wreath_shift(inst.ring, 1, {static_cast<std::int64_t>(inst.rank), 0});
  for (std::size_t i = 0; i < inst.generators.size(); ++i)
    b["g" + std::to_string(i)] = embed_module(inst.generators[i], inst.rank);
  return b;
}

WreathElement rational_target(const SemimoduleInstance& inst) { return embed_module(inst.target, inst.rank); }

std::optional<Word> rational_member_bounded(const Nfa& nfa, const Binding& binding, const WreathElement& target,
                                            std::size_t max_len) {
  std::vector<BfsNode> nodes;
  std::optional<Word> found;
  bfs(nfa, binding, wreath_id(target.fun.ring(), target.fun.rank()), max_len, nodes, [&](std::size_t i) {
    if (!(nodes[i].element == target)) return false;
    Word w;
    for (std::size_t j = i; j != 0; j = nodes[j].parent) w.push_back(nodes[j].letter);
    std::reverse(w.begin(), w.end());
    found = std::move(w);
    return true;
  });
  if (found && !(nfa_accepts(nfa, *found) &&
                 eval_word(binding, *found, target.fun.ring(), target.fun.rank()) == target))
    throw std::logic_error("rational search returned an unverified word");
  return found;
}

std::set<WreathElement> reachable_images(const Nfa& nfa, const Binding& binding, const Ring& ring, std::size_t rank,
                                         std::size_t max_len) {
  std::vector<BfsNode> nodes;
  std::set<WreathElement> out;
  bfs(nfa, binding, wreath_id(ring, rank), max_len, nodes, [&](std::size_t i) {
    out.insert(nodes[i].element);
    return false;
  });
  return out;
}

}  // namespace tilesum
