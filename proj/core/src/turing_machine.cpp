#include "tilesum/turing_machine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tilesum/error.hpp"

namespace tilesum {

std::optional<StateId> TuringMachine::find_state(std::string_view name) const {
  for (StateId q = 0; q < states.size(); ++q)
    if (states[q] == name) return q;
  return std::nullopt;
}

std::optional<SymbolId> TuringMachine::find_symbol(std::string_view name) const {
  for (SymbolId a = 0; a < symbols.size(); ++a)
    if (symbols[a] == name) return a;
  return std::nullopt;
}

const Transition* TuringMachine::find(StateId q, SymbolId a) const {
  auto it = transitions.find({q, a});
  return it == transitions.end() ? nullptr : &it->second;
}

bool TuringMachine::is_input_symbol(SymbolId a) const {
  return std::find(input_alphabet.begin(), input_alphabet.end(), a) != input_alphabet.end();
}

StateId TuringMachine::add_state(std::string name) {
  states.push_back(std::move(name));
  return static_cast<StateId>(states.size() - 1);
}

SymbolId TuringMachine::add_symbol(std::string name) {
  symbols.push_back(std::move(name));
  return static_cast<SymbolId>(symbols.size() - 1);
}

namespace {

std::string pair_name(const TuringMachine& tm, StateId q, SymbolId a) {
  std::string qs = q < tm.states.size() ? tm.states[q] : "#" + std::to_string(q);
  std::string as = a < tm.symbols.size() ? tm.symbols[a] : "#" + std::to_string(a);
  return "(" + qs + ", " + as + ")";
}

void check_names(const std::vector<std::string>& names, const char* what,
                 std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) out.push_back(std::string("empty ") + what + " name");
    if (n.find(',') != std::string::npos)
      out.push_back(std::string(what) + " name contains ',': " + n);
    if (!seen.insert(n).second) out.push_back(std::string("duplicate ") + what + " name: " + n);
  }
}

}  // namespace

std::vector<std::string> validate(const TuringMachine& tm) {
  std::vector<std::string> out;
  check_names(tm.states, "state", out);
  check_names(tm.symbols, "symbol", out);

  const bool blank_ok = tm.blank < tm.symbols.size();
  if (!blank_ok) out.push_back("blank symbol is not in the tape alphabet");
  for (SymbolId a : tm.input_alphabet) {
    if (a >= tm.symbols.size())
      out.push_back("input symbol #" + std::to_string(a) + " is not in the tape alphabet");
    else if (blank_ok && a == tm.blank)
      out.push_back("blank symbol " + tm.symbols[a] + " is in the input alphabet");
  }
  if (tm.initial >= tm.states.size()) out.push_back("initial state is not a state");
  if (tm.accepting >= tm.states.size()) out.push_back("accepting state is not a state");

  for (const auto& [key, t] : tm.transitions) {
    const auto [q, a] = key;
    if (q >= tm.states.size() || a >= tm.symbols.size() || t.next >= tm.states.size() ||
        t.write >= tm.symbols.size()) {
      out.push_back("transition " + pair_name(tm, q, a) + " references unknown ids");
      continue;
    }
    if (q == tm.accepting)
      out.push_back("transition defined for accepting state " + pair_name(tm, q, a));
  }
  for (StateId q = 0; q < tm.states.size(); ++q) {
    if (q == tm.accepting) continue;
    for (SymbolId a = 0; a < tm.symbols.size(); ++a)
      if (!tm.find(q, a)) out.push_back("missing transition " + pair_name(tm, q, a));
  }
  return out;
}

Configuration initial_configuration(const TuringMachine& tm, std::span<const SymbolId> input) {
  Configuration c;
  c.state = tm.initial;
  c.tape.assign(input.begin(), input.end());
  if (c.tape.empty()) c.tape.push_back(tm.blank);
  c.head = 0;
  return c;
}

namespace {

// Applies one transition in place. The caller has checked that one exists.
void advance(const TuringMachine& tm, Configuration& c, const Transition& t, SymbolId read) {
  const StateId from = c.state;
  if (c.head >= c.tape.size()) c.tape.resize(c.head + 1, tm.blank);
  c.tape[c.head] = t.write;
  c.state = t.next;
  if (t.move == Move::Left) {
    if (c.head == 0) throw Error(Errc::LeftEdgeViolation, "left move at cell 0 by " + pair_name(tm, from, read));
    --c.head;
  } else {
    ++c.head;
    if (c.head == c.tape.size()) c.tape.push_back(tm.blank);
  }
}

}  // namespace

StepResult step(const TuringMachine& tm, const Configuration& c) {
  if (c.state == tm.accepting) return Halted{};
  const SymbolId read = c.head < c.tape.size() ? c.tape[c.head] : tm.blank;
  const Transition* t = tm.find(c.state, read);
  if (!t) throw Error(Errc::UndefinedTransition, "no transition for " + pair_name(tm, c.state, read));
  Configuration next = c;
  advance(tm, next, *t, read);
  return next;
}

RunResult run(const TuringMachine& tm, std::span<const SymbolId> input, std::size_t fuel) {
  // Simulate in place first; the full trace is only kept for accepting
  // runs, which are replayed once the step count is known.
  Configuration cur = initial_configuration(tm, input);
  std::size_t steps = 0;
  while (cur.state != tm.accepting) {
    const SymbolId read = cur.head < cur.tape.size() ? cur.tape[cur.head] : tm.blank;
    const Transition* t = tm.find(cur.state, read);
    if (!t) return Rejected{std::move(cur)};
    if (steps == fuel) return OutOfFuel{fuel};
    advance(tm, cur, *t, read);
    ++steps;
  }

  RunTrace trace;
  trace.configs.reserve(steps + 1);
  trace.configs.push_back(initial_configuration(tm, input));
  trace.space = 1;
  for (std::size_t i = 0; i < steps; ++i) {
    auto next = std::get<Configuration>(step(tm, trace.configs.back()));
    trace.space = std::max(trace.space, next.head + 1);
    trace.configs.push_back(std::move(next));
  }
  trace.steps = steps;
  return Accepted{std::move(trace)};
}

std::vector<SymbolId> parse_input(const TuringMachine& tm, std::string_view text) {
  std::vector<std::string> names;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      auto pos = text.find(',', start);
      names.emplace_back(text.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    for (char ch : text) names.emplace_back(1, ch);
  }
  std::vector<SymbolId> word;
  for (const auto& n : names) {
    auto a = tm.find_symbol(n);
    if (!a || !tm.is_input_symbol(*a)) throw Error(Errc::Parse, "'" + n + "' is not an input symbol");
    word.push_back(*a);
  }
  return word;
}

std::size_t cells_used(const TuringMachine& tm, const Configuration& c) {
  std::size_t used = c.head + 1;
  for (std::size_t i = c.tape.size(); i > used; --i) {
    if (c.tape[i - 1] != tm.blank) {
      used = i;
      break;
    }
  }
  return used;
}

std::vector<ConfigLetter> config_word(const TuringMachine& tm, const Configuration& c, std::size_t m) {
  const std::size_t used = cells_used(tm, c);
  if (m < 2 || used > m - 1)
    throw Error(Errc::DoesNotFit, "configuration needs " + std::to_string(used) +
                                      " cells but m=" + std::to_string(m) + " leaves " +
                                      std::to_string(m < 1 ? 0 : m - 1));
  std::vector<ConfigLetter> word;
  word.reserve(m + 1);
  word.push_back({ConfigLetter::Kind::Begin, 0, 0});
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const SymbolId a = i < c.tape.size() ? c.tape[i] : tm.blank;
    if (i == c.head)
      word.push_back({ConfigLetter::Kind::Head, c.state, a});
    else
      word.push_back({ConfigLetter::Kind::Symbol, 0, a});
  }
  word.push_back({ConfigLetter::Kind::End, 0, 0});
  return word;
}

Configuration parse_config_word(std::span<const ConfigLetter> word) {
  if (word.size() < 3 || word.front().kind != ConfigLetter::Kind::Begin ||
      word.back().kind != ConfigLetter::Kind::End)
    throw Error(Errc::MalformedInput, "configuration word must be delimited by begin/end markers");
  Configuration c;
  bool have_head = false;
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    const auto& l = word[i];
    switch (l.kind) {
      case ConfigLetter::Kind::Head:
        if (have_head) throw Error(Errc::MalformedInput, "configuration word has two heads");
        have_head = true;
        c.state = l.state;
        c.head = i - 1;
        c.tape.push_back(l.symbol);
        break;
      case ConfigLetter::Kind::Symbol:
        c.tape.push_back(l.symbol);
        break;
      default:
        throw Error(Errc::MalformedInput, "tape marker inside configuration word");
    }
  }
  if (!have_head) throw Error(Errc::MalformedInput, "configuration word has no head");
  return c;
}

std::string format_configuration(const TuringMachine& tm, const Configuration& c) {
  std::ostringstream os;
  os << tm.states[c.state] << ":";
  for (std::size_t i = 0; i < std::max(c.tape.size(), c.head + 1); ++i) {
    const SymbolId a = i < c.tape.size() ? c.tape[i] : tm.blank;
    if (i == c.head)
      os << " [" << tm.symbols[a] << "]";
    else
      os << " " << tm.symbols[a];
  }
  return os.str();
}

}  // namespace tilesum
