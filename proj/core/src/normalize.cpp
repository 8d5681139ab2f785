#include <set>
#include <string>
#include <vector>

#include "tilesum/error.hpp"
#include "tilesum/turing_machine.hpp"

namespace tilesum {

namespace {

// States introduced by normalize carry this prefix; is_normal_form keys on
// the name of the final erase state.
constexpr const char* kHomeState = "%home";

std::string fresh(const std::vector<std::string>& taken, std::string base) {
  std::set<std::string> names(taken.begin(), taken.end());
  while (names.count(base)) base += "'";
  return base;
}

bool total_off_accepting(const TuringMachine& tm) {
  for (StateId q = 0; q < tm.states.size(); ++q) {
    if (q == tm.accepting) continue;
    for (SymbolId a = 0; a < tm.symbols.size(); ++a)
      if (!tm.find(q, a)) return false;
  }
  return true;
}

}  // namespace

bool is_normal_form(const TuringMachine& tm) {
  if (!total_off_accepting(tm)) return false;
  if (tm.initial == tm.accepting) return false;
  for (const auto& [key, t] : tm.transitions) {
    if (t.next != tm.accepting) continue;
    if (tm.states[key.first] != kHomeState) return false;
  }
  return true;
}

// Construction:
//  * every cell-0 symbol is replaced by a marked copy on the first step, so
//    the erase sweep can find the left end;
//  * blanks written by the machine become a "visited blank", so the first
//    true blank to the right bounds the used region;
//  * missing transitions of non-accepting states divert into a two-state
//    loop that walks right forever;
//  * entering the accepting state diverts into seek (right to the first
//    true blank), erase (left, blanking every cell up to the marked one),
//    home (one step right and back), then accept on cell 0.
TuringMachine normalize(const TuringMachine& tm) {
  if (auto v = validate(tm); !v.empty()) {
    // Only totality may be missing; everything else must already hold.
    for (const auto& msg : v)
      if (msg.rfind("missing transition", 0) != 0) throw Error(Errc::InvalidMachine, msg);
  }
  if (is_normal_form(tm)) return tm;

  TuringMachine out;
  out.states = tm.states;
  out.symbols = tm.symbols;
  out.input_alphabet = tm.input_alphabet;
  out.blank = tm.blank;
  out.accepting = tm.accepting;

  const std::size_t base_symbols = tm.symbols.size();
  std::vector<SymbolId> marked_of(base_symbols);
  for (SymbolId a = 0; a < base_symbols; ++a)
    marked_of[a] = out.add_symbol(fresh(out.symbols, tm.symbols[a] + "^"));
  const SymbolId visited_blank = out.add_symbol(fresh(out.symbols, tm.symbols[tm.blank] + "~"));

  auto original = [&](SymbolId s) -> SymbolId {
    if (s < base_symbols) return s;
    if (s == visited_blank) return tm.blank;
    return static_cast<SymbolId>(s - base_symbols);
  };
  auto is_marked = [&](SymbolId s) { return s >= base_symbols && s != visited_blank; };
  auto encode = [&](SymbolId b, bool marked) -> SymbolId {
    if (marked) return marked_of[b];
    return b == tm.blank ? visited_blank : b;
  };

  const StateId start = out.add_state(fresh(out.states, "%start"));
  const StateId seek = out.add_state(fresh(out.states, "%seek"));
  const StateId erase = out.add_state(fresh(out.states, "%erase"));
  const StateId home = out.add_state(fresh(out.states, kHomeState));
  const StateId loop0 = out.add_state(fresh(out.states, "%loop0"));
  const StateId loop1 = out.add_state(fresh(out.states, "%loop1"));
  out.initial = start;

  auto redirect = [&](StateId p) { return p == tm.accepting ? seek : p; };
  const auto all_symbols = static_cast<SymbolId>(out.symbols.size());

  for (SymbolId s = 0; s < all_symbols; ++s) {
    const SymbolId a = original(s);
    if (tm.initial == tm.accepting) {
      out.set(start, s, {seek, marked_of[a], Move::Right});
    } else if (const Transition* t = tm.find(tm.initial, a)) {
      out.set(start, s, {redirect(t->next), marked_of[t->write], t->move});
    } else {
      out.set(start, s, {loop0, marked_of[a], Move::Right});
    }
  }

  for (StateId q = 0; q < tm.states.size(); ++q) {
    if (q == tm.accepting) continue;
    for (SymbolId s = 0; s < all_symbols; ++s) {
      if (const Transition* t = tm.find(q, original(s)))
        out.set(q, s, {redirect(t->next), encode(t->write, is_marked(s)), t->move});
      else
        out.set(q, s, {loop0, s, Move::Right});
    }
  }

  for (SymbolId s = 0; s < all_symbols; ++s) {
    if (s == tm.blank)
      out.set(seek, s, {erase, tm.blank, Move::Left});
    else
      out.set(seek, s, {seek, s, Move::Right});

    if (is_marked(s))
      out.set(erase, s, {home, tm.blank, Move::Right});
    else
      out.set(erase, s, {erase, tm.blank, Move::Left});

    out.set(home, s, {tm.accepting, tm.blank, Move::Left});
    out.set(loop0, s, {loop1, s, Move::Right});
    out.set(loop1, s, {loop0, s, Move::Right});
  }
  return out;
}

}  // namespace tilesum
