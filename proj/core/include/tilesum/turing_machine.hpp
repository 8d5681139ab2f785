#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tilesum {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

enum class Move : std::uint8_t { Left, Right };

struct Transition {
  StateId next = 0;
  SymbolId write = 0;
  Move move = Move::Right;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic single-tape machine with a left-bounded tape.
///
/// States and symbols are interned: ids index into the name tables.
/// The accepting state has no outgoing transitions.
struct TuringMachine {
  std::vector<std::string> states;
  std::vector<std::string> symbols;  // tape alphabet
  std::vector<SymbolId> input_alphabet;
  SymbolId blank = 0;
  StateId initial = 0;
  StateId accepting = 0;
  std::map<std::pair<StateId, SymbolId>, Transition> transitions;

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  const Transition* find(StateId q, SymbolId a) const;
  bool is_input_symbol(SymbolId a) const;

  StateId add_state(std::string name);
  SymbolId add_symbol(std::string name);
  void set(StateId q, SymbolId a, Transition t) { transitions[{q, a}] = t; }
};

/// Cells beyond the stored tape are implicitly blank.
struct Configuration {
  StateId state = 0;
  std::vector<SymbolId> tape;
  std::size_t head = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct RunTrace {
  std::vector<Configuration> configs;
  std::size_t space = 0;  // max head index + 1
  std::size_t steps = 0;
};

struct Halted {};

struct Accepted {
  RunTrace trace;
};
/// The machine stopped in a non-accepting state (only possible before
/// normalization).
struct Rejected {
  Configuration last;
};
struct OutOfFuel {
  std::size_t steps = 0;
};

using StepResult = std::variant<Configuration, Halted>;
using RunResult = std::variant<Accepted, Rejected, OutOfFuel>;

/// Every violated structural invariant, one message per offending item.
std::vector<std::string> validate(const TuringMachine& tm);

Configuration initial_configuration(const TuringMachine& tm, std::span<const SymbolId> input);

/// One transition. Throws LeftEdgeViolation on a left move at cell 0 and
/// UndefinedTransition when a non-accepting state has no move.
StepResult step(const TuringMachine& tm, const Configuration& c);

/// Runs for at most `fuel` transitions. Throws LeftEdgeViolation.
RunResult run(const TuringMachine& tm, std::span<const SymbolId> input, std::size_t fuel);

/// Rewrites `tm` so that it halts only in the accepting state and accepts
/// with an all-blank tape and the head on cell 0. Left-edge safety is not
/// compiled in; it remains a runtime check.
///
/// Machines already in the produced form (total off the accepting state,
/// and accepting only through the erase phase or never) are returned
/// unchanged.
TuringMachine normalize(const TuringMachine& tm);

/// True for machines `normalize` leaves untouched.
bool is_normal_form(const TuringMachine& tm);

/// Splits an input string into symbols: comma-separated names when the
/// text contains a comma, one character per symbol otherwise. Every symbol
/// must be in the input alphabet.
std::vector<SymbolId> parse_input(const TuringMachine& tm, std::string_view text);

/// Letters of a configuration word: the tape-end markers, plain tape
/// symbols, and the head cell (state, symbol).
struct ConfigLetter {
  enum class Kind : std::uint8_t { Begin, End, Symbol, Head };
  Kind kind = Kind::Symbol;
  StateId state = 0;
  SymbolId symbol = 0;

  friend bool operator==(const ConfigLetter&, const ConfigLetter&) = default;
};

/// Encodes `c` as a word of length m+1 over m-1 blank-padded tape cells.
/// Throws DoesNotFit if the configuration needs m or more cells.
std::vector<ConfigLetter> config_word(const TuringMachine& tm, const Configuration& c, std::size_t m);

/// Inverse of config_word; the tape keeps all m-1 cells.
Configuration parse_config_word(std::span<const ConfigLetter> word);

/// Number of cells a configuration occupies: head cell plus the non-blank
/// prefix.
std::size_t cells_used(const TuringMachine& tm, const Configuration& c);

std::string format_configuration(const TuringMachine& tm, const Configuration& c);

}  // namespace tilesum
