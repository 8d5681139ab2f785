#pragma once

#include <stdexcept>
#include <string>

namespace tilesum {

enum class Errc {
  InvalidMachine,
  LeftEdgeViolation,
  UndefinedTransition,
  DoesNotFit,
  EmptyInput,
  RingMismatch,
  UnknownTile,
  UnknownColor,
  RankMismatch,
  MalformedInput,
  RankExceedsIndex,
  UnboundSymbol,
  NotACycle,
  DuplicateShift,
  BadIndex,
  Parse,
};

const char* to_string(Errc code) noexcept;

// Single exception type for the library; the code distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tilesum
