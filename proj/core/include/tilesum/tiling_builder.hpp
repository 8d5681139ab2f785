#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "tilesum/certificate.hpp"
#include "tilesum/turing_machine.hpp"

namespace tilesum {

/// Width m used for an accepting trace: every configuration fits in m-1
/// cells and the head never stands on the last one before a right move.
std::int64_t tiling_width(const RunTrace& trace, std::size_t input_length);

/// Runs the machine and lays out the accepting computation as tiles: the
/// bottom boundary row, one row per transition, and the cap row. Returns
/// nullopt when the machine does not accept within `fuel` steps.
///
/// Throws InvalidMachine when the accepting configuration is not blank
/// with the head on cell 0 (the machine is not normalized).
std::optional<Certificate> build_accepting_tiling(const TuringMachine& tm, std::span<const SymbolId> input,
                                                  std::size_t fuel);

}  // namespace tilesum
