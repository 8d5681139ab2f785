#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tilesum/certificate.hpp"
#include "tilesum/module_element.hpp"
#include "tilesum/tiles.hpp"

namespace tilesum {

/// Generators F and a target x in a free R[Z x Z]-module. The question is
/// whether x is a non-negative combination of translates of F (or, for
/// subset sums, a sum of pairwise distinct translates).
struct SemimoduleInstance {
  Ring ring;
  std::size_t rank = 0;
  std::vector<ModuleElement> generators;
  ModuleElement target;

  /// Messages for generators or target with the wrong ring or rank, and
  /// zero generators when `nonzero_generators` is set.
  std::vector<std::string> check(bool nonzero_generators = false) const;
};

struct WitnessTerm {
  Point shift;
  std::size_t generator = 0;
  Integer coeff = 1;

  friend bool operator==(const WitnessTerm&, const WitnessTerm&) = default;
};

/// Terms sorted by (shift, generator), with positive coefficients.
using Witness = std::vector<WitnessTerm>;

/// Sum of coeff * (shift . generator) over the terms.
ModuleElement combine(const SemimoduleInstance& inst, const Witness& w);
bool verify_witness(const SemimoduleInstance& inst, const Witness& w);

/// Colors of `ts` in canonical order; the module coordinates of a tiling.
std::vector<Color> color_index(const TilingSystem& ts);

/// One generator per tile (its evaluation) and target -f0.
SemimoduleInstance tiling_to_instance(const TilingSystem& ts, const EdgeMap& f0);

/// Placements grouped into witness terms, generator = tile index in `ts`.
/// Throws UnknownTile.
Witness certificate_to_witness(const TilingSystem& ts, const Certificate& cert);

/// Box [0,m] x [0,rows] that holds every placement of the certificate.
Window certificate_window(const Certificate& cert);

struct SearchLimits {
  /// Largest number of search nodes before giving up (0 = no limit).
  std::size_t max_nodes = 0;
};

/// Bounded search for target = sum of c * (shift . generator) with shifts
/// in `window` and 1 <= c <= max_coeff per (shift, generator). Branches
/// on the residual entry with the fewest remaining ways to change it.
/// nullopt means no combination exists inside the bounds.
std::optional<Witness> member_bounded(const SemimoduleInstance& inst, const Window& window, std::int64_t max_coeff,
                                      SearchLimits limits = {});

/// Like member_bounded with coefficient 1, but every shift in the window
/// is used by at most one term. Throws RingMismatch over Z.
std::optional<Witness> subset_sum_bounded(const SemimoduleInstance& inst, const Window& window,
                                          SearchLimits limits = {});

}  // namespace tilesum
