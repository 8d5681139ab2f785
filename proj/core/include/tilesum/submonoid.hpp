#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tilesum/metabelian.hpp"
#include "tilesum/semimodule.hpp"
#include "tilesum/word.hpp"
#include "tilesum/wreath.hpp"

namespace tilesum {

enum class SubmonoidFlavor : std::uint8_t { Wreath, FreeMetabelian };

const char* to_string(SubmonoidFlavor f);
SubmonoidFlavor parse_flavor(std::string_view text);

/// Does the target word lie in the submonoid generated by the generator
/// words? The first `module_generators` words encode the module
/// generators; the last four are x^m, x^-m, y, y^-1.
///
/// Wreath: words over x, y and g0 in Z wr (Z x Z), with g0 the unit at the
/// origin; module coordinates sit at lattice points (m*a + idx, b).
/// FreeMetabelian: words over x, y only; coordinate idx at (a,b) is the
/// commutator cycle moved to (m*a + idx, b).
struct SubmonoidInstance {
  SubmonoidFlavor flavor = SubmonoidFlavor::Wreath;
  std::int64_t m = 1;
  std::size_t module_generators = 0;
  std::vector<Word> generators;
  Word target;
};

/// Throws RingMismatch unless the instance is over Z, RankMismatch on an
/// inconsistent instance.
SubmonoidInstance make_submonoid_instance(const SemimoduleInstance& inst, SubmonoidFlavor flavor);

/// Module element as a word evaluating to (element, origin).
Word module_word(const ModuleElement& e, SubmonoidFlavor flavor);

/// Generator index sequence spelling the witness: for each term, shift
/// letters, the generator `coeff` times, then the inverse shift.
std::vector<std::size_t> witness_to_certificate(const SubmonoidInstance& inst, const Witness& w);

/// Multiplies the chosen generator words in the instance's group and
/// compares with the target. Throws BadIndex.
bool verify_submonoid_certificate(const SubmonoidInstance& inst, const std::vector<std::size_t>& certificate);

/// The certificate's generator words concatenated.
Word certificate_word(const SubmonoidInstance& inst, const std::vector<std::size_t>& certificate);

/// Equality of two words in the instance's group.
bool same_element(SubmonoidFlavor flavor, const Word& a, const Word& b);

}  // namespace tilesum
