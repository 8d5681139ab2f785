#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tilesum/certificate.hpp"
#include "tilesum/edge_map.hpp"
#include "tilesum/rational.hpp"
#include "tilesum/semimodule.hpp"
#include "tilesum/submonoid.hpp"
#include "tilesum/tiles.hpp"
#include "tilesum/turing_machine.hpp"

// JSON reading and writing. Writers emit sorted keys, canonical entry order
// and a trailing newline, so equal values give byte-equal files. Readers
// throw Parse for invalid JSON and MalformedInput for a wrong layout.
namespace tilesum::io {

TuringMachine read_machine(std::string_view json);
std::string write_machine(const TuringMachine& tm);

TilingSystem read_tiling_system(std::string_view json);
std::string write_tiling_system(const TilingSystem& ts);

EdgeMap read_edge_map(std::string_view json);
std::string write_edge_map(const EdgeMap& f);

/// Placements name a tile ("b3") or give it inline; named tiles are
/// resolved against `ts`, inline ones are taken as written.
Certificate read_certificate(std::string_view json, const TilingSystem& ts);
/// Without a tiling system, named tiles keep only their name (all sides c0);
/// enough for drawing, not for verification.
Certificate read_certificate(std::string_view json);
std::string write_certificate(const Certificate& cert);

enum class InstanceMode { Semimodule, SubsetSum };

struct InstanceFile {
  SemimoduleInstance instance;
  InstanceMode mode = InstanceMode::Semimodule;
};

InstanceFile read_instance(std::string_view json);
std::string write_instance(const SemimoduleInstance& inst, InstanceMode mode);

Witness read_witness(std::string_view json);
std::string write_witness(const Witness& w);

SubmonoidInstance read_submonoid(std::string_view json);
std::string write_submonoid(const SubmonoidInstance& inst);

std::vector<std::size_t> read_submonoid_certificate(std::string_view json);
std::string write_submonoid_certificate(const std::vector<std::size_t>& cert);

/// Subset-sum module data together with the regular expression whose
/// image is searched.
struct RationalInstance {
  SemimoduleInstance instance;
  Regex expr;
};

RationalInstance read_rational(std::string_view json);
std::string write_rational(const RationalInstance& r);

std::string write_nfa(const Nfa& nfa);

}  // namespace tilesum::io
