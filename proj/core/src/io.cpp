#include "tilesum/io.hpp"

#include <limits>
#include <set>

#include <nlohmann/json.hpp>

#include "tilesum/error.hpp"

namespace tilesum::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::MalformedInput, why); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

void only_fields(const json& obj, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) malformed(std::string("unknown field '") + k + "' in " + what);
  }
}

std::string get_string(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t get_int(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::size_t get_index(const json& obj, const char* key) {
  const std::int64_t v = get_int(obj, key);
  if (v < 0) malformed(std::string("field '") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

const json& get_array(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return v;
}

// Values that fit in 64 bits are numbers, larger ones decimal strings.
json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  malformed(std::string("field '") + key + "' must be an integer");
}

Color color_from(const json& v) {
  if (!v.is_string()) malformed("colors are strings");
  return Color::parse(v.get<std::string>());
}

json tile_json(const Tile& t) {
  json j{{"n", t.north.to_string()}, {"e", t.east.to_string()}, {"s", t.south.to_string()}, {"w", t.west.to_string()}};
  if (t.name) j["name"] = *t.name;
  return j;
}

Tile tile_from(const json& j) {
  only_fields(j, {"n", "e", "s", "w", "name"}, "tile");
  Tile t{color_from(field(j, "n")), color_from(field(j, "e")), color_from(field(j, "s")), color_from(field(j, "w")),
         std::nullopt};
  if (j.contains("name")) t.name = get_string(j, "name");
  return t;
}

json module_json(const ModuleElement& e) {
  json entries = json::array();
  for (const auto& [k, v] : e.entries())
    entries.push_back({{"x", k.pos.x}, {"y", k.pos.y}, {"idx", k.idx}, {"value", integer_json(v)}});
  return json{{"entries", entries}};
}

ModuleElement module_from(const json& j, const Ring& ring, std::size_t rank) {
  only_fields(j, {"entries"}, "module element");
  ModuleElement e(ring, rank);
  std::set<ModuleKey> keys;
  for (const auto& entry : get_array(j, "entries")) {
    only_fields(entry, {"x", "y", "idx", "value"}, "module entry");
    const ModuleKey k{{get_int(entry, "x"), get_int(entry, "y")}, get_index(entry, "idx")};
    if (k.idx >= rank) malformed("module entry index " + std::to_string(k.idx) + " >= rank " + std::to_string(rank));
    if (!keys.insert(k).second) malformed("repeated module entry");
    e.accumulate(k, integer_from(entry, "value"));
  }
  return e;
}

Ring ring_from(const json& j) {
  const std::string text = get_string(j, "ring");
  try {
    return Ring::parse(text);
  } catch (const Error& e) {
    malformed(e.what());
  }
}

json instance_body(const SemimoduleInstance& inst) {
  json gens = json::array();
  for (const auto& g : inst.generators) gens.push_back(module_json(g));
  return json{{"ring", inst.ring.to_string()},
              {"rank", inst.rank},
              {"generators", gens},
              {"target", module_json(inst.target)}};
}

SemimoduleInstance instance_from(const json& j) {
  SemimoduleInstance inst;
  inst.ring = ring_from(j);
  inst.rank = get_index(j, "rank");
  for (const auto& g : get_array(j, "generators")) inst.generators.push_back(module_from(g, inst.ring, inst.rank));
  inst.target = module_from(field(j, "target"), inst.ring, inst.rank);
  return inst;
}

Word word_from(const json& v) {
  if (!v.is_string()) malformed("words are strings");
  return parse_word(v.get<std::string>());
}

}  // namespace

TuringMachine read_machine(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"states", "tape_alphabet", "input_alphabet", "blank", "initial", "accepting", "transitions"},
              "machine");
  TuringMachine tm;
  for (const auto& s : get_array(j, "states")) {
    if (!s.is_string()) malformed("state names are strings");
    tm.add_state(s.get<std::string>());
  }
  for (const auto& s : get_array(j, "tape_alphabet")) {
    if (!s.is_string()) malformed("symbol names are strings");
    tm.add_symbol(s.get<std::string>());
  }
  auto state = [&](const std::string& name) {
    auto q = tm.find_state(name);
    if (!q) malformed("unknown state '" + name + "'");
    return *q;
  };
  auto symbol = [&](const std::string& name) {
    auto a = tm.find_symbol(name);
    if (!a) malformed("unknown symbol '" + name + "'");
    return *a;
  };
  for (const auto& s : get_array(j, "input_alphabet")) {
    if (!s.is_string()) malformed("symbol names are strings");
    tm.input_alphabet.push_back(symbol(s.get<std::string>()));
  }
  tm.blank = symbol(get_string(j, "blank"));
  tm.initial = state(get_string(j, "initial"));
  tm.accepting = state(get_string(j, "accepting"));
  for (const auto& t : get_array(j, "transitions")) {
    only_fields(t, {"from", "read", "to", "write", "move"}, "transition");
    const StateId q = state(get_string(t, "from"));
    const SymbolId a = symbol(get_string(t, "read"));
    const std::string move = get_string(t, "move");
    if (move != "L" && move != "R") malformed("move must be \"L\" or \"R\"");
    if (tm.find(q, a)) malformed("two transitions for (" + tm.states[q] + ", " + tm.symbols[a] + ")");
    tm.set(q, a, {state(get_string(t, "to")), symbol(get_string(t, "write")), move == "L" ? Move::Left : Move::Right});
  }
  return tm;
}

std::string write_machine(const TuringMachine& tm) {
  json inputs = json::array();
  for (SymbolId a : tm.input_alphabet) inputs.push_back(tm.symbols.at(a));
  json transitions = json::array();
  for (const auto& [key, t] : tm.transitions) {
    transitions.push_back({{"from", tm.states.at(key.first)},
                           {"read", tm.symbols.at(key.second)},
                           {"to", tm.states.at(t.next)},
                           {"write", tm.symbols.at(t.write)},
                           {"move", t.move == Move::Left ? "L" : "R"}});
  }
  return dump({{"states", tm.states},
               {"tape_alphabet", tm.symbols},
               {"input_alphabet", inputs},
               {"blank", tm.symbols.at(tm.blank)},
               {"initial", tm.states.at(tm.initial)},
               {"accepting", tm.states.at(tm.accepting)},
               {"transitions", transitions}});
}

TilingSystem read_tiling_system(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"colors", "distinguished", "tiles"}, "tiling system");
  TilingSystem ts;
  for (const auto& c : get_array(j, "colors")) ts.colors.insert(color_from(c));
  ts.distinguished = color_from(field(j, "distinguished"));
  if (!ts.distinguished.is_blank0()) malformed("the distinguished color must be c0");
  for (const auto& t : get_array(j, "tiles")) ts.tiles.push_back(tile_from(t));
  if (auto problems = ts.check(); !problems.empty()) malformed(problems.front());
  return ts;
}

std::string write_tiling_system(const TilingSystem& ts) {
  json colors = json::array();
  for (const auto& c : ts.colors) colors.push_back(c.to_string());
  json tiles = json::array();
  for (const auto& t : ts.tiles) tiles.push_back(tile_json(t));
  return dump({{"colors", colors}, {"distinguished", ts.distinguished.to_string()}, {"tiles", tiles}});
}

EdgeMap read_edge_map(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"ring", "entries"}, "edge map");
  EdgeMap f(ring_from(j));
  std::set<EdgeColor> keys;
  for (const auto& e : get_array(j, "entries")) {
    only_fields(e, {"x", "y", "orient", "color", "value"}, "edge map entry");
    const std::string o = get_string(e, "orient");
    if (o != "H" && o != "V") malformed("orient must be \"H\" or \"V\"");
    const EdgeColor k{{{get_int(e, "x"), get_int(e, "y")}, o == "H" ? Orient::H : Orient::V}, color_from(field(e, "color"))};
    if (!keys.insert(k).second) malformed("repeated edge map entry");
    f.accumulate(k, integer_from(e, "value"));
  }
  return f;
}

std::string write_edge_map(const EdgeMap& f) {
  json entries = json::array();
  for (const auto& [k, v] : f.support()) {
    entries.push_back({{"x", k.edge.base.x},
                       {"y", k.edge.base.y},
                       {"orient", k.edge.orient == Orient::H ? "H" : "V"},
                       {"color", k.color.to_string()},
                       {"value", integer_json(v)}});
  }
  return dump({{"ring", f.ring().to_string()}, {"entries", entries}});
}

namespace {

Certificate certificate_from(std::string_view text, const TilingSystem* ts) {
  const json j = parse(text);
  only_fields(j, {"m", "rows", "placements"}, "certificate");
  Certificate cert;
  cert.width_m = get_int(j, "m");
  cert.height_n = get_int(j, "rows");
  for (const auto& p : get_array(j, "placements")) {
    only_fields(p, {"tile", "x", "y"}, "placement");
    const json& t = field(p, "tile");
    Tile tile;
    if (t.is_string() && !ts) {
      tile.name = t.get<std::string>();
    } else if (t.is_string()) {
      const Tile* named = ts->find_named(t.get<std::string>());
      if (!named) throw Error(Errc::UnknownTile, "no tile named '" + t.get<std::string>() + "'");
      tile = *named;
    } else {
      tile = tile_from(t);
    }
    cert.placements.push_back({tile, {get_int(p, "x"), get_int(p, "y")}});
  }
  return cert;
}

}  // namespace

Certificate read_certificate(std::string_view text, const TilingSystem& ts) { return certificate_from(text, &ts); }

Certificate read_certificate(std::string_view text) { return certificate_from(text, nullptr); }

std::string write_certificate(const Certificate& cert) {
  json placements = json::array();
  for (const auto& p : cert.canonical().placements) {
    json t = p.tile.name ? json(*p.tile.name) : tile_json(p.tile);
    placements.push_back({{"tile", t}, {"x", p.pos.x}, {"y", p.pos.y}});
  }
  return dump({{"m", cert.width_m}, {"rows", cert.height_n}, {"placements", placements}});
}

InstanceFile read_instance(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"ring", "rank", "generators", "target", "mode"}, "instance");
  InstanceFile out;
  out.instance = instance_from(j);
  const std::string mode = j.contains("mode") ? get_string(j, "mode") : "semimodule";
  if (mode == "semimodule")
    out.mode = InstanceMode::Semimodule;
  else if (mode == "subset-sum")
    out.mode = InstanceMode::SubsetSum;
  else
    malformed("mode must be \"semimodule\" or \"subset-sum\"");
  return out;
}

std::string write_instance(const SemimoduleInstance& inst, InstanceMode mode) {
  json j = instance_body(inst);
  j["mode"] = mode == InstanceMode::Semimodule ? "semimodule" : "subset-sum";
  return dump(j);
}

Witness read_witness(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"terms"}, "witness");
  Witness w;
  for (const auto& t : get_array(j, "terms")) {
    only_fields(t, {"x", "y", "generator", "coeff"}, "witness term");
    w.push_back({{get_int(t, "x"), get_int(t, "y")}, get_index(t, "generator"), integer_from(t, "coeff")});
  }
  return w;
}

std::string write_witness(const Witness& w) {
  json terms = json::array();
  for (const auto& t : w)
    terms.push_back({{"x", t.shift.x}, {"y", t.shift.y}, {"generator", t.generator}, {"coeff", integer_json(t.coeff)}});
  return dump({{"terms", terms}});
}

SubmonoidInstance read_submonoid(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"flavor", "m", "module_generators", "generators", "target"}, "submonoid instance");
  SubmonoidInstance inst;
  try {
    inst.flavor = parse_flavor(get_string(j, "flavor"));
  } catch (const Error& e) {
    malformed(e.what());
  }
  inst.m = get_int(j, "m");
  inst.module_generators = get_index(j, "module_generators");
  for (const auto& w : get_array(j, "generators")) inst.generators.push_back(word_from(w));
  inst.target = word_from(field(j, "target"));
  if (inst.module_generators > inst.generators.size()) malformed("more module generators than generators");
  return inst;
}

std::string write_submonoid(const SubmonoidInstance& inst) {
  json gens = json::array();
  for (const auto& w : inst.generators) gens.push_back(format_word(w));
  return dump({{"flavor", to_string(inst.flavor)},
               {"m", inst.m},
               {"module_generators", inst.module_generators},
               {"generators", gens},
               {"target", format_word(inst.target)}});
}

std::vector<std::size_t> read_submonoid_certificate(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"certificate"}, "submonoid certificate");
  std::vector<std::size_t> out;
  for (const auto& v : get_array(j, "certificate")) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) malformed("certificate entries are generator indices");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::string write_submonoid_certificate(const std::vector<std::size_t>& cert) { return dump({{"certificate", cert}}); }

RationalInstance read_rational(std::string_view text) {
  const json j = parse(text);
  only_fields(j, {"ring", "rank", "generators", "target", "regex"}, "rational instance");
  return {instance_from(j), parse_regex(get_string(j, "regex"))};
}

std::string write_rational(const RationalInstance& r) {
  json j = instance_body(r.instance);
  j["regex"] = format_regex(r.expr);
  return dump(j);
}

std::string write_nfa(const Nfa& nfa) {
  json edges = json::array();
  for (const auto& e : nfa.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label ? json(*e.label) : json(nullptr)}});
  return dump({{"states", nfa.states}, {"initial", nfa.initial}, {"finals", nfa.finals}, {"edges", edges}});
}

}  // namespace tilesum::io
