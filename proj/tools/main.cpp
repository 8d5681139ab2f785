#ifdef TILESUM_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tilesum/error.hpp"
#include "tilesum/forced_search.hpp"
#include "tilesum/io.hpp"
#include "tilesum/rational.hpp"
#include "tilesum/render.hpp"
#include "tilesum/semimodule.hpp"
#include "tilesum/submonoid.hpp"
#include "tilesum/tile_compiler.hpp"
#include "tilesum/tiling_builder.hpp"

namespace {

using namespace tilesum;

enum Exit { kOk = 0, kNone = 1, kUsage = 2, kInput = 3 };

// Thrown for flag combinations CLI11 cannot express on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reading or writing a file failed.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw FileError("cannot write " + path);
}

Window parse_window(const std::string& text) {
  Window w;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> w.x0 >> c1 >> w.y0 >> c2 >> w.x1 >> c3 >> w.y1) || c1 != ',' || c2 != ',' || c3 != ',' ||
      !(in >> std::ws).eof())
    throw UsageError("--window expects x0,y0,x1,y1");
  return w;
}

TuringMachine load_machine(const std::string& path) { return io::read_machine(slurp(path)); }

// Tiling commands work on the normal form; machines already in it pass through.
TuringMachine load_normal_machine(const std::string& path) {
  TuringMachine tm = load_machine(path);
  return is_normal_form(tm) ? tm : normalize(tm);
}

// Everything the tiling and reduction commands can take as input. A problem
// is given either by --tm/--input or by --tiles/--map.
struct Sources {
  std::string tm, input, tiles, map, cert, ring = "Z";
  std::size_t fuel = 100000;

  void add_problem(CLI::App* cmd) {
    cmd->add_option("--tm", tm, "Turing machine JSON");
    cmd->add_option("--input", input, "input word, one character per symbol");
    cmd->add_option("--tiles", tiles, "tiling system JSON");
    cmd->add_option("--map", map, "initial edge map JSON");
    cmd->add_option("--ring", ring, "Z or Zmod:n")->capture_default_str();
  }
  void add_fuel(CLI::App* cmd) { cmd->add_option("--fuel", fuel, "step bound for the machine")->capture_default_str(); }

  bool from_machine() const { return !tm.empty(); }

  void require_problem() const {
    const bool by_tm = !tm.empty() && !input.empty();
    const bool by_files = !tiles.empty() && !map.empty();
    if (by_tm == by_files) throw UsageError("give either --tm and --input, or --tiles and --map");
  }

  TuringMachine machine() const { return load_normal_machine(tm); }

  TilingSystem tiling_system() const {
    require_problem();
    return from_machine() ? compile_tiles(machine()) : io::read_tiling_system(slurp(tiles));
  }

  EdgeMap initial() const {
    require_problem();
    if (!from_machine()) return io::read_edge_map(slurp(map));
    const TuringMachine m = machine();
    return initial_map(m, parse_input(m, input), Ring::parse(ring));
  }
};

int tm_validate(const std::string& path) {
  const auto problems = validate(load_machine(path));
  for (const auto& p : problems) std::cout << p << "\n";
  if (!problems.empty()) return kInput;
  std::cout << "valid\n";
  return kOk;
}

int tm_run(const std::string& path, const std::string& input, std::size_t fuel, bool trace) {
  const TuringMachine tm = load_machine(path);
  const auto result = run(tm, parse_input(tm, input), fuel);
  if (const auto* a = std::get_if<Accepted>(&result)) {
    if (trace)
      for (const auto& c : a->trace.configs) std::cout << format_configuration(tm, c) << "\n";
    std::cout << "accepted after " << a->trace.steps << " steps, space " << a->trace.space << "\n";
    return kOk;
  }
  if (const auto* r = std::get_if<Rejected>(&result)) {
    std::cout << "rejected at " << format_configuration(tm, r->last) << "\n";
    return kNone;
  }
  std::cout << "out of fuel after " << std::get<OutOfFuel>(result).steps << " steps\n";
  return kNone;
}

int tile_build(const Sources& src, const std::string& out) {
  if (src.tm.empty() || src.input.empty()) throw UsageError("tile build needs --tm and --input");
  const TuringMachine tm = src.machine();
  auto cert = build_accepting_tiling(tm, parse_input(tm, src.input), src.fuel);
  if (!cert) {
    std::cerr << "machine does not accept within " << src.fuel << " steps\n";
    return kNone;
  }
  emit(out, io::write_certificate(*cert));
  std::cerr << cert->placements.size() << " placements, m=" << cert->width_m << ", rows=" << cert->height_n << "\n";
  return kOk;
}

int tile_verify(const Sources& src) {
  if (src.cert.empty()) throw UsageError("tile verify needs --cert");
  const TilingSystem ts = src.tiling_system();
  const Certificate cert = io::read_certificate(slurp(src.cert), ts);
  if (verify_zero(src.initial(), cert, ts)) {
    std::cout << "zero: the certificate cancels the input map\n";
    return kOk;
  }
  std::cout << "nonzero: the certificate does not cancel the input map\n";
  return kNone;
}

int tile_search(const Sources& src, ForcedSearchLimits limits, const std::string& out) {
  const TilingSystem ts = src.tiling_system();
  auto cert = forced_search(ts, src.initial(), limits);
  if (!cert) {
    std::cerr << "no tiling within m <= " << limits.max_m << ", rows <= " << limits.max_rows << "\n";
    return kNone;
  }
  emit(out, io::write_certificate(*cert));
  return kOk;
}

int tile_audit(const Sources& src) {
  if (src.cert.empty()) throw UsageError("tile audit needs --cert");
  const TilingSystem ts = src.tiling_system();
  const auto findings = audit_certificate(io::read_certificate(slurp(src.cert), ts), src.initial());
  for (const auto& f : findings) std::cout << to_string(f.rule) << ": " << f.message << "\n";
  if (findings.empty()) std::cout << "clean\n";
  return findings.empty() ? kOk : kNone;
}

Window default_window(const Sources& src, const std::string& window) {
  if (!window.empty()) return parse_window(window);
  // Without an explicit window, size it from the machine's own tiling.
  if (src.tm.empty() || src.input.empty()) throw UsageError("give --window, or --tm and --input to derive one");
  const TuringMachine tm = src.machine();
  auto cert = build_accepting_tiling(tm, parse_input(tm, src.input), src.fuel);
  if (!cert) throw UsageError("no window: the machine does not accept within the fuel bound");
  return certificate_window(*cert);
}

int print_witness(const std::optional<Witness>& w, const std::string& out) {
  if (!w) {
    std::cerr << "no witness within bounds\n";
    return kNone;
  }
  emit(out, io::write_witness(*w));
  return kOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Turing machines, tiling sums and the group-theoretic problems they reduce to"};
  app.require_subcommand(1);
  std::string out;
  Sources src;
  std::size_t fuel = 1000;

  // tm
  auto* tm_cmd = app.add_subcommand("tm", "Turing machine utilities")->require_subcommand(1);
  std::string tm_path, tm_input;
  bool trace = false;
  auto* tm_val = tm_cmd->add_subcommand("validate", "check a machine file");
  tm_val->add_option("--tm", tm_path)->required();
  auto* tm_norm = tm_cmd->add_subcommand("normalize", "rewrite into the normal form used by the tiling");
  tm_norm->add_option("--tm", tm_path)->required();
  tm_norm->add_option("-o,--output", out);
  auto* tm_run_cmd = tm_cmd->add_subcommand("run", "simulate a machine on an input");
  tm_run_cmd->add_option("--tm", tm_path)->required();
  tm_run_cmd->add_option("--input", tm_input)->required();
  tm_run_cmd->add_option("--fuel", fuel)->capture_default_str();
  tm_run_cmd->add_flag("--trace", trace, "print every configuration");

  // tile
  auto* tile = app.add_subcommand("tile", "tiling systems and certificates")->require_subcommand(1);
  auto* t_compile = tile->add_subcommand("compile", "tiling system of a machine");
  t_compile->add_option("--tm", src.tm)->required();
  t_compile->add_option("-o,--output", out);
  auto* t_initial = tile->add_subcommand("initial", "initial edge map of an input");
  t_initial->add_option("--tm", src.tm)->required();
  t_initial->add_option("--input", src.input)->required();
  t_initial->add_option("--ring", src.ring)->capture_default_str();
  t_initial->add_option("-o,--output", out);
  auto* t_build = tile->add_subcommand("build", "certificate from an accepting run");
  src.add_problem(t_build);
  src.add_fuel(t_build);
  t_build->add_option("-o,--output", out);
  auto* t_verify = tile->add_subcommand("verify", "check that a certificate cancels the input map");
  src.add_problem(t_verify);
  t_verify->add_option("--cert", src.cert);
  ForcedSearchLimits limits;
  auto* t_search = tile->add_subcommand("search", "forced row-by-row tiling search");
  src.add_problem(t_search);
  t_search->add_option("--max-m", limits.max_m)->capture_default_str();
  t_search->add_option("--max-rows", limits.max_rows)->capture_default_str();
  t_search->add_option("-o,--output", out);
  auto* t_audit = tile->add_subcommand("audit", "structural checks on a certificate");
  src.add_problem(t_audit);
  t_audit->add_option("--cert", src.cert);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "translate a problem into another")->require_subcommand(1);
  auto* r_semi = reduce->add_subcommand("semimodule", "tiling problem to semimodule membership");
  src.add_problem(r_semi);
  r_semi->add_option("-o,--output", out);
  auto* r_subset = reduce->add_subcommand("subset-sum", "tiling problem to a subset sum over Z/n");
  src.add_problem(r_subset);
  r_subset->add_option("-o,--output", out);
  std::string instance_path, witness_path, cert_out, nfa_out, flavor = "wreath";
  auto* r_sub = reduce->add_subcommand("submonoid", "semimodule instance to submonoid membership");
  r_sub->add_option("--instance", instance_path)->required();
  r_sub->add_option("--flavor", flavor, "wreath or metabelian")->capture_default_str();
  r_sub->add_option("--witness", witness_path, "also convert this witness");
  r_sub->add_option("--cert-out", cert_out, "where the converted certificate goes");
  r_sub->add_option("-o,--output", out);
  auto* r_rat = reduce->add_subcommand("rational", "subset-sum instance to rational subset membership");
  r_rat->add_option("--instance", instance_path)->required();
  r_rat->add_option("--nfa-out", nfa_out, "also write the automaton");
  r_rat->add_option("-o,--output", out);

  // solve
  auto* solve = app.add_subcommand("solve", "bounded searches")->require_subcommand(1);
  std::string window, rational_path;
  std::int64_t max_coeff = 1;
  std::size_t max_nodes = 0, max_len = 0;
  auto* s_semi = solve->add_subcommand("semimodule", "bounded semimodule membership");
  s_semi->add_option("--instance", instance_path)->required();
  s_semi->add_option("--window", window, "x0,y0,x1,y1");
  s_semi->add_option("--max-coeff", max_coeff)->capture_default_str();
  s_semi->add_option("--max-nodes", max_nodes, "0 means unlimited")->capture_default_str();
  s_semi->add_option("--tm", src.tm, "derive the window from this machine");
  s_semi->add_option("--input", src.input);
  s_semi->add_option("--fuel", src.fuel)->capture_default_str();
  s_semi->add_option("-o,--output", out);
  auto* s_subset = solve->add_subcommand("subset-sum", "bounded subset sum over Z/n");
  s_subset->add_option("--instance", instance_path)->required();
  s_subset->add_option("--window", window, "x0,y0,x1,y1");
  s_subset->add_option("--max-nodes", max_nodes, "0 means unlimited")->capture_default_str();
  s_subset->add_option("--tm", src.tm, "derive the window from this machine");
  s_subset->add_option("--input", src.input);
  s_subset->add_option("--fuel", src.fuel)->capture_default_str();
  s_subset->add_option("-o,--output", out);
  auto* s_rat = solve->add_subcommand("rational", "bounded rational subset membership");
  s_rat->add_option("--instance", rational_path)->required();
  s_rat->add_option("--max-len", max_len)->required();
  s_rat->add_option("-o,--output", out);

  // render
  auto* render = app.add_subcommand("render", "draw a certificate or an edge map");
  std::string format = "svg";
  render->add_option("--cert", src.cert);
  render->add_option("--map", src.map);
  render->add_option("--tm", src.tm, "resolve tile names through this machine");
  render->add_option("--tiles", src.tiles, "resolve tile names through this tiling system");
  render->add_option("--format", format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}))
      ->capture_default_str();
  render->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (tm_val->parsed()) return tm_validate(tm_path);
    if (tm_norm->parsed()) {
      emit(out, io::write_machine(normalize(load_machine(tm_path))));
      return kOk;
    }
    if (tm_run_cmd->parsed()) return tm_run(tm_path, tm_input, fuel, trace);

    if (t_compile->parsed()) {
      emit(out, io::write_tiling_system(compile_tiles(src.machine())));
      return kOk;
    }
    if (t_initial->parsed()) {
      emit(out, io::write_edge_map(src.initial()));
      return kOk;
    }
    if (t_build->parsed()) return tile_build(src, out);
    if (t_verify->parsed()) return tile_verify(src);
    if (t_search->parsed()) return tile_search(src, limits, out);
    if (t_audit->parsed()) return tile_audit(src);

    if (r_semi->parsed() || r_subset->parsed()) {
      const bool subset = r_subset->parsed();
      if (subset && Ring::parse(src.ring).is_integers()) throw UsageError("subset sums need --ring Zmod:n");
      const auto inst = tiling_to_instance(src.tiling_system(), src.initial());
      emit(out, io::write_instance(inst, subset ? io::InstanceMode::SubsetSum : io::InstanceMode::Semimodule));
      return kOk;
    }
    if (r_sub->parsed()) {
      const auto file = io::read_instance(slurp(instance_path));
      const auto sub = make_submonoid_instance(file.instance, parse_flavor(flavor));
      emit(out, io::write_submonoid(sub));
      if (!witness_path.empty()) {
        if (cert_out.empty()) throw UsageError("--witness needs --cert-out");
        emit(cert_out, io::write_submonoid_certificate(witness_to_certificate(sub, io::read_witness(slurp(witness_path)))));
      }
      return kOk;
    }
    if (r_rat->parsed()) {
      const auto file = io::read_instance(slurp(instance_path));
      const io::RationalInstance r{file.instance, build_L(file.instance.generators.size())};
      emit(out, io::write_rational(r));
      if (!nfa_out.empty()) emit(nfa_out, io::write_nfa(regex_to_nfa(r.expr)));
      return kOk;
    }

    if (s_semi->parsed()) {
      const auto file = io::read_instance(slurp(instance_path));
      const Window w = default_window(src, window);
      return print_witness(member_bounded(file.instance, w, max_coeff, {max_nodes}), out);
    }
    if (s_subset->parsed()) {
      const auto file = io::read_instance(slurp(instance_path));
      const Window w = default_window(src, window);
      return print_witness(subset_sum_bounded(file.instance, w, {max_nodes}), out);
    }
    if (s_rat->parsed()) {
      const auto r = io::read_rational(slurp(rational_path));
      const auto word = rational_member_bounded(regex_to_nfa(r.expr), rational_binding(r.instance),
                                                rational_target(r.instance), max_len);
      if (!word) {
        std::cerr << "no accepted word of length <= " << max_len << " reaches the target\n";
        return kNone;
      }
      emit(out, format_word(*word) + "\n");
      return kOk;
    }

    if (render->parsed()) {
      if (src.cert.empty() == src.map.empty()) throw UsageError("render needs exactly one of --cert and --map");
      const bool svg = format == "svg";
      if (!src.map.empty()) {
        const EdgeMap f = io::read_edge_map(slurp(src.map));
        emit(out, svg ? render_svg(f) : render_ascii(f));
        return kOk;
      }
      Certificate cert;
      if (!src.tm.empty())
        cert = io::read_certificate(slurp(src.cert), compile_tiles(src.machine()));
      else if (!src.tiles.empty())
        cert = io::read_certificate(slurp(src.cert), io::read_tiling_system(slurp(src.tiles)));
      else
        cert = io::read_certificate(slurp(src.cert));
      emit(out, svg ? render_svg(cert) : render_ascii(cert));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const tilesum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
