#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tilesum/io.hpp"
#include "tilesum/turing_machine.hpp"

inline tilesum::TuringMachine bench_machine(const std::string& name) {
  std::ifstream in(std::string(TILESUM_BENCH_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  tilesum::TuringMachine tm = tilesum::io::read_machine(s.str());
  return tilesum::is_normal_form(tm) ? tm : tilesum::normalize(tm);
}

// The eraser input a^n, as the CLI spells it.
inline std::string as_input(int n) {
  std::string w;
  for (int i = 0; i < n; ++i) w += i ? ",a" : "a";
  return w;
}
