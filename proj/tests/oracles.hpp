#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilesum/geometry.hpp"
#include "tilesum/rational.hpp"
#include "tilesum/word.hpp"

// Reference evaluators written directly from the definitions, sharing no
// code with the library's group arithmetic.
namespace tilesum::test {

// Z wr (Z x Z) with one lamp generator g0: a cursor and integer lamps.
using LampState = std::pair<Point, std::map<Point, long long>>;

inline LampState lamp_walk(const Word& w) {
  Point at{0, 0};
  std::map<Point, long long> lamps;
  for (const auto& l : w) {
    if (l == "x") at.x += 1;
    else if (l == "X") at.x -= 1;
    else if (l == "y") at.y += 1;
    else if (l == "Y") at.y -= 1;
    else if (l == "g0" || l == "G0") {
      lamps[at] += l == "g0" ? 1 : -1;
      if (lamps[at] == 0) lamps.erase(at);
    } else {
      throw std::runtime_error("unexpected letter " + l);
    }
  }
  return {at, lamps};
}

// Free metabelian group of rank 2: endpoint and signed edge traversals.
using PathState = std::pair<Point, std::map<std::pair<Point, int>, long long>>;

inline PathState path_walk(const Word& w) {
  Point at{0, 0};
  std::map<std::pair<Point, int>, long long> flow;
  auto bump = [&](Point p, int o, long long v) {
    flow[{p, o}] += v;
    if (flow[{p, o}] == 0) flow.erase({p, o});
  };
  for (const auto& l : w) {
    if (l == "x") bump(at, 0, 1), at.x += 1;
    else if (l == "X") at.x -= 1, bump(at, 0, -1);
    else if (l == "y") bump(at, 1, 1), at.y += 1;
    else if (l == "Y") at.y -= 1, bump(at, 1, -1);
    else throw std::runtime_error("unexpected letter " + l);
  }
  return {at, flow};
}

// Subset construction over an exported automaton; state 0 is the empty set.
struct Dfa {
  std::vector<std::string> letters;
  std::vector<std::vector<int>> next;  // next[state][letter]
  std::vector<bool> accepting;
  int start = 0;
};

inline Dfa determinize(const Nfa& nfa, const std::vector<std::string>& letters) {
  auto closure = [&](std::set<std::size_t> s) {
    std::vector<std::size_t> stack(s.begin(), s.end());
    while (!stack.empty()) {
      const auto q = stack.back();
      stack.pop_back();
      for (const auto& e : nfa.edges)
        if (e.from == q && !e.label && s.insert(e.to).second) stack.push_back(e.to);
    }
    return s;
  };
  Dfa dfa;
  dfa.letters = letters;
  std::map<std::set<std::size_t>, int> ids;
  std::vector<std::set<std::size_t>> sets;
  auto id_of = [&](const std::set<std::size_t>& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(sets.size()));
    if (fresh) sets.push_back(s);
    return it->second;
  };
  id_of({});
  dfa.start = id_of(closure({nfa.initial}));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<int> row;
    for (const auto& l : letters) {
      std::set<std::size_t> moved;
      for (const auto& e : nfa.edges)
        if (sets[i].count(e.from) && e.label && *e.label == l) moved.insert(e.to);
      row.push_back(id_of(closure(moved)));
    }
    dfa.next.push_back(row);
  }
  for (const auto& s : sets) {
    bool acc = false;
    for (auto q : s) acc = acc || nfa.finals.count(q) > 0;
    dfa.accepting.push_back(acc);
  }
  return dfa;
}

}  // namespace tilesum::test
