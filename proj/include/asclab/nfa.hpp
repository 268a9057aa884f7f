#pragma once

#include <utility>
#include <vector>

#include "asclab/dfa.hpp"

namespace asclab {

// Nondeterministic automaton with optional epsilon edges and a set of initial
// states. Only what the constructions here need; no completeness requirement.
struct Nfa {
  int state_count = 0;
  int alphabet_size = 0;
  std::vector<std::vector<std::vector<int>>> transitions;  // [state][symbol] -> targets
  std::vector<int> initial_states;
  std::vector<char> accepting;
  std::vector<std::pair<int, int>> epsilon;  // (from, to)

  void add_edge(int from, int symbol, int to) { transitions[from][symbol].push_back(to); }
};

Nfa nfa_from_dfa(const Dfa& a);

// Subset construction over epsilon closures. Materializes only subsets reachable
// from the initial closure, numbered in breadth-first order by ascending symbol,
// so the result is deterministic in the strong sense (same input, same bytes).
Dfa determinize(const Nfa& n);

}  // namespace asclab
