#pragma once

#include <vector>

#include "asclab/dfa.hpp"

namespace asclab {

// Partition of the reachable states into language-equivalence classes.
// Canonical layout: each block sorted ascending, blocks ordered by first element.
struct NerodePartition {
  std::vector<std::vector<int>> blocks;

  bool operator==(const NerodePartition&) const = default;
};

// Equivalence classes via Hopcroft partition refinement (reachable states only).
NerodePartition nerode_partition(const Dfa& a);

// Independent brute-force check: two reachable states are distinguished iff some
// word of length < |reachable| separates them. Exponential in the alphabet; meant
// for validating nerode_partition at test scale, not for sweeps.
NerodePartition nerode_oracle(const Dfa& a);

// Canonical minimal automaton: restrict to reachable states, merge equivalent
// ones, renumber blocks in breadth-first order by ascending symbol. Two automata
// accept the same language iff their minimize() results compare equal.
Dfa minimize(const Dfa& a);

// State complexity and accepting state complexity of L(a): the state count and
// accepting count of the minimal automaton. The empty language has sc 1, asc 0.
int sc(const Dfa& a);
int asc(const Dfa& a);

}  // namespace asclab
