#pragma once

#include <vector>

#include "asclab/dfa.hpp"

namespace asclab {

enum class BoolOp { Union, Intersection, Difference };

// Swap accepting and rejecting states.
Dfa complement(const Dfa& a);

// Pair construction on initially reachable pairs only, states numbered in BFS
// discovery order. Accepting flag per `op` (union / intersection / a minus b).
// Throws std::invalid_argument when the alphabets differ.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op);

// Kleene closure operations. Both are built via an epsilon-NFA, determinized,
// then minimized, so the result is the canonical minimal automaton.
Dfa star(const Dfa& a);
Dfa plus(const Dfa& a);

// Reversal automaton of a permutation automaton: states are the initially
// reachable images of the accepting set under inverse letter maps. Each image
// keeps the accepting set's cardinality; a subset accepts iff it contains the
// original initial state.
struct PfaReversal {
  Dfa dfa;
  std::vector<std::vector<int>> subsets;  // subsets[i] = members of reversal state i, ascending
};

PfaReversal build_reversal(const Dfa& a);  // throws std::domain_error unless a is a PFA
Dfa reverse_pfa(const Dfa& a);

// Reversal for arbitrary automata: flip every transition, determinize. Used as
// the cross-check oracle for reverse_pfa.
Dfa reverse_generic(const Dfa& a);

// L(a) L(b)^{-1}: same states and transitions as `a`, accepting exactly the
// states from which some word of L(b) reaches an accepting state of `a`.
Dfa right_quotient(const Dfa& a, const Dfa& b);

// L(b)^{-1} L(a): run `a` from every state reachable via a word of L(b), i.e.
// determinize `a` with that initial-state set.
Dfa left_quotient(const Dfa& b, const Dfa& a);

// Number of accepting states of the intersection product before minimization.
int initially_reachable_accepting_count(const Dfa& a, const Dfa& b);

}  // namespace asclab
