#pragma once

#include <vector>

#include "asclab/ops.hpp"
#include "asclab/unary.hpp"

namespace asclab {

// Unary language as its characteristic sequence: an explicit tail followed by a
// repeating cycle. This is the sweep-speed representation; it avoids building
// product automata and running generic minimization for every enumerated pair.
// Tests cross-check every routine here against the generic constructions.
struct UnaryLang {
  std::vector<char> tail;   // membership of a^0 .. a^{tail-1}
  std::vector<char> cycle;  // membership of a^{tail + i}, indexed by i mod cycle size

  bool at(long long i) const;

  static UnaryLang from_word(const UnaryPfaWord& w);
  static UnaryLang from_dfa(const Dfa& a);  // requires alphabet_size == 1

  // Shortest tail and cycle representing the same sequence. The result's sizes
  // equal sc of the language split into tail and cycle parts.
  UnaryLang minimized() const;

  int sc() const;   // tail + cycle of minimized()
  int asc() const;  // accepting count of minimized()

  bool operator==(const UnaryLang&) const = default;
};

// Chain-plus-cycle automaton realizing the sequence: tail states first, then
// the cycle, one letter. Requires a nonempty cycle.
Dfa to_dfa(const UnaryLang& lang);

// Pointwise boolean combination; tail = max of tails, cycle = lcm of cycles.
UnaryLang combine(const UnaryLang& a, const UnaryLang& b, BoolOp op);

// Right quotient of pure cycles. With g = gcd(|a|, |b|), a state q of the left
// cycle accepts iff q is congruent to i - b_pos (mod g) for some accepting i of
// the left word and accepting position b_pos of the right word.
UnaryLang cycle_right_quotient(const UnaryPfaWord& a, const UnaryPfaWord& b);

}  // namespace asclab
