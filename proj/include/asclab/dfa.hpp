#pragma once

#include <span>
#include <vector>

namespace asclab {

// Complete deterministic finite automaton over the alphabet {0, ..., alphabet_size-1}.
// Every (state, symbol) pair has exactly one target; construction validates this.
struct Dfa {
  int state_count = 0;
  int alphabet_size = 0;
  std::vector<int> transitions;  // row-major: transitions[state * alphabet_size + symbol]
  int initial = 0;
  std::vector<char> accepting;   // one 0/1 flag per state

  int next(int state, int symbol) const { return transitions[state * alphabet_size + symbol]; }
  bool is_accepting(int state) const { return accepting[state] != 0; }
  int accepting_count() const;

  bool operator==(const Dfa&) const = default;
};

// Validating constructor. `accepting_states` is a set of state indices; duplicates
// and out-of-range values are rejected with std::invalid_argument.
Dfa make_dfa(int state_count, int alphabet_size, std::vector<int> transitions, int initial,
             const std::vector<int>& accepting_states);

// One state with self-loops on every symbol: the empty language, or all words.
Dfa single_state_dfa(int alphabet_size, bool accepting);

// Runs `word` from the initial state. Throws std::invalid_argument on a symbol
// outside [0, alphabet_size).
bool accepts(const Dfa& a, std::span<const int> word);

// States reachable from the initial state, ascending.
std::vector<int> reachable_states(const Dfa& a);

// True when every symbol acts as a bijection on the state set.
bool is_permutation(const Dfa& a);

// Language equality via synchronous product reachability.
// Throws std::invalid_argument when the alphabets differ.
bool equivalent(const Dfa& a, const Dfa& b);

}  // namespace asclab
