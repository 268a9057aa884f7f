#pragma once

#include <compare>
#include <string>
#include <vector>

#include "asclab/dfa.hpp"

namespace asclab {

// Bit-word encoding of a unary permutation automaton. A word w of length k stands
// for the k-state cycle i -> i+1 (mod k) with state i accepting iff w[i] == '1'.
// Every position, including the last, is accepting-eligible.
struct UnaryPfaWord {
  std::string bits;  // nonempty, characters '0'/'1'

  int length() const { return static_cast<int>(bits.size()); }
  int ones() const;

  bool operator==(const UnaryPfaWord&) const = default;
};

// Orders by length first, then lexicographically. Used wherever a sweep has to
// pick a canonical "least" witness.
bool word_less(const UnaryPfaWord& a, const UnaryPfaWord& b);

UnaryPfaWord make_word(const std::string& bits);  // validates characters

// Cycle automaton for the word. Throws std::invalid_argument on malformed bits.
Dfa decode(const UnaryPfaWord& w);

// Inverse of decode. Requires a unary permutation automaton whose states are all
// reachable (a single cycle); throws std::domain_error otherwise.
UnaryPfaWord encode(const Dfa& a);

// Finite residue set I modulo j: the language  union_{i in I} a^i (a^j)^*.
struct ResidueSpec {
  std::vector<int> residues;  // set semantics; each in [0, modulus)
  int modulus = 1;
};

// Cycle automaton of `spec.modulus` states accepting exactly the residues.
Dfa residue_pfa(const ResidueSpec& spec);

// True iff no proper divisor t of |w| shifts the accepting set into itself,
// i.e. decode(w) is already the minimal automaton of its language.
bool is_unary_pfa_minimal(const UnaryPfaWord& w);

}  // namespace asclab
