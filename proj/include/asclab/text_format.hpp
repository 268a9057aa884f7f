#pragma once

#include <optional>
#include <string>

#include "asclab/dfa.hpp"
#include "asclab/unary.hpp"

namespace asclab {

// Text form of an automaton. Two shapes are accepted:
//
//   word:101
//
// for unary permutation cycles, and an explicit block
//
//   dfa
//   states 3
//   alphabet 2
//   initial 0
//   accepting 0 2
//   trans 0 0 1
//   ...
//
// with one `trans <state> <symbol> <target>` line per table entry. The parser is
// strict: directives appear in the order above, the transition table must be
// complete, and duplicates are rejected.

std::string format_automaton(const Dfa& a);
std::string format_automaton(const UnaryPfaWord& w);

struct ParsedAutomaton {
  std::optional<UnaryPfaWord> word;  // set when the input used the word form
  Dfa dfa;
};

ParsedAutomaton parse_automaton_detail(const std::string& text);
Dfa parse_automaton(const std::string& text);

}  // namespace asclab
