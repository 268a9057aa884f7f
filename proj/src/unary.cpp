#include "asclab/unary.hpp"

#include <algorithm>
#include <stdexcept>

namespace asclab {

int UnaryPfaWord::ones() const {
  return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

bool word_less(const UnaryPfaWord& a, const UnaryPfaWord& b) {
  if (a.bits.size() != b.bits.size()) return a.bits.size() < b.bits.size();
  return a.bits < b.bits;
}

static void check_bits(const std::string& bits) {
  if (bits.empty()) throw std::invalid_argument("word must be nonempty");
  for (char c : bits)
    if (c != '0' && c != '1') throw std::invalid_argument("word may only contain 0 and 1");
}

UnaryPfaWord make_word(const std::string& bits) {
  check_bits(bits);
  return UnaryPfaWord{bits};
}

Dfa decode(const UnaryPfaWord& w) {
  check_bits(w.bits);
  int k = w.length();
  std::vector<int> transitions(k);
  std::vector<int> accepting;
  for (int i = 0; i < k; ++i) {
    transitions[i] = (i + 1) % k;
    if (w.bits[i] == '1') accepting.push_back(i);
  }
  return make_dfa(k, 1, std::move(transitions), 0, accepting);
}

UnaryPfaWord encode(const Dfa& a) {
  if (a.alphabet_size != 1) throw std::domain_error("encode needs a unary automaton");
  if (!is_permutation(a)) throw std::domain_error("encode needs a permutation automaton");
  // A unary permutation splits into disjoint cycles; the word covers exactly
  // the cycle through the initial state, so every state must sit on it.
  std::string bits;
  int state = a.initial;
  do {
    bits.push_back(a.is_accepting(state) ? '1' : '0');
    state = a.next(state, 0);
  } while (state != a.initial);
  if (static_cast<int>(bits.size()) != a.state_count)
    throw std::domain_error("encode needs every state reachable");
  return UnaryPfaWord{std::move(bits)};
}

Dfa residue_pfa(const ResidueSpec& spec) {
  if (spec.modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::string bits(static_cast<size_t>(spec.modulus), '0');
  for (int r : spec.residues) {
    if (r < 0 || r >= spec.modulus)
      throw std::invalid_argument("residue outside [0, modulus)");
    bits[static_cast<size_t>(r)] = '1';
  }
  return decode(UnaryPfaWord{std::move(bits)});
}

bool is_unary_pfa_minimal(const UnaryPfaWord& w) {
  check_bits(w.bits);
  int k = w.length();
  for (int t = 1; t < k; ++t) {
    if (k % t != 0) continue;
    bool invariant = true;
    for (int i = 0; i < k && invariant; ++i)
      invariant = w.bits[i] == w.bits[(i + t) % k];
    if (invariant) return false;
  }
  return true;
}

}  // namespace asclab
