#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "asclab/dfa.hpp"

// Brute-force reference material shared by the test binaries. Everything here
// favors obviousness over speed.
namespace asclab::testing {

// Every string over {0..alphabet-1} of length <= max_len, shortest first,
// lexicographic within a length.
inline std::vector<std::vector<int>> language_sample(int alphabet, int max_len) {
  std::vector<std::vector<int>> out{{}};
  size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i) {
      for (int c = 0; c < alphabet; ++c) {
        std::vector<int> next = out[i];
        next.push_back(c);
        out.push_back(std::move(next));
      }
    }
    level_start = level_end;
  }
  return out;
}

inline bool agree_on_sample(const Dfa& a, const Dfa& b, int max_len) {
  for (const auto& word : language_sample(a.alphabet_size, max_len))
    if (accepts(a, word) != accepts(b, word)) return false;
  return true;
}

// Random automaton with exactly the given alphabet size.
inline Dfa random_dfa_over(std::mt19937& rng, int max_states, int sigma) {
  int k = 1 + static_cast<int>(rng() % max_states);
  std::vector<int> transitions(static_cast<size_t>(k) * sigma);
  for (int& t : transitions) t = static_cast<int>(rng() % k);
  std::vector<int> accepting;
  for (int s = 0; s < k; ++s)
    if (rng() % 2) accepting.push_back(s);
  return make_dfa(k, sigma, std::move(transitions), static_cast<int>(rng() % k), accepting);
}

inline Dfa random_dfa(std::mt19937& rng, int max_states, int max_sigma) {
  int sigma = 1 + static_cast<int>(rng() % max_sigma);
  return random_dfa_over(rng, max_states, sigma);
}

// Uniformly random permutation automaton.
inline Dfa random_pfa(std::mt19937& rng, int max_states, int max_sigma) {
  int k = 1 + static_cast<int>(rng() % max_states);
  int sigma = 1 + static_cast<int>(rng() % max_sigma);
  std::vector<int> transitions(static_cast<size_t>(k) * sigma);
  for (int c = 0; c < sigma; ++c) {
    std::vector<int> perm(static_cast<size_t>(k));
    for (int s = 0; s < k; ++s) perm[static_cast<size_t>(s)] = s;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int s = 0; s < k; ++s) transitions[static_cast<size_t>(s) * sigma + c] = perm[static_cast<size_t>(s)];
  }
  std::vector<int> accepting;
  for (int s = 0; s < k; ++s)
    if (rng() % 2) accepting.push_back(s);
  return make_dfa(k, sigma, std::move(transitions), static_cast<int>(rng() % k), accepting);
}

// All binary words of the given length, as bit strings.
inline std::vector<std::string> all_bit_words(int length) {
  std::vector<std::string> out;
  for (unsigned v = 0; v < 1u << length; ++v) {
    std::string bits(static_cast<size_t>(length), '0');
    for (int i = 0; i < length; ++i)
      if (v >> (length - 1 - i) & 1) bits[static_cast<size_t>(i)] = '1';
    out.push_back(std::move(bits));
  }
  return out;
}

}  // namespace asclab::testing
