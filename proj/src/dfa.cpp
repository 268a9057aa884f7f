#include "asclab/dfa.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace asclab {

int Dfa::accepting_count() const {
  int count = 0;
  for (char flag : accepting) count += flag != 0;
  return count;
}

Dfa make_dfa(int state_count, int alphabet_size, std::vector<int> transitions, int initial,
             const std::vector<int>& accepting_states) {
  if (state_count < 1) throw std::invalid_argument("dfa needs at least one state");
  if (alphabet_size < 1) throw std::invalid_argument("dfa needs at least one symbol");
  if (static_cast<int>(transitions.size()) != state_count * alphabet_size)
    throw std::invalid_argument("transition table has wrong size");
  for (int target : transitions)
    if (target < 0 || target >= state_count)
      throw std::invalid_argument("transition target out of range");
  if (initial < 0 || initial >= state_count)
    throw std::invalid_argument("initial state out of range");

  Dfa a;
  a.state_count = state_count;
  a.alphabet_size = alphabet_size;
  a.transitions = std::move(transitions);
  a.initial = initial;
  a.accepting.assign(state_count, 0);
  for (int s : accepting_states) {
    if (s < 0 || s >= state_count) throw std::invalid_argument("accepting state out of range");
    if (a.accepting[s]) throw std::invalid_argument("duplicate accepting state");
    a.accepting[s] = 1;
  }
  return a;
}

Dfa single_state_dfa(int alphabet_size, bool accepting) {
  std::vector<int> loops(static_cast<size_t>(alphabet_size), 0);
  return make_dfa(1, alphabet_size, std::move(loops), 0, accepting ? std::vector<int>{0} : std::vector<int>{});
}

bool accepts(const Dfa& a, std::span<const int> word) {
  int state = a.initial;
  for (int symbol : word) {
    if (symbol < 0 || symbol >= a.alphabet_size)
      throw std::invalid_argument("symbol " + std::to_string(symbol) + " outside alphabet");
    state = a.next(state, symbol);
  }
  return a.is_accepting(state);
}

std::vector<int> reachable_states(const Dfa& a) {
  std::vector<char> seen(a.state_count, 0);
  std::queue<int> queue;
  seen[a.initial] = 1;
  queue.push(a.initial);
  while (!queue.empty()) {
    int state = queue.front();
    queue.pop();
    for (int c = 0; c < a.alphabet_size; ++c) {
      int target = a.next(state, c);
      if (!seen[target]) {
        seen[target] = 1;
        queue.push(target);
      }
    }
  }
  std::vector<int> result;
  for (int s = 0; s < a.state_count; ++s)
    if (seen[s]) result.push_back(s);
  return result;
}

bool is_permutation(const Dfa& a) {
  std::vector<char> hit(a.state_count);
  for (int c = 0; c < a.alphabet_size; ++c) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int s = 0; s < a.state_count; ++s) {
      int target = a.next(s, c);
      if (hit[target]) return false;
      hit[target] = 1;
    }
  }
  return true;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("equivalence needs matching alphabets");
  std::vector<char> seen(static_cast<size_t>(a.state_count) * b.state_count, 0);
  std::queue<std::pair<int, int>> queue;
  auto visit = [&](int p, int q) {
    size_t index = static_cast<size_t>(p) * b.state_count + q;
    if (!seen[index]) {
      seen[index] = 1;
      queue.emplace(p, q);
    }
  };
  visit(a.initial, b.initial);
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop();
    if (a.is_accepting(p) != b.is_accepting(q)) return false;
    for (int c = 0; c < a.alphabet_size; ++c) visit(a.next(p, c), b.next(q, c));
  }
  return true;
}

}  // namespace asclab
