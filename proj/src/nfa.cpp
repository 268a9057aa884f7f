#include "asclab/nfa.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace asclab {

Nfa nfa_from_dfa(const Dfa& a) {
  Nfa n;
  n.state_count = a.state_count;
  n.alphabet_size = a.alphabet_size;
  n.transitions.assign(a.state_count, std::vector<std::vector<int>>(a.alphabet_size));
  n.initial_states = {a.initial};
  n.accepting = a.accepting;
  for (int s = 0; s < a.state_count; ++s)
    for (int c = 0; c < a.alphabet_size; ++c) n.add_edge(s, c, a.next(s, c));
  return n;
}

namespace {

std::vector<std::vector<int>> epsilon_adjacency(const Nfa& n) {
  std::vector<std::vector<int>> adj(n.state_count);
  for (auto [from, to] : n.epsilon) adj[from].push_back(to);
  return adj;
}

// Sorted epsilon closure of a sorted set.
std::vector<int> closure(const std::vector<int>& set, const std::vector<std::vector<int>>& eps,
                         int state_count) {
  std::vector<char> seen(state_count, 0);
  std::vector<int> stack(set);
  for (int s : set) seen[s] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : eps[s])
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
  }
  std::vector<int> out;
  for (int s = 0; s < state_count; ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

}  // namespace

Dfa determinize(const Nfa& n) {
  auto eps = epsilon_adjacency(n);

  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = id_of.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };

  std::vector<int> start(n.initial_states);
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  intern(closure(start, eps, n.state_count));

  std::vector<int> transitions;
  std::vector<char> seen(n.state_count);
  for (size_t current = 0; current < subsets.size(); ++current) {
    for (int c = 0; c < n.alphabet_size; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      // Copy: intern() may reallocate `subsets` while we read from it.
      std::vector<int> source = subsets[current];
      std::vector<int> move;
      for (int s : source)
        for (int t : n.transitions[s][c])
          if (!seen[t]) {
            seen[t] = 1;
            move.push_back(t);
          }
      std::sort(move.begin(), move.end());
      transitions.push_back(intern(closure(move, eps, n.state_count)));
    }
  }

  Dfa d;
  d.state_count = static_cast<int>(subsets.size());
  d.alphabet_size = n.alphabet_size;
  d.transitions = std::move(transitions);
  d.initial = 0;
  d.accepting.assign(d.state_count, 0);
  for (int i = 0; i < d.state_count; ++i)
    for (int s : subsets[i])
      if (n.accepting[s]) {
        d.accepting[i] = 1;
        break;
      }
  return d;
}

}  // namespace asclab
