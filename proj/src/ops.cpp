#include "asclab/ops.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "asclab/minimize.hpp"
#include "asclab/nfa.hpp"

namespace asclab {

namespace {

bool combine(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::Union: return a || b;
    case BoolOp::Intersection: return a && b;
    case BoolOp::Difference: return a && !b;
  }
  return false;
}

void check_alphabets(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size != b.alphabet_size)
    throw std::invalid_argument("operation needs matching alphabets");
}

// Pairs (p, q) reachable from the initial pair, discovery-ordered. Returns the
// pair ids and a dense lookup table (-1 for unreached).
struct PairSpace {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> id;  // size a.states * b.states
};

PairSpace reachable_pairs(const Dfa& a, const Dfa& b) {
  PairSpace space;
  space.id.assign(static_cast<size_t>(a.state_count) * b.state_count, -1);
  auto intern = [&](int p, int q) {
    size_t key = static_cast<size_t>(p) * b.state_count + q;
    if (space.id[key] < 0) {
      space.id[key] = static_cast<int>(space.pairs.size());
      space.pairs.emplace_back(p, q);
    }
    return space.id[key];
  };
  intern(a.initial, b.initial);
  for (size_t i = 0; i < space.pairs.size(); ++i) {
    auto [p, q] = space.pairs[i];
    for (int c = 0; c < a.alphabet_size; ++c) intern(a.next(p, c), b.next(q, c));
  }
  return space;
}

}  // namespace

Dfa complement(const Dfa& a) {
  Dfa result = a;
  for (auto& flag : result.accepting) flag = flag ? 0 : 1;
  return result;
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  check_alphabets(a, b);
  PairSpace space = reachable_pairs(a, b);
  Dfa result;
  result.state_count = static_cast<int>(space.pairs.size());
  result.alphabet_size = a.alphabet_size;
  result.transitions.resize(static_cast<size_t>(result.state_count) * result.alphabet_size);
  result.initial = 0;
  result.accepting.resize(result.state_count);
  for (int i = 0; i < result.state_count; ++i) {
    auto [p, q] = space.pairs[i];
    result.accepting[i] = combine(op, a.is_accepting(p), b.is_accepting(q));
    for (int c = 0; c < result.alphabet_size; ++c)
      result.transitions[static_cast<size_t>(i) * result.alphabet_size + c] =
          space.id[static_cast<size_t>(a.next(p, c)) * b.state_count + b.next(q, c)];
  }
  return result;
}

Dfa star(const Dfa& a) {
  // Fresh accepting initial state with an epsilon edge into the old initial;
  // accepting states loop back the same way.
  Nfa n = nfa_from_dfa(a);
  int fresh = n.state_count++;
  n.transitions.emplace_back(n.alphabet_size);
  n.accepting.push_back(1);
  n.initial_states = {fresh};
  n.epsilon.emplace_back(fresh, a.initial);
  for (int s = 0; s < a.state_count; ++s)
    if (a.is_accepting(s)) n.epsilon.emplace_back(s, a.initial);
  return minimize(determinize(n));
}

Dfa plus(const Dfa& a) {
  Nfa n = nfa_from_dfa(a);
  for (int s = 0; s < a.state_count; ++s)
    if (a.is_accepting(s)) n.epsilon.emplace_back(s, a.initial);
  return minimize(determinize(n));
}

PfaReversal build_reversal(const Dfa& a) {
  if (!is_permutation(a)) throw std::domain_error("reversal automaton needs a permutation automaton");

  // Each letter is a bijection; inv[c][q] is the unique source of q under c.
  std::vector<std::vector<int>> inv(a.alphabet_size, std::vector<int>(a.state_count));
  for (int c = 0; c < a.alphabet_size; ++c)
    for (int s = 0; s < a.state_count; ++s) inv[c][a.next(s, c)] = s;

  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = id_of.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };

  std::vector<int> start;
  for (int s = 0; s < a.state_count; ++s)
    if (a.is_accepting(s)) start.push_back(s);
  intern(std::move(start));

  std::vector<int> transitions;
  for (size_t current = 0; current < subsets.size(); ++current) {
    for (int c = 0; c < a.alphabet_size; ++c) {
      std::vector<int> source = subsets[current];
      std::vector<int> image;
      image.reserve(source.size());
      for (int q : source) image.push_back(inv[c][q]);
      std::sort(image.begin(), image.end());
      transitions.push_back(intern(std::move(image)));
    }
  }

  PfaReversal rev;
  rev.dfa.state_count = static_cast<int>(subsets.size());
  rev.dfa.alphabet_size = a.alphabet_size;
  rev.dfa.transitions = std::move(transitions);
  rev.dfa.initial = 0;
  rev.dfa.accepting.assign(rev.dfa.state_count, 0);
  for (int i = 0; i < rev.dfa.state_count; ++i)
    rev.dfa.accepting[i] =
        std::binary_search(subsets[i].begin(), subsets[i].end(), a.initial) ? 1 : 0;
  rev.subsets = std::move(subsets);
  return rev;
}

Dfa reverse_pfa(const Dfa& a) { return build_reversal(a).dfa; }

Dfa reverse_generic(const Dfa& a) {
  Nfa n;
  n.state_count = a.state_count;
  n.alphabet_size = a.alphabet_size;
  n.transitions.assign(a.state_count, std::vector<std::vector<int>>(a.alphabet_size));
  for (int s = 0; s < a.state_count; ++s)
    for (int c = 0; c < a.alphabet_size; ++c) n.add_edge(a.next(s, c), c, s);
  for (int s = 0; s < a.state_count; ++s)
    if (a.is_accepting(s)) n.initial_states.push_back(s);
  n.accepting.assign(a.state_count, 0);
  n.accepting[a.initial] = 1;
  return determinize(n);
}

Dfa right_quotient(const Dfa& a, const Dfa& b) {
  check_alphabets(a, b);
  // (p, q) can reach an accepting-accepting pair iff some common word takes p
  // into F_a and q into F_b. One backward BFS over the full pair graph answers
  // that for every start; the new accepting set reads off column b.initial.
  size_t total = static_cast<size_t>(a.state_count) * b.state_count;
  std::vector<std::vector<size_t>> rev(total);
  for (int p = 0; p < a.state_count; ++p)
    for (int q = 0; q < b.state_count; ++q)
      for (int c = 0; c < a.alphabet_size; ++c)
        rev[static_cast<size_t>(a.next(p, c)) * b.state_count + b.next(q, c)].push_back(
            static_cast<size_t>(p) * b.state_count + q);

  std::vector<char> co_reachable(total, 0);
  std::queue<size_t> queue;
  for (int p = 0; p < a.state_count; ++p)
    for (int q = 0; q < b.state_count; ++q)
      if (a.is_accepting(p) && b.is_accepting(q)) {
        size_t key = static_cast<size_t>(p) * b.state_count + q;
        co_reachable[key] = 1;
        queue.push(key);
      }
  while (!queue.empty()) {
    size_t key = queue.front();
    queue.pop();
    for (size_t source : rev[key])
      if (!co_reachable[source]) {
        co_reachable[source] = 1;
        queue.push(source);
      }
  }

  Dfa result = a;
  for (int p = 0; p < a.state_count; ++p)
    result.accepting[p] =
        co_reachable[static_cast<size_t>(p) * b.state_count + b.initial] ? 1 : 0;
  return result;
}

Dfa left_quotient(const Dfa& b, const Dfa& a) {
  check_alphabets(a, b);
  // Initial set: states of `a` reached while `b` reads an accepted word.
  PairSpace space = reachable_pairs(a, b);
  std::vector<char> in_start(a.state_count, 0);
  for (auto [p, q] : space.pairs)
    if (b.is_accepting(q)) in_start[p] = 1;

  Nfa n = nfa_from_dfa(a);
  n.initial_states.clear();
  for (int s = 0; s < a.state_count; ++s)
    if (in_start[s]) n.initial_states.push_back(s);
  return determinize(n);
}

int initially_reachable_accepting_count(const Dfa& a, const Dfa& b) {
  return product(a, b, BoolOp::Intersection).accepting_count();
}

}  // namespace asclab
