#include "asclab/unary_lang.hpp"

#include <numeric>
#include <stdexcept>

namespace asclab {

namespace {

bool combine_bits(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::Union: return a || b;
    case BoolOp::Intersection: return a && b;
    case BoolOp::Difference: return a && !b;
  }
  return false;
}

int popcount(const std::vector<char>& bits) {
  int n = 0;
  for (char b : bits) n += b != 0;
  return n;
}

}  // namespace

bool UnaryLang::at(long long i) const {
  long long t = static_cast<long long>(tail.size());
  if (i < t) return tail[static_cast<size_t>(i)] != 0;
  return cycle[static_cast<size_t>((i - t) % static_cast<long long>(cycle.size()))] != 0;
}

UnaryLang UnaryLang::from_word(const UnaryPfaWord& w) {
  UnaryLang lang;
  lang.cycle.reserve(w.bits.size());
  for (char c : w.bits) lang.cycle.push_back(c == '1');
  if (lang.cycle.empty()) throw std::invalid_argument("word must be nonempty");
  return lang;
}

UnaryLang UnaryLang::from_dfa(const Dfa& a) {
  if (a.alphabet_size != 1) throw std::invalid_argument("unary language needs a unary automaton");
  // Walk until the first repeated state; everything before it is the tail.
  std::vector<int> first_seen(a.state_count, -1);
  std::vector<char> sequence;
  int state = a.initial;
  int step = 0;
  while (first_seen[state] < 0) {
    first_seen[state] = step++;
    sequence.push_back(a.is_accepting(state) ? 1 : 0);
    state = a.next(state, 0);
  }
  int tail_len = first_seen[state];
  UnaryLang lang;
  lang.tail.assign(sequence.begin(), sequence.begin() + tail_len);
  lang.cycle.assign(sequence.begin() + tail_len, sequence.end());
  return lang;
}

UnaryLang UnaryLang::minimized() const {
  int c = static_cast<int>(cycle.size());
  // Shortest divisor period of the cycle part.
  int p = c;
  for (int cand = 1; cand < c; ++cand) {
    if (c % cand != 0) continue;
    bool ok = true;
    for (int i = 0; i < c && ok; ++i) ok = cycle[i] == cycle[(i + cand) % c];
    if (ok) {
      p = cand;
      break;
    }
  }
  std::vector<char> pattern(cycle.begin(), cycle.begin() + p);

  // Absorb tail positions that already follow the pattern. `phase` tracks which
  // pattern index the first cycle position corresponds to after each step back.
  int t = static_cast<int>(tail.size());
  int phase = 0;
  while (t > 0 && tail[t - 1] == pattern[static_cast<size_t>((phase + p - 1) % p)]) {
    --t;
    phase = (phase + p - 1) % p;
  }

  UnaryLang out;
  out.tail.assign(tail.begin(), tail.begin() + t);
  out.cycle.resize(p);
  for (int i = 0; i < p; ++i) out.cycle[i] = pattern[static_cast<size_t>((phase + i) % p)];
  return out;
}

int UnaryLang::sc() const {
  UnaryLang m = minimized();
  return static_cast<int>(m.tail.size() + m.cycle.size());
}

int UnaryLang::asc() const {
  UnaryLang m = minimized();
  return popcount(m.tail) + popcount(m.cycle);
}

Dfa to_dfa(const UnaryLang& lang) {
  if (lang.cycle.empty()) throw std::invalid_argument("language needs a nonempty cycle");
  int t = static_cast<int>(lang.tail.size());
  int k = t + static_cast<int>(lang.cycle.size());
  std::vector<int> transitions(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) transitions[static_cast<size_t>(i)] = i + 1 < k ? i + 1 : t;
  std::vector<int> accepting;
  for (int i = 0; i < k; ++i)
    if (lang.at(i)) accepting.push_back(i);
  return make_dfa(k, 1, std::move(transitions), 0, accepting);
}

UnaryLang combine(const UnaryLang& a, const UnaryLang& b, BoolOp op) {
  long long tail = std::max(a.tail.size(), b.tail.size());
  long long cycle = std::lcm(static_cast<long long>(a.cycle.size()),
                             static_cast<long long>(b.cycle.size()));
  UnaryLang out;
  out.tail.resize(static_cast<size_t>(tail));
  out.cycle.resize(static_cast<size_t>(cycle));
  for (long long i = 0; i < tail; ++i) out.tail[static_cast<size_t>(i)] = combine_bits(op, a.at(i), b.at(i));
  for (long long i = 0; i < cycle; ++i)
    out.cycle[static_cast<size_t>(i)] = combine_bits(op, a.at(tail + i), b.at(tail + i));
  return out;
}

UnaryLang cycle_right_quotient(const UnaryPfaWord& a, const UnaryPfaWord& b) {
  int k = a.length();
  int kb = b.length();
  int g = std::gcd(k, kb);
  std::vector<char> good(static_cast<size_t>(g), 0);
  for (int i = 0; i < k; ++i) {
    if (a.bits[i] != '1') continue;
    for (int j = 0; j < kb; ++j) {
      if (b.bits[j] != '1') continue;
      good[static_cast<size_t>(((i - j) % g + g) % g)] = 1;
    }
  }
  UnaryLang out;
  out.cycle.resize(static_cast<size_t>(k));
  for (int q = 0; q < k; ++q) out.cycle[static_cast<size_t>(q)] = good[static_cast<size_t>(q % g)];
  return out;
}

}  // namespace asclab
