#include "asclab/minimize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace asclab {

namespace {

// Reachable states in BFS discovery order (symbols ascending).
std::vector<int> bfs_order(const Dfa& a) {
  std::vector<char> seen(a.state_count, 0);
  std::vector<int> order;
  order.reserve(a.state_count);
  std::queue<int> queue;
  seen[a.initial] = 1;
  queue.push(a.initial);
  while (!queue.empty()) {
    int state = queue.front();
    queue.pop();
    order.push_back(state);
    for (int c = 0; c < a.alphabet_size; ++c) {
      int target = a.next(state, c);
      if (!seen[target]) {
        seen[target] = 1;
        queue.push(target);
      }
    }
  }
  return order;
}

// Copy of `a` restricted to its reachable part, states renumbered in BFS order
// so the initial state becomes 0.
Dfa restrict_reachable(const Dfa& a, const std::vector<int>& order) {
  std::vector<int> local(a.state_count, -1);
  for (size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
  Dfa r;
  r.state_count = static_cast<int>(order.size());
  r.alphabet_size = a.alphabet_size;
  r.transitions.resize(static_cast<size_t>(r.state_count) * r.alphabet_size);
  r.initial = 0;
  r.accepting.resize(r.state_count);
  for (int s = 0; s < r.state_count; ++s) {
    r.accepting[s] = a.accepting[order[s]];
    for (int c = 0; c < r.alphabet_size; ++c)
      r.transitions[static_cast<size_t>(s) * r.alphabet_size + c] = local[a.next(order[s], c)];
  }
  return r;
}

// Refinable partition with O(1) marking, used by the Hopcroft loop below.
struct Partition {
  std::vector<int> elems, loc, block_of, first, past, marked;
  std::vector<int> touched;

  void init(int n, const std::vector<char>& accepting) {
    elems.resize(n);
    loc.resize(n);
    block_of.resize(n);
    // Non-accepting states first, accepting after; one or two initial blocks.
    int lo = 0, hi = n;
    for (int s = 0; s < n; ++s) {
      int slot = accepting[s] ? --hi : lo++;
      elems[slot] = s;
      loc[s] = slot;
    }
    first.clear();
    past.clear();
    if (lo > 0) {
      first.push_back(0);
      past.push_back(lo);
    }
    if (lo < n) {
      first.push_back(lo);
      past.push_back(n);
    }
    for (size_t b = 0; b < first.size(); ++b)
      for (int i = first[b]; i < past[b]; ++i) block_of[elems[i]] = static_cast<int>(b);
    marked.assign(first.size(), 0);
  }

  int block_count() const { return static_cast<int>(first.size()); }
  int size(int b) const { return past[b] - first[b]; }

  void mark(int s) {
    int b = block_of[s];
    int i = loc[s];
    int j = first[b] + marked[b];
    if (i < j) return;  // already marked
    std::swap(elems[i], elems[j]);
    loc[elems[i]] = i;
    loc[elems[j]] = j;
    if (marked[b]++ == 0) touched.push_back(b);
  }

  // Carves the marked part of every touched block into a fresh block and
  // reports (old, fresh) pairs. Fully marked blocks are left alone.
  std::vector<std::pair<int, int>> split_touched() {
    std::vector<std::pair<int, int>> splits;
    for (int b : touched) {
      if (marked[b] == size(b)) {
        marked[b] = 0;
        continue;
      }
      int nb = block_count();
      first.push_back(first[b]);
      past.push_back(first[b] + marked[b]);
      first[b] += marked[b];
      marked[b] = 0;
      marked.push_back(0);
      for (int i = first[nb]; i < past[nb]; ++i) block_of[elems[i]] = nb;
      splits.emplace_back(b, nb);
    }
    touched.clear();
    return splits;
  }
};

// Hopcroft refinement on an automaton whose states are all reachable.
// Returns the block index per state.
std::vector<int> hopcroft_blocks(const Dfa& d) {
  int n = d.state_count;
  int sigma = d.alphabet_size;

  // Reverse edges in CSR form, one table per symbol.
  std::vector<std::vector<int>> rev_start(sigma, std::vector<int>(n + 1, 0));
  std::vector<std::vector<int>> rev_data(sigma, std::vector<int>(n));
  for (int c = 0; c < sigma; ++c) {
    auto& start = rev_start[c];
    for (int s = 0; s < n; ++s) ++start[d.next(s, c) + 1];
    for (int q = 0; q < n; ++q) start[q + 1] += start[q];
    std::vector<int> cursor(start.begin(), start.end() - 1);
    for (int s = 0; s < n; ++s) rev_data[c][cursor[d.next(s, c)]++] = s;
  }

  Partition part;
  part.init(n, d.accepting);

  std::deque<int> work;
  std::vector<char> in_work;
  for (int b = 0; b < part.block_count(); ++b) {
    work.push_back(b);
    in_work.push_back(1);
  }

  std::vector<int> splitter;
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    in_work[a] = 0;
    splitter.assign(part.elems.begin() + part.first[a], part.elems.begin() + part.past[a]);
    for (int c = 0; c < sigma; ++c) {
      for (int q : splitter)
        for (int i = rev_start[c][q]; i < rev_start[c][q + 1]; ++i) part.mark(rev_data[c][i]);
      for (auto [old_b, new_b] : part.split_touched()) {
        in_work.push_back(0);
        if (in_work[old_b]) {
          work.push_back(new_b);
          in_work[new_b] = 1;
        } else {
          int smaller = part.size(new_b) < part.size(old_b) ? new_b : old_b;
          work.push_back(smaller);
          in_work[smaller] = 1;
        }
      }
    }
  }
  return part.block_of;
}

NerodePartition partition_from_blocks(const std::vector<int>& order,
                                      const std::vector<int>& block_of, int block_count) {
  std::vector<std::vector<int>> blocks(block_count);
  for (size_t i = 0; i < order.size(); ++i) blocks[block_of[i]].push_back(order[i]);
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return NerodePartition{std::move(blocks)};
}

}  // namespace

NerodePartition nerode_partition(const Dfa& a) {
  auto order = bfs_order(a);
  Dfa r = restrict_reachable(a, order);
  auto block_of = hopcroft_blocks(r);
  int blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
  return partition_from_blocks(order, block_of, blocks);
}

NerodePartition nerode_oracle(const Dfa& a) {
  auto order = bfs_order(a);
  int n = static_cast<int>(order.size());
  std::vector<int> local(a.state_count, -1);
  for (int i = 0; i < n; ++i) local[order[i]] = i;

  // distinct[p][q] once some word of length < n tells p and q apart.
  std::vector<std::vector<char>> distinct(n, std::vector<char>(n, 0));
  std::vector<int> current(n);

  auto record = [&](const std::vector<int>& where) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (a.accepting[where[p]] != a.accepting[where[q]]) distinct[p][q] = 1;
  };

  // Depth-first walk over all words of length < n, tracking every state's image.
  std::vector<int> start(order);
  auto walk = [&](auto&& self, const std::vector<int>& where, int depth) -> void {
    record(where);
    if (depth >= n - 1) return;
    for (int c = 0; c < a.alphabet_size; ++c) {
      std::vector<int> next(n);
      for (int i = 0; i < n; ++i) next[i] = a.next(where[i], c);
      self(self, next, depth + 1);
    }
  };
  walk(walk, start, 0);

  // Group mutually indistinguishable states; first-seen order keeps it stable.
  std::vector<int> block_of(n, -1);
  int blocks = 0;
  for (int p = 0; p < n; ++p) {
    if (block_of[p] >= 0) continue;
    block_of[p] = blocks;
    for (int q = p + 1; q < n; ++q)
      if (block_of[q] < 0 && !distinct[p][q]) block_of[q] = blocks;
    ++blocks;
  }
  return partition_from_blocks(order, block_of, blocks);
}

Dfa minimize(const Dfa& a) {
  auto order = bfs_order(a);
  Dfa r = restrict_reachable(a, order);
  auto block_of = hopcroft_blocks(r);
  int blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;

  // Representative state per block; transitions are block-consistent.
  std::vector<int> rep(blocks, -1);
  for (int s = 0; s < r.state_count; ++s)
    if (rep[block_of[s]] < 0) rep[block_of[s]] = s;

  // Renumber blocks breadth-first from the initial block, symbols ascending.
  std::vector<int> new_id(blocks, -1);
  std::vector<int> bfs;
  bfs.reserve(blocks);
  new_id[block_of[r.initial]] = 0;
  bfs.push_back(block_of[r.initial]);
  for (size_t i = 0; i < bfs.size(); ++i) {
    int b = bfs[i];
    for (int c = 0; c < r.alphabet_size; ++c) {
      int target = block_of[r.next(rep[b], c)];
      if (new_id[target] < 0) {
        new_id[target] = static_cast<int>(bfs.size());
        bfs.push_back(target);
      }
    }
  }

  Dfa result;
  result.state_count = blocks;
  result.alphabet_size = r.alphabet_size;
  result.transitions.resize(static_cast<size_t>(blocks) * r.alphabet_size);
  result.initial = 0;
  result.accepting.resize(blocks);
  for (int b = 0; b < blocks; ++b) {
    int id = new_id[b];
    result.accepting[id] = r.accepting[rep[b]];
    for (int c = 0; c < r.alphabet_size; ++c)
      result.transitions[static_cast<size_t>(id) * r.alphabet_size + c] =
          new_id[block_of[r.next(rep[b], c)]];
  }
  return result;
}

int sc(const Dfa& a) { return minimize(a).state_count; }

int asc(const Dfa& a) { return minimize(a).accepting_count(); }

}  // namespace asclab
