#include "asclab/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "asclab/minimize.hpp"
#include "asclab/ops.hpp"
#include "asclab/text_format.hpp"
#include "asclab/unary_lang.hpp"

namespace asclab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

// --- enumeration ---------------------------------------------------------------

std::vector<UnaryPfaWord> enumerate_unary_pfas(int length, int accepting_count,
                                               bool minimal_only) {
  if (length < 1 || length > 24) throw std::invalid_argument("length out of range");
  if (accepting_count < 0 || accepting_count > length)
    throw std::invalid_argument("accepting_count out of range");
  std::vector<UnaryPfaWord> out;
  for (unsigned v = 0; v < 1u << length; ++v) {
    if (std::popcount(v) != accepting_count) continue;
    std::string bits(static_cast<size_t>(length), '0');
    for (int i = 0; i < length; ++i)
      if (v >> (length - 1 - i) & 1) bits[static_cast<size_t>(i)] = '1';
    UnaryPfaWord w{std::move(bits)};
    if (minimal_only && !is_unary_pfa_minimal(w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<UnaryPfaWord> minimal_words_up_to(int max_length, int accepting_count) {
  std::vector<UnaryPfaWord> out;
  for (int len = std::max(1, accepting_count); len <= max_length; ++len) {
    auto words = enumerate_unary_pfas(len, accepting_count, true);
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

namespace {

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// C(n, r), but reports cap + 1 as soon as the running value exceeds cap.
long long binom_capped(int n, int r, long long cap) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    if (out > cap) return cap + 1;
  }
  return out;
}

bool next_combination(std::vector<int>& c, int n) {
  int size = static_cast<int>(c.size());
  int i = size - 1;
  while (i >= 0 && c[i] == n - size + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  return true;
}

bool emit_accepting_sets(Dfa& base, int accepting_count,
                         const std::function<bool(const Dfa&)>& fn) {
  int k = base.state_count;
  auto run_size = [&](int size) {
    std::vector<int> members(static_cast<size_t>(size));
    std::iota(members.begin(), members.end(), 0);
    do {
      std::fill(base.accepting.begin(), base.accepting.end(), 0);
      for (int s : members) base.accepting[static_cast<size_t>(s)] = 1;
      if (!fn(base)) return false;
    } while (next_combination(members, k));
    return true;
  };
  if (accepting_count >= 0) return run_size(accepting_count);
  for (int size = 0; size <= k; ++size)
    if (!run_size(size)) return false;
  return true;
}

}  // namespace

bool for_each_pfa(int state_count, int alphabet_size, int accepting_count,
                  const std::function<bool(const Dfa&)>& fn) {
  if (state_count < 1 || alphabet_size < 1)
    throw std::invalid_argument("state and alphabet counts must be positive");
  if (accepting_count > state_count)
    throw std::invalid_argument("accepting_count exceeds state_count");
  std::vector<std::vector<int>> perms(static_cast<size_t>(alphabet_size),
                                      std::vector<int>(static_cast<size_t>(state_count)));
  for (auto& perm : perms) std::iota(perm.begin(), perm.end(), 0);

  Dfa base;
  base.state_count = state_count;
  base.alphabet_size = alphabet_size;
  base.transitions.resize(static_cast<size_t>(state_count) * alphabet_size);
  base.initial = 0;
  base.accepting.assign(static_cast<size_t>(state_count), 0);

  while (true) {
    for (int s = 0; s < state_count; ++s)
      for (int c = 0; c < alphabet_size; ++c)
        base.transitions[static_cast<size_t>(s) * alphabet_size + c] =
            perms[static_cast<size_t>(c)][static_cast<size_t>(s)];
    if (!emit_accepting_sets(base, accepting_count, fn)) return false;
    // Odometer over the letter permutations, last letter fastest. A wrapped
    // next_permutation leaves the identity behind, which is exactly the reset.
    int letter = alphabet_size - 1;
    while (letter >= 0 &&
           !std::next_permutation(perms[static_cast<size_t>(letter)].begin(),
                                  perms[static_cast<size_t>(letter)].end()))
      --letter;
    if (letter < 0) return true;
  }
}

long long count_pfas(int state_count, int alphabet_size, int accepting_count) {
  long long factorial = 1;
  for (int i = 2; i <= state_count; ++i) factorial *= i;
  long long structures = 1;
  for (int c = 0; c < alphabet_size; ++c) structures *= factorial;
  long long sets = accepting_count < 0 ? 1LL << state_count : binom(state_count, accepting_count);
  return structures * sets;
}

// --- unary pair sweeps -----------------------------------------------------------

namespace {

int count_ones(const std::vector<char>& bits) {
  int n = 0;
  for (char b : bits) n += b != 0;
  return n;
}

struct SweepItem {
  UnaryPfaWord word;
  UnaryLang lang;
};

// Sweep population for one side: minimal words with exactly `target_asc` ones,
// or (relaxed) every word whose language has that complexity.
std::vector<SweepItem> sweep_inputs(int target_asc, int max_len, bool require_minimal) {
  std::vector<SweepItem> out;
  for (int len = 1; len <= max_len; ++len) {
    if (require_minimal) {
      if (target_asc > len) continue;
      for (UnaryPfaWord& w : enumerate_unary_pfas(len, target_asc, true)) {
        UnaryLang lang = UnaryLang::from_word(w);
        out.push_back({std::move(w), std::move(lang)});
      }
    } else {
      for (unsigned v = 0; v < 1u << len; ++v) {
        std::string bits(static_cast<size_t>(len), '0');
        for (int i = 0; i < len; ++i)
          if (v >> (len - 1 - i) & 1) bits[static_cast<size_t>(i)] = '1';
        UnaryPfaWord w{std::move(bits)};
        UnaryLang lang = UnaryLang::from_word(w);
        if (lang.asc() != target_asc) continue;
        out.push_back({std::move(w), std::move(lang)});
      }
    }
  }
  return out;
}

int alpha_fast(Operation op, const SweepItem& a, const SweepItem* b) {
  switch (op) {
    case Operation::Union: return combine(a.lang, b->lang, BoolOp::Union).asc();
    case Operation::Intersection: return combine(a.lang, b->lang, BoolOp::Intersection).asc();
    case Operation::Difference: return combine(a.lang, b->lang, BoolOp::Difference).asc();
    case Operation::RightQuotient: return cycle_right_quotient(a.word, b->word).asc();
    case Operation::Complement: {
      std::string flipped = a.word.bits;
      for (char& c : flipped) c = c == '1' ? '0' : '1';
      return UnaryLang::from_word(UnaryPfaWord{std::move(flipped)}).asc();
    }
    case Operation::Reversal: return a.lang.asc();  // reversal fixes unary languages
    case Operation::Star: return asc(star(decode(a.word)));
    case Operation::Plus: return asc(plus(decode(a.word)));
  }
  return -1;
}

// Index pair of the witness recorded per attained value. Input lists are built
// in (length, bits) order, so index order is the canonical witness order.
using BestMap = std::map<int, std::pair<int, int>>;

void merge_best(BestMap& into, const BestMap& from) {
  for (const auto& [alpha, pair] : from) {
    auto it = into.find(alpha);
    if (it == into.end() || pair < it->second)
      into.insert_or_assign(alpha, pair);
  }
}

void gset_worker(Operation op, const std::vector<SweepItem>& left,
                 const std::vector<SweepItem>* right, int worker, int workers, BestMap& best) {
  for (size_t i = static_cast<size_t>(worker); i < left.size(); i += static_cast<size_t>(workers)) {
    if (right == nullptr) {
      best.emplace(alpha_fast(op, left[i], nullptr), std::pair<int, int>(static_cast<int>(i), -1));
      continue;
    }
    for (size_t j = 0; j < right->size(); ++j)
      best.emplace(alpha_fast(op, left[i], &(*right)[j]),
                   std::pair<int, int>(static_cast<int>(i), static_cast<int>(j)));
  }
}

// Same as verify_witness but without the minimality requirement, for sweeps
// over non-minimal cycle representations.
void verify_language_only(const WitnessPair& pair) {
  Dfa left = to_dfa(pair.left);
  if (asc(left) != pair.m) throw std::logic_error("sweep witness: left asc mismatch");
  Dfa right;
  const Dfa* right_ptr = nullptr;
  if (pair.right) {
    right = to_dfa(*pair.right);
    right_ptr = &right;
    if (asc(right) != pair.n.value_or(-1)) throw std::logic_error("sweep witness: right asc mismatch");
  }
  if (asc(apply_operation(pair.operation, left, right_ptr)) != pair.alpha)
    throw std::logic_error("sweep witness: result asc mismatch");
}

}  // namespace

GSet compute_gset(const SweepConfig& config) {
  bool binary = is_binary(config.operation);
  if (binary && !config.n)
    throw std::invalid_argument("binary sweep needs n");
  if (!binary && config.n)
    throw std::invalid_argument(to_string(config.operation) + " sweeps are unary; drop n");
  if (config.m < 0 || (config.n && *config.n < 0))
    throw std::invalid_argument("m and n must be nonnegative");
  if (config.max_cycle_length < 1 || config.worker_count < 1)
    throw std::invalid_argument("bounds must be positive");
  if (binary && config.m >= 1 && *config.n >= 1 &&
      config.max_cycle_length < std::max(config.m, *config.n) + 1)
    throw std::invalid_argument("max_cycle_length must be at least max(m, n) + 1");

  std::vector<SweepItem> left =
      sweep_inputs(config.m, config.max_cycle_length, config.require_minimal_inputs);
  std::vector<SweepItem> right;
  if (binary)
    right = sweep_inputs(*config.n, config.max_cycle_length, config.require_minimal_inputs);

  int workers = std::min<int>(config.worker_count, std::max<size_t>(left.size(), 1));
  std::vector<BestMap> maps(static_cast<size_t>(workers));
  if (workers == 1) {
    gset_worker(config.operation, left, binary ? &right : nullptr, 0, 1, maps[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(gset_worker, config.operation, std::cref(left),
                        binary ? &right : nullptr, w, workers, std::ref(maps[static_cast<size_t>(w)]));
    for (auto& t : pool) t.join();
  }
  BestMap best;
  for (const BestMap& map : maps) merge_best(best, map);

  GSet gset{config.operation, config.m, config.n, config.max_cycle_length, {}};
  for (const auto& [alpha, indices] : best) {
    WitnessPair pair{"sweep",
                     config.operation,
                     left[static_cast<size_t>(indices.first)].word,
                     std::nullopt,
                     config.m,
                     config.n,
                     alpha,
                     Provenance::SearchDerived};
    if (binary) pair.right = right[static_cast<size_t>(indices.second)].word;
    if (config.require_minimal_inputs)
      verify_witness(pair);
    else
      verify_language_only(pair);
    gset.attained.emplace(alpha, std::move(pair));
  }
  return gset;
}

std::optional<WitnessPair> find_unary_pair_witness(Operation op, int m, int n, int alpha,
                                                   int max_len) {
  if (!is_binary(op)) throw std::invalid_argument("pair search needs a binary operation");
  if (m < 0 || n < 0 || max_len < 1) throw std::invalid_argument("bad search bounds");

  std::vector<std::vector<SweepItem>> left(static_cast<size_t>(max_len) + 1);
  std::vector<std::vector<SweepItem>> right(static_cast<size_t>(max_len) + 1);
  for (int len = 1; len <= max_len; ++len) {
    if (m <= len)
      for (UnaryPfaWord& w : enumerate_unary_pfas(len, m, true))
        left[static_cast<size_t>(len)].push_back({w, UnaryLang::from_word(w)});
    if (n <= len)
      for (UnaryPfaWord& w : enumerate_unary_pfas(len, n, true))
        right[static_cast<size_t>(len)].push_back({w, UnaryLang::from_word(w)});
  }
  // Total length ascending, then left length, then both words lexicographically:
  // the first hit is the canonical least witness.
  for (int total = 2; total <= 2 * max_len; ++total) {
    for (int la = std::max(1, total - max_len); la <= std::min(max_len, total - 1); ++la) {
      int lb = total - la;
      for (const SweepItem& a : left[static_cast<size_t>(la)]) {
        for (const SweepItem& b : right[static_cast<size_t>(lb)]) {
          if (alpha_fast(op, a, &b) != alpha) continue;
          WitnessPair pair{"", op, a.word, b.word, m, n, alpha, Provenance::SearchDerived};
          verify_witness(pair);
          return pair;
        }
      }
    }
  }
  return std::nullopt;
}

// --- rectangle closure ------------------------------------------------------------

namespace {

// Closure under (q0,p0),(q0,p1),(q1,p0) => (q1,p1) is exactly: any two rows
// that share a column are equal as sets.
bool rectangle_closed(const std::vector<std::vector<char>>& rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t q0 = 0; q0 < rows.size(); ++q0) {
    for (size_t q1 = q0 + 1; q1 < rows.size(); ++q1) {
      bool meet = false;
      for (size_t p = 0; p < cols && !meet; ++p) meet = rows[q0][p] && rows[q1][p];
      if (meet && rows[q0] != rows[q1]) return false;
    }
  }
  return true;
}

bool cycle_pair_rectangle_closed(int k, int kp) {
  std::vector<std::vector<char>> rows(static_cast<size_t>(k),
                                      std::vector<char>(static_cast<size_t>(kp), 0));
  long long steps = std::lcm(static_cast<long long>(k), static_cast<long long>(kp));
  for (long long i = 0; i < steps; ++i)
    rows[static_cast<size_t>(i % k)][static_cast<size_t>(i % kp)] = 1;
  return rectangle_closed(rows);
}

std::vector<std::vector<char>> product_reach_rows(const Dfa& a, const Dfa& b) {
  std::vector<std::vector<char>> rows(static_cast<size_t>(a.state_count),
                                      std::vector<char>(static_cast<size_t>(b.state_count), 0));
  std::vector<std::pair<int, int>> queue{{a.initial, b.initial}};
  rows[static_cast<size_t>(a.initial)][static_cast<size_t>(b.initial)] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [p, q] = queue[head];
    for (int c = 0; c < a.alphabet_size; ++c) {
      int np = a.next(p, c), nq = b.next(q, c);
      if (rows[static_cast<size_t>(np)][static_cast<size_t>(nq)]) continue;
      rows[static_cast<size_t>(np)][static_cast<size_t>(nq)] = 1;
      queue.emplace_back(np, nq);
    }
  }
  return rows;
}

}  // namespace

// --- intersection audit -------------------------------------------------------------

namespace {

struct AuditShard {
  BestMap best;
  long long pairs = 0;
  std::pair<int, int> magic{-1, -1};
  long long divisor_violations = 0;
  std::pair<int, int> divisor_first{-1, -1};
};

void audit_worker(const std::vector<SweepItem>& left, const std::vector<SweepItem>& right,
                  int interval_lo, int interval_hi, int worker, int workers, AuditShard& shard) {
  for (size_t i = static_cast<size_t>(worker); i < left.size(); i += static_cast<size_t>(workers)) {
    for (size_t j = 0; j < right.size(); ++j) {
      UnaryLang product = combine(left[i].lang, right[j].lang, BoolOp::Intersection);
      int reachable_accepting = count_ones(product.cycle);
      int alpha = product.asc();
      ++shard.pairs;
      shard.best.emplace(alpha, std::pair<int, int>(static_cast<int>(i), static_cast<int>(j)));
      if (alpha >= interval_lo && alpha <= interval_hi && shard.magic.first < 0)
        shard.magic = {static_cast<int>(i), static_cast<int>(j)};
      bool divisor_ok = alpha == 0 ? reachable_accepting == 0 : reachable_accepting % alpha == 0;
      if (!divisor_ok) {
        ++shard.divisor_violations;
        if (shard.divisor_first.first < 0)
          shard.divisor_first = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
}

std::pair<int, int> min_pair(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first < 0) return b;
  if (b.first < 0) return a;
  return std::min(a, b);
}

WitnessPair intersection_pair(const SweepItem& a, const SweepItem& b, int m, int n,
                              const std::string& lemma) {
  int alpha = combine(a.lang, b.lang, BoolOp::Intersection).asc();
  WitnessPair pair{lemma, Operation::Intersection, a.word, b.word, m, n, alpha,
                   Provenance::SearchDerived};
  verify_witness(pair);
  return pair;
}

}  // namespace

IntersectionAudit run_intersection_audit(int m, int n, int max_len, int workers) {
  if (m < 1 || n < 1) throw std::invalid_argument("intersection audit needs m, n >= 1");
  if (max_len < std::max(m, n) + 1)
    throw std::invalid_argument("max_len must be at least max(m, n) + 1");
  if (workers < 1) workers = 1;

  std::vector<SweepItem> left = sweep_inputs(m, max_len, true);
  std::vector<SweepItem> right = sweep_inputs(n, max_len, true);
  int interval_lo = n * m - std::min(m, n) + 1;
  int interval_hi = n * m - 1;

  workers = std::min<int>(workers, std::max<size_t>(left.size(), 1));
  std::vector<AuditShard> shards(static_cast<size_t>(workers));
  if (workers == 1) {
    audit_worker(left, right, interval_lo, interval_hi, 0, 1, shards[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(audit_worker, std::cref(left), std::cref(right), interval_lo, interval_hi,
                        w, workers, std::ref(shards[static_cast<size_t>(w)]));
    for (auto& t : pool) t.join();
  }

  BestMap best;
  std::pair<int, int> magic{-1, -1}, divisor_first{-1, -1};
  IntersectionAudit audit;
  for (const AuditShard& shard : shards) {
    merge_best(best, shard.best);
    audit.pairs_checked += shard.pairs;
    audit.divisor_violations += shard.divisor_violations;
    magic = min_pair(magic, shard.magic);
    divisor_first = min_pair(divisor_first, shard.divisor_first);
  }

  audit.gset = GSet{Operation::Intersection, m, n, max_len, {}};
  for (const auto& [alpha, indices] : best)
    audit.gset.attained.emplace(
        alpha, intersection_pair(left[static_cast<size_t>(indices.first)],
                                 right[static_cast<size_t>(indices.second)], m, n, "sweep"));
  if (magic.first >= 0)
    audit.magic_hit = intersection_pair(left[static_cast<size_t>(magic.first)],
                                        right[static_cast<size_t>(magic.second)], m, n,
                                        "thm:intersection-magic");
  if (divisor_first.first >= 0) {
    const SweepItem& a = left[static_cast<size_t>(divisor_first.first)];
    const SweepItem& b = right[static_cast<size_t>(divisor_first.second)];
    UnaryLang product = combine(a.lang, b.lang, BoolOp::Intersection);
    std::ostringstream out;
    out << "asc " << product.asc() << " does not divide the " << count_ones(product.cycle)
        << " reachable accepting pairs of " << a.word.bits << " x " << b.word.bits;
    audit.first_violation = out.str();
  }
  for (int k = 1; k <= max_len && audit.rectangle_ok; ++k) {
    for (int kp = 1; kp <= max_len && audit.rectangle_ok; ++kp) {
      if (cycle_pair_rectangle_closed(k, kp)) continue;
      audit.rectangle_ok = false;
      if (audit.first_violation.empty()) {
        std::ostringstream out;
        out << "reachable pair set of cycle lengths (" << k << ", " << kp
            << ") is not rectangle closed";
        audit.first_violation = out.str();
      }
    }
  }
  return audit;
}

// --- conjectures ----------------------------------------------------------------------

ConjectureFormulaSet ConjectureFormulaSet::compute(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("formula needs m, n >= 1");
  ConjectureFormulaSet out;
  out.m = m;
  out.n = n;
  out.cap = n * m - std::min(n, m);
  for (int v = std::max(n, m); v <= n + m; ++v) out.non_magic.insert(v);
  for (int t = 1; t <= n; ++t) {
    if (n % t != 0) continue;
    for (int x = 0; x <= out.cap / t; ++x) out.non_magic.insert(t * x);
  }
  for (int t = 1; t <= m; ++t) {
    if (m % t != 0) continue;
    for (int x = 0; x <= out.cap / t; ++x) out.non_magic.insert(t * x);
  }
  return out;
}

namespace {

std::string join_set(const std::set<int>& values) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v : values) {
    if (!first) out << ", ";
    out << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string bounds_pair_echo(int m, int n, int max_len) {
  std::ostringstream out;
  out << "m=" << m << " n=" << n << " max_len=" << max_len;
  return out.str();
}

std::string bounds_state_echo(std::optional<int> m, int max_states, int max_sigma) {
  std::ostringstream out;
  if (m) out << "m=" << *m << " ";
  out << "max_states=" << max_states << " max_sigma=" << max_sigma;
  return out.str();
}

}  // namespace

ClaimReport check_conjecture_intersection(int m, int n, int max_len, int workers) {
  IntersectionAudit audit = run_intersection_audit(m, n, max_len, workers);
  ClaimReport report;
  report.claim_id = "conj:intersection";
  report.bounds = bounds_pair_echo(m, n, max_len);
  report.items_checked = audit.pairs_checked;
  report.attained = audit.gset;

  int lo = std::max(m, n) + 1;
  int hi = n * m - std::min(m, n);
  if (lo > hi) {
    report.verdict = Verdict::Pass;
    report.notes = "middle interval empty; vacuously true";
    return report;
  }
  ConjectureFormulaSet formula = ConjectureFormulaSet::compute(m, n);
  std::set<int> attained, predicted;
  for (const auto& [alpha, pair] : audit.gset.attained)
    if (alpha >= lo && alpha <= hi) attained.insert(alpha);
  for (int v : formula.non_magic)
    if (v >= lo && v <= hi) predicted.insert(v);

  std::set<int> extra, missing;
  std::set_difference(attained.begin(), attained.end(), predicted.begin(), predicted.end(),
                      std::inserter(extra, extra.end()));
  std::set_difference(predicted.begin(), predicted.end(), attained.begin(), attained.end(),
                      std::inserter(missing, missing.end()));

  std::ostringstream notes;
  notes << "middle interval [" << lo << ", " << hi << "]; attained " << join_set(attained)
        << "; predicted non-magic " << join_set(predicted) << "; ";
  if (!extra.empty()) {
    report.verdict = Verdict::Counterexample;
    report.counterexample = audit.gset.attained.at(*extra.begin());
    notes << "attained values the formula calls magic: " << join_set(extra);
  } else {
    report.verdict = Verdict::Pass;
    if (missing.empty())
      notes << "attained set equals the predicted set";
    else
      notes << "inclusion strict; predicted but unattained within bounds: " << join_set(missing);
  }
  report.notes = notes.str();
  return report;
}

ClaimReport check_conjecture_reversal(int m, int k_max, int sigma_max) {
  if (m < 2) throw std::invalid_argument("reversal conjecture applies to m >= 2");
  if (k_max < 1 || sigma_max < 2)
    throw std::invalid_argument("reversal sweeps need k_max >= 1 and at least two letters");

  std::set<std::string> seen;
  std::map<int, WitnessPair> attained;
  long long items = 0;
  for (int sigma = 2; sigma <= sigma_max; ++sigma) {
    for (int k = 1; k <= k_max; ++k) {
      for_each_pfa(k, sigma, -1, [&](const Dfa& a) {
        ++items;
        Dfa min = minimize(a);
        if (min.accepting_count() != m) return true;
        if (!seen.insert(format_automaton(min)).second) return true;
        int alpha = asc(reverse_pfa(min));
        if (!attained.count(alpha)) {
          WitnessPair pair{"conj:reversal", Operation::Reversal, min,       std::nullopt,
                           m,               std::nullopt,        alpha,     Provenance::SearchDerived};
          verify_witness(pair);
          attained.emplace(alpha, std::move(pair));
        }
        return true;
      });
    }
  }

  ClaimReport report;
  report.claim_id = "conj:reversal";
  report.bounds = bounds_state_echo(m, k_max, sigma_max);
  report.items_checked = items;
  report.attained = GSet{Operation::Reversal, m, std::nullopt, k_max, attained};

  std::set<int> values;
  for (const auto& [alpha, pair] : attained) values.insert(alpha);
  if (values.count(1)) {
    report.verdict = Verdict::Counterexample;
    report.counterexample = attained.at(1);
    report.notes = "reversal complexity 1 attained for m = " + std::to_string(m);
    return report;
  }
  long long ceiling = binom(k_max - 1, m - 1);
  std::set<int> missing;
  for (int alpha = 2; alpha <= ceiling; ++alpha)
    if (!values.count(alpha)) missing.insert(alpha);
  std::ostringstream notes;
  notes << "alpha=1 never attained; attained " << join_set(values) << " with " << seen.size()
        << " distinct languages";
  if (missing.empty()) {
    report.verdict = Verdict::Pass;
    notes << "; every value in [2, " << ceiling << "] attained";
  } else {
    report.verdict = Verdict::Inconclusive;
    notes << "; unattained in [2, " << ceiling << "]: " << join_set(missing)
          << " (bounded search cannot settle these)";
  }
  report.notes = notes.str();
  return report;
}

std::optional<int> binomial_solvability(int m, int alpha, int k_cutoff) {
  if (m < 1 || alpha < 1) return std::nullopt;
  if (m == 1) return alpha == 1 ? std::optional<int>(1) : std::nullopt;
  // alpha * k / m == C(k, m) is exactly alpha == C(k-1, m-1), which is strictly
  // increasing in k, so stop at the first overshoot.
  for (int k = m; k <= k_cutoff; ++k) {
    long long c = binom_capped(k - 1, m - 1, alpha);
    if (c == alpha) return k;
    if (c > alpha) return std::nullopt;
  }
  return std::nullopt;
}

// --- claim registry ------------------------------------------------------------------

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> table = [] {
    std::vector<ClaimInfo> t;
    auto add = [&](std::string id, std::string description, VerifyBounds defaults, int m_max,
                   int n_max) {
      t.push_back({std::move(id), std::move(description), defaults, m_max, n_max});
    };
    VerifyBounds b;

    b = {};
    b.max_len = 10;
    add("thm:intersection-magic",
        "unary permutation intersections never attain a value in [nm-min(n,m)+1, nm-1]; the "
        "sweep also checks rectangle closure and that asc divides the reachable accepting count",
        b, 3, 3);

    b = {};
    b.max_len = 8;
    add("cor:intersection-dfa",
        "general unary automata (tail plus cycle) never attain an intersection value in "
        "[nm-min(n,m)+2, nm-1]; reachable accepting pairs respect the tail-count bound",
        b, 3, 3);

    b = {};
    b.max_len = 12;
    add("lemma:rectangle",
        "the reachable pair set of a product of two cycles is a union of rectangles", b, 0, 0);

    b = {};
    b.max_states = 3;
    b.max_sigma = 2;
    add("explore:rectangle-binary",
        "exploratory: rectangle closure of reachable pair sets for multi-letter permutation "
        "structures; violations are reported, never counted as failures",
        b, 0, 0);

    b = {};
    b.max_states = 5;
    b.max_sigma = 2;
    add("lemma:reversal-alpha1",
        "no permutation automaton whose language has asc m >= 2 reverses to a language with asc 1",
        b, 3, 0);

    b = {};
    b.max_states = 4;
    b.max_sigma = 2;
    add("lemma:number-AR",
        "every state of a minimal permutation automaton lies in the same number of reachable "
        "reversal subsets",
        b, 0, 0);

    b = {};
    b.max_states = 4;
    b.max_sigma = 2;
    add("lemma:AR-pfa",
        "the reachable reversal automaton of a permutation automaton is itself a permutation "
        "automaton",
        b, 0, 0);

    b = {};
    b.max_len = 10;
    add("cor:quotient-range", "unary permutation right quotients attain only values in [1, nm]", b,
        3, 3);

    b = {};
    b.max_len = 12;
    add("conj:intersection",
        "attained middle-interval intersection values lie in the conjectured non-magic set", b, 3,
        3);

    b = {};
    b.max_states = 5;
    b.max_sigma = 2;
    add("conj:reversal",
        "reversal of languages with asc m >= 2: 1 is never attained and every value in "
        "[2, C(k_max-1, m-1)] is",
        b, 3, 0);

    return t;
  }();
  return table;
}

// --- claim runners --------------------------------------------------------------------

namespace {

ClaimReport run_intersection_magic_claim(int m, int n, const VerifyBounds& b) {
  IntersectionAudit audit = run_intersection_audit(m, n, b.max_len, b.workers);
  ClaimReport report;
  report.claim_id = "thm:intersection-magic";
  report.bounds = bounds_pair_echo(m, n, b.max_len);
  report.items_checked = audit.pairs_checked;
  report.attained = audit.gset;
  if (audit.magic_hit) {
    report.verdict = Verdict::Counterexample;
    report.counterexample = audit.magic_hit;
    report.notes = "attained a value inside the proven-magic interval";
  } else if (audit.divisor_violations > 0 || !audit.rectangle_ok) {
    report.verdict = Verdict::Counterexample;
    report.notes = audit.first_violation;
  } else {
    report.verdict = Verdict::Pass;
    std::ostringstream notes;
    notes << "no attained value in [" << n * m - std::min(m, n) + 1 << ", " << n * m - 1
          << "]; divisor property and rectangle closure held on every pair";
    report.notes = notes.str();
  }
  return report;
}

// Minimal tail-plus-cycle languages with the requested complexity, ordered by
// (state count, tail length, tail bits, cycle bits).
std::vector<UnaryLang> tailed_inputs(int target_asc, int max_sc) {
  std::vector<UnaryLang> out;
  for (int total = 1; total <= max_sc; ++total) {
    for (int tail_len = 0; tail_len < total; ++tail_len) {
      int cycle_len = total - tail_len;
      for (unsigned tv = 0; tv < 1u << tail_len; ++tv) {
        for (unsigned cv = 0; cv < 1u << cycle_len; ++cv) {
          UnaryLang lang;
          lang.tail.resize(static_cast<size_t>(tail_len));
          lang.cycle.resize(static_cast<size_t>(cycle_len));
          for (int i = 0; i < tail_len; ++i)
            lang.tail[static_cast<size_t>(i)] = (tv >> (tail_len - 1 - i) & 1) != 0;
          for (int i = 0; i < cycle_len; ++i)
            lang.cycle[static_cast<size_t>(i)] = (cv >> (cycle_len - 1 - i) & 1) != 0;
          if (count_ones(lang.tail) + count_ones(lang.cycle) != target_asc) continue;
          if (!(lang.minimized() == lang)) continue;
          out.push_back(std::move(lang));
        }
      }
    }
  }
  return out;
}

WitnessPair tailed_pair(const UnaryLang& a, const UnaryLang& b, int m, int n,
                        const std::string& lemma) {
  int alpha = combine(a, b, BoolOp::Intersection).asc();
  WitnessPair pair{lemma, Operation::Intersection, to_dfa(a), to_dfa(b), m, n, alpha,
                   Provenance::SearchDerived};
  verify_witness(pair);
  return pair;
}

ClaimReport run_intersection_dfa_claim(int m, int n, const VerifyBounds& b) {
  if (m < 1 || n < 1) throw std::invalid_argument("the sweep needs m, n >= 1");
  std::vector<UnaryLang> left = tailed_inputs(m, b.max_len);
  std::vector<UnaryLang> right = tailed_inputs(n, b.max_len);
  int lo = n * m - std::min(m, n) + 2;
  int hi = n * m - 1;
  int reach_cap = n * m - std::min(m, n) + 1;

  ClaimReport report;
  report.claim_id = "cor:intersection-dfa";
  report.bounds = bounds_pair_echo(m, n, b.max_len);
  report.verdict = Verdict::Pass;

  BestMap best;
  std::pair<int, int> bad{-1, -1};
  std::string bad_note;
  for (size_t i = 0; i < left.size(); ++i) {
    for (size_t j = 0; j < right.size(); ++j) {
      UnaryLang product = combine(left[i], right[j], BoolOp::Intersection);
      int reachable_accepting = count_ones(product.tail) + count_ones(product.cycle);
      int alpha = product.asc();
      ++report.items_checked;
      best.emplace(alpha, std::pair<int, int>(static_cast<int>(i), static_cast<int>(j)));
      // An accepting tail state meets at most one partner, capping the product
      // at nm-min+1 accepting states; otherwise all accepting pairs live in the
      // cycle part and the permutation dichotomy applies.
      bool tail_accepting = count_ones(left[i].tail) + count_ones(right[j].tail) > 0;
      bool reach_ok = tail_accepting ? reachable_accepting <= reach_cap
                                     : reachable_accepting <= n * m - std::min(m, n) ||
                                           reachable_accepting == n * m;
      if (alpha >= lo && alpha <= hi && bad.first < 0) {
        bad = {static_cast<int>(i), static_cast<int>(j)};
        bad_note = "attained a value inside the proven-magic interval [" + std::to_string(lo) +
                   ", " + std::to_string(hi) + "]";
      }
      if (!reach_ok && bad.first < 0) {
        bad = {static_cast<int>(i), static_cast<int>(j)};
        bad_note = "reachable accepting count " + std::to_string(reachable_accepting) +
                   " violates the tail-count bound";
      }
    }
  }

  GSet gset{Operation::Intersection, m, n, b.max_len, {}};
  for (const auto& [alpha, indices] : best)
    gset.attained.emplace(alpha, tailed_pair(left[static_cast<size_t>(indices.first)],
                                             right[static_cast<size_t>(indices.second)], m, n,
                                             "sweep"));
  report.attained = std::move(gset);
  if (bad.first >= 0) {
    report.verdict = Verdict::Counterexample;
    report.counterexample = tailed_pair(left[static_cast<size_t>(bad.first)],
                                        right[static_cast<size_t>(bad.second)], m, n,
                                        "cor:intersection-dfa");
    report.notes = bad_note;
  } else {
    report.notes = "no attained value in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                   "]; reachable accepting counts respected the tail-count bound";
  }
  return report;
}

ClaimReport run_rectangle_claim(const VerifyBounds& b) {
  ClaimReport report;
  report.claim_id = "lemma:rectangle";
  report.bounds = "cycle lengths <= " + std::to_string(b.max_len);
  report.verdict = Verdict::Pass;
  for (int k = 1; k <= b.max_len; ++k) {
    for (int kp = 1; kp <= b.max_len; ++kp) {
      ++report.items_checked;
      if (cycle_pair_rectangle_closed(k, kp)) continue;
      report.verdict = Verdict::Counterexample;
      report.notes = "cycle lengths (" + std::to_string(k) + ", " + std::to_string(kp) +
                     ") give a reachable pair set that is not rectangle closed";
      return report;
    }
  }
  report.notes = "every reachable pair set is a union of rectangles";
  return report;
}

bool admits_minimal_accepting_set(Dfa a) {
  for (unsigned mask = 0; mask < 1u << a.state_count; ++mask) {
    for (int s = 0; s < a.state_count; ++s)
      a.accepting[static_cast<size_t>(s)] = (mask >> s & 1) != 0;
    if (minimize(a).state_count == a.state_count) return true;
  }
  return false;
}

ClaimReport run_rectangle_binary_claim(const VerifyBounds& b) {
  int sigma = std::max(2, b.max_sigma);
  std::vector<Dfa> structures;
  for (int k = 1; k <= b.max_states; ++k) {
    for_each_pfa(k, sigma, 0, [&](const Dfa& a) {
      if (admits_minimal_accepting_set(a)) structures.push_back(a);
      return true;
    });
  }

  ClaimReport report;
  report.claim_id = "explore:rectangle-binary";
  report.bounds = bounds_state_echo(std::nullopt, b.max_states, sigma);
  long long violations = 0;
  std::string first;
  for (const Dfa& a : structures) {
    for (const Dfa& other : structures) {
      ++report.items_checked;
      if (rectangle_closed(product_reach_rows(a, other))) continue;
      ++violations;
      if (first.empty())
        first = "first violating pair:\n" + format_automaton(a) + "--\n" + format_automaton(other);
    }
  }
  if (violations == 0) {
    report.verdict = Verdict::Pass;
    report.notes = "rectangle closure held for every minimal-admitting structure pair "
                   "(open question; bounded evidence only)";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.notes = std::to_string(violations) +
                   " structure pairs violate rectangle closure; the unary argument does not "
                   "carry over as stated (open question, reported without failing)\n" +
                   first;
  }
  return report;
}

ClaimReport run_reversal_alpha1_claim(int m, const VerifyBounds& b) {
  if (m < 2) throw std::invalid_argument("the reversal floor applies to m >= 2");
  if (b.max_sigma < 2) throw std::invalid_argument("reversal sweeps need at least two letters");

  ClaimReport report;
  report.claim_id = "lemma:reversal-alpha1";
  report.bounds = bounds_state_echo(m, b.max_states, b.max_sigma);
  report.verdict = Verdict::Pass;

  std::set<std::string> seen;
  std::set<int> attained;
  for (int sigma = 2; sigma <= b.max_sigma && !report.counterexample; ++sigma) {
    for (int k = 1; k <= b.max_states && !report.counterexample; ++k) {
      for_each_pfa(k, sigma, -1, [&](const Dfa& a) {
        ++report.items_checked;
        Dfa min = minimize(a);
        if (min.accepting_count() != m) return true;
        if (!seen.insert(format_automaton(min)).second) return true;
        int alpha = asc(reverse_pfa(min));
        attained.insert(alpha);
        if (alpha != 1) return true;
        WitnessPair pair{"lemma:reversal-alpha1", Operation::Reversal, min, std::nullopt,
                         m,                       std::nullopt,        1,   Provenance::SearchDerived};
        verify_witness(pair);
        report.counterexample = std::move(pair);
        return false;
      });
    }
  }
  if (report.counterexample) {
    report.verdict = Verdict::Counterexample;
    report.notes = "a permutation automaton with asc " + std::to_string(m) +
                   " reversed to complexity 1";
  } else {
    report.notes = std::to_string(seen.size()) +
                   " distinct languages; reversal complexities attained " + join_set(attained);
  }
  return report;
}

ClaimReport run_number_ar_claim(const VerifyBounds& b) {
  ClaimReport report;
  report.claim_id = "lemma:number-AR";
  report.bounds = bounds_state_echo(std::nullopt, b.max_states, b.max_sigma);
  report.verdict = Verdict::Pass;
  for (int sigma = 1; sigma <= b.max_sigma && report.notes.empty(); ++sigma) {
    for (int k = 1; k <= b.max_states && report.notes.empty(); ++k) {
      for_each_pfa(k, sigma, -1, [&](const Dfa& a) {
        if (minimize(a).state_count != a.state_count) return true;  // minimal PFAs only
        ++report.items_checked;
        PfaReversal reversal = build_reversal(a);
        std::vector<int> counts(static_cast<size_t>(k), 0);
        for (const std::vector<int>& subset : reversal.subsets)
          for (int q : subset) ++counts[static_cast<size_t>(q)];
        if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) ==
            counts.end())
          return true;
        report.verdict = Verdict::Counterexample;
        report.notes = "subset membership counts differ across states for:\n" + format_automaton(a);
        return false;
      });
    }
  }
  if (report.verdict == Verdict::Pass)
    report.notes = "subset membership count is constant across states for every minimal "
                   "permutation automaton";
  return report;
}

ClaimReport run_ar_pfa_claim(const VerifyBounds& b) {
  ClaimReport report;
  report.claim_id = "lemma:AR-pfa";
  report.bounds = bounds_state_echo(std::nullopt, b.max_states, b.max_sigma);
  report.verdict = Verdict::Pass;
  for (int sigma = 1; sigma <= b.max_sigma && report.notes.empty(); ++sigma) {
    for (int k = 1; k <= b.max_states && report.notes.empty(); ++k) {
      for_each_pfa(k, sigma, -1, [&](const Dfa& a) {
        ++report.items_checked;
        if (is_permutation(build_reversal(a).dfa)) return true;
        report.verdict = Verdict::Counterexample;
        report.notes = "reversal automaton is not a permutation automaton for:\n" +
                       format_automaton(a);
        return false;
      });
    }
  }
  if (report.verdict == Verdict::Pass)
    report.notes = "every reversal automaton is a permutation automaton";
  return report;
}

ClaimReport run_quotient_range_claim(int m, int n, const VerifyBounds& b) {
  SweepConfig config;
  config.operation = Operation::RightQuotient;
  config.m = m;
  config.n = n;
  config.max_cycle_length = b.max_len;
  config.worker_count = b.workers;
  GSet gset = compute_gset(config);

  ClaimReport report;
  report.claim_id = "cor:quotient-range";
  report.bounds = bounds_pair_echo(m, n, b.max_len);
  report.items_checked =
      static_cast<long long>(sweep_inputs(m, b.max_len, true).size()) *
      static_cast<long long>(sweep_inputs(n, b.max_len, true).size());
  report.verdict = Verdict::Pass;
  for (const auto& [alpha, pair] : gset.attained) {
    if (alpha >= 1 && alpha <= n * m) continue;
    report.verdict = Verdict::Counterexample;
    report.counterexample = pair;
    report.notes = "attained " + std::to_string(alpha) + " outside [1, " + std::to_string(n * m) +
                   "]";
    break;
  }
  if (report.verdict == Verdict::Pass)
    report.notes = "every attained value lies in [1, " + std::to_string(n * m) + "]";
  report.attained = std::move(gset);
  return report;
}

}  // namespace

std::vector<ClaimReport> verify_claim(const std::string& claim_id, const VerifyBounds& bounds) {
  const ClaimInfo* info = nullptr;
  for (const ClaimInfo& candidate : claim_registry())
    if (candidate.id == claim_id) info = &candidate;
  if (info == nullptr) throw std::invalid_argument("unknown claim id: " + claim_id);

  bool pair_grid = info->default_n_max > 0;
  bool m_grid = !pair_grid && info->default_m_max > 0;

  std::vector<int> ms, ns;
  if (pair_grid) {
    if (bounds.m)
      ms = {*bounds.m};
    else
      for (int m = 1; m <= info->default_m_max; ++m) ms.push_back(m);
    if (bounds.n)
      ns = {*bounds.n};
    else
      for (int n = 1; n <= info->default_n_max; ++n) ns.push_back(n);
  } else if (m_grid) {
    if (bounds.m)
      ms = {*bounds.m};
    else
      for (int m = 2; m <= info->default_m_max; ++m) ms.push_back(m);
  }

  std::vector<ClaimReport> reports;
  auto run_point = [&](std::optional<int> m, std::optional<int> n) {
    if (claim_id == "thm:intersection-magic")
      reports.push_back(run_intersection_magic_claim(*m, *n, bounds));
    else if (claim_id == "cor:intersection-dfa")
      reports.push_back(run_intersection_dfa_claim(*m, *n, bounds));
    else if (claim_id == "lemma:rectangle")
      reports.push_back(run_rectangle_claim(bounds));
    else if (claim_id == "explore:rectangle-binary")
      reports.push_back(run_rectangle_binary_claim(bounds));
    else if (claim_id == "lemma:reversal-alpha1")
      reports.push_back(run_reversal_alpha1_claim(*m, bounds));
    else if (claim_id == "lemma:number-AR")
      reports.push_back(run_number_ar_claim(bounds));
    else if (claim_id == "lemma:AR-pfa")
      reports.push_back(run_ar_pfa_claim(bounds));
    else if (claim_id == "cor:quotient-range")
      reports.push_back(run_quotient_range_claim(*m, *n, bounds));
    else if (claim_id == "conj:intersection")
      reports.push_back(check_conjecture_intersection(*m, *n, bounds.max_len, bounds.workers));
    else if (claim_id == "conj:reversal")
      reports.push_back(check_conjecture_reversal(*m, bounds.max_states, bounds.max_sigma));
  };

  if (pair_grid) {
    for (int m : ms)
      for (int n : ns) run_point(m, n);
  } else if (m_grid) {
    for (int m : ms) run_point(m, std::nullopt);
  } else {
    run_point(std::nullopt, std::nullopt);
  }
  return reports;
}

}  // namespace asclab
