#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asclab/unary.hpp"
#include "asclab/witness.hpp"

namespace asclab {

// --- enumeration ------------------------------------------------------------

// All length-`length` bit words with `accepting_count` ones, lexicographic.
// With minimal_only, words whose cycle automaton is not minimal are skipped.
std::vector<UnaryPfaWord> enumerate_unary_pfas(int length, int accepting_count, bool minimal_only);

// Minimal words of every length in [1, max_length] with the given number of
// ones, ordered by length then lexicographically.
std::vector<UnaryPfaWord> minimal_words_up_to(int max_length, int accepting_count);

// Permutation automata with `state_count` states over `alphabet_size` letters,
// initial state 0, accepting sets of size `accepting_count` (or every size when
// accepting_count < 0). Letters run through permutations in lexicographic
// order, accepting sets in combination order. Returns false from the callback
// to stop early; the function then returns false as well.
bool for_each_pfa(int state_count, int alphabet_size, int accepting_count,
                  const std::function<bool(const Dfa&)>& fn);
long long count_pfas(int state_count, int alphabet_size, int accepting_count);

// --- sweeps -----------------------------------------------------------------

struct SweepConfig {
  Operation operation = Operation::Intersection;
  int m = 0;
  std::optional<int> n;          // required for binary operations
  int max_cycle_length = 12;
  int worker_count = 1;
  bool require_minimal_inputs = true;
};

// Attained accepting complexities over every (ordered) pair of unary
// permutation automata with asc exactly m and n and cycle length within bound.
// Deterministic: the recorded witness per value is the least pair under
// (length, bits) ordering regardless of worker_count, and every witness is
// re-verified through the generic constructions before being returned.
GSet compute_gset(const SweepConfig& config);

// Deterministic bounded witness search used by the witness generators.
std::optional<WitnessPair> find_unary_pair_witness(Operation op, int m, int n, int alpha,
                                                   int max_len);

// --- claims -----------------------------------------------------------------

enum class Verdict { Pass, Counterexample, Inconclusive };
std::string to_string(Verdict v);

struct VerifyBounds {
  std::optional<int> m;
  std::optional<int> n;
  int max_len = 12;
  int max_states = 4;
  int max_sigma = 2;
  int workers = 1;
};

struct ClaimReport {
  std::string claim_id;
  std::string bounds;  // human-readable echo of the bounds actually used
  Verdict verdict = Verdict::Inconclusive;
  long long items_checked = 0;
  std::optional<WitnessPair> counterexample;
  std::optional<GSet> attained;
  std::string notes;
};

struct ClaimInfo {
  std::string id;
  std::string description;
  VerifyBounds defaults;
  int default_m_max = 0;  // grid upper bounds applied when bounds.m / bounds.n are unset
  int default_n_max = 0;
};

const std::vector<ClaimInfo>& claim_registry();

// Runs the named claim at the given bounds. When the claim ranges over (m, n)
// and the bounds leave them unset, the registry grid produces one report per
// pair. Throws std::invalid_argument for unknown claim ids.
std::vector<ClaimReport> verify_claim(const std::string& claim_id, const VerifyBounds& bounds);

// Intersection sweep with the per-pair structural checks folded in: no attained
// value inside [nm - min(n,m) + 1, nm - 1], accepting counts of every product
// divisible by its asc, and rectangle closure of the reachable pair set.
struct IntersectionAudit {
  GSet gset;
  long long pairs_checked = 0;
  std::optional<WitnessPair> magic_hit;
  long long divisor_violations = 0;
  bool rectangle_ok = true;
  std::string first_violation;  // description of the first structural failure, if any
};

IntersectionAudit run_intersection_audit(int m, int n, int max_len, int workers);

// Conjectured non-magic set for unary intersection at (m, n):
//   [max(n,m), n+m]
//   union { t*x : t divides n, 0 <= x <= (nm - min(n,m)) / t }
//   union the symmetric set with m and n swapped.
struct ConjectureFormulaSet {
  int m = 0;
  int n = 0;
  int cap = 0;  // nm - min(n, m)
  std::set<int> non_magic;

  static ConjectureFormulaSet compute(int m, int n);
};

// Compares the sweep-attained values inside the open middle interval
// [max(m,n)+1, nm - min(m,n)] against the conjectured non-magic set.
// Counterexample = some attained value the conjecture calls magic.
ClaimReport check_conjecture_intersection(int m, int n, int max_len, int workers = 1);

// Sweeps permutation automata with asc(L) == m and records asc of the reversed
// language. Counterexample = reversal complexity 1; PASS needs every value in
// [2, C(k_max-1, m-1)] attained, otherwise the verdict stays inconclusive.
ClaimReport check_conjecture_reversal(int m, int k_max, int sigma_max);

// Least k in [m, k_cutoff] with alpha * k / m == C(k, m) in exact arithmetic
// (equivalently alpha == C(k-1, m-1)), or nullopt.
std::optional<int> binomial_solvability(int m, int alpha, int k_cutoff = 64);

}  // namespace asclab
