#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "asclab/dfa.hpp"
#include "asclab/unary.hpp"

namespace asclab {

enum class Operation {
  Complement,
  Union,
  Intersection,
  Difference,
  Star,
  Plus,
  Reversal,
  RightQuotient,
};

std::string to_string(Operation op);
std::optional<Operation> operation_from_string(const std::string& name);
bool is_binary(Operation op);

// How a witness was obtained: a family stated verbatim by the claim it backs,
// a family adapted from one (e.g. shifted parameters), or bounded search.
enum class Provenance { StatedFamily, DerivedFamily, SearchDerived };
std::string to_string(Provenance p);

// Requested accepting complexity is provably unattainable for these inputs.
// `claim_id` names the registry entry (or documented bound) proving it.
struct MagicNumberError : std::runtime_error {
  std::string claim_id;
  MagicNumberError(std::string claim, const std::string& message)
      : std::runtime_error(message), claim_id(std::move(claim)) {}
};

// Bounded search ran out of candidates without finding a witness.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AutomatonSpec = std::variant<UnaryPfaWord, Dfa>;

Dfa to_dfa(const AutomatonSpec& spec);
std::string to_text(const AutomatonSpec& spec);

// A concrete input (pair) certifying that `operation` applied to languages of
// accepting complexity m (and n) yields accepting complexity alpha. Generators
// verify every pair on construction through the generic automaton route.
struct WitnessPair {
  std::string lemma_id;
  Operation operation = Operation::Complement;
  AutomatonSpec left;
  std::optional<AutomatonSpec> right;
  int m = 0;
  std::optional<int> n;
  int alpha = 0;
  Provenance provenance = Provenance::StatedFamily;
};

// Bounds for the search-derived fallbacks.
struct WitnessLimits {
  int max_len = 14;    // unary cycle length cap
  int max_states = 7;  // reversal candidates: PFA state cap
};

// Applies the operation through the generic constructions (never a sweep fast
// path). For reversal this is reverse_pfa and requires a permutation automaton.
Dfa apply_operation(Operation op, const Dfa& left, const Dfa* right);

// Recomputes every claim a pair makes: asc/minimality of the inputs and the asc
// of the result. Throws std::logic_error on any mismatch.
void verify_witness(const WitnessPair& pair);

class WitnessCache;

WitnessPair witness_complement(int m, int alpha);
WitnessPair witness_star(int m, int alpha);
WitnessPair witness_plus(int m, int alpha);
WitnessPair witness_union(int m, int n, int alpha, const WitnessLimits& limits = {},
                          WitnessCache* cache = nullptr);
WitnessPair witness_intersection(int m, int n, int alpha, const WitnessLimits& limits = {},
                                 WitnessCache* cache = nullptr);
WitnessPair witness_difference(int m, int n, int alpha, const WitnessLimits& limits = {},
                               WitnessCache* cache = nullptr);
WitnessPair witness_quotient(int m, int n, int alpha, const WitnessLimits& limits = {},
                             WitnessCache* cache = nullptr);
WitnessPair witness_reversal(int m, int alpha, const WitnessLimits& limits = {},
                             WitnessCache* cache = nullptr);

// For alpha >= max(m, n): the least i >= 1 whose interval
// [max(i * min(m,n), max(m,n)), i * min(m,n) + max(m,n)] contains alpha.
// Consecutive intervals overlap or touch, so some i always exists there.
std::optional<int> union_stratum(int m, int n, int alpha);

// Attained accepting complexities of one operation at fixed (m, n), with the
// least verifying witness per value.
struct GSet {
  Operation operation = Operation::Intersection;
  int m = 0;
  std::optional<int> n;
  int max_cycle_length = 0;
  std::map<int, WitnessPair> attained;
};

// Append-only JSON-lines store for search-derived witnesses, keyed by
// (operation, m, n, alpha, bound). Later lines win on duplicate keys; unknown
// or malformed lines are skipped, so concurrent appends of identical results
// are harmless.
class WitnessCache {
 public:
  explicit WitnessCache(std::string path);

  std::optional<WitnessPair> lookup(Operation op, int m, std::optional<int> n, int alpha,
                                    int bound) const;
  void store(const WitnessPair& pair, int bound);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace asclab
