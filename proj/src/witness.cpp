#include "asclab/witness.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "asclab/minimize.hpp"
#include "asclab/ops.hpp"
#include "asclab/search.hpp"
#include "asclab/text_format.hpp"

namespace asclab {

std::string to_string(Operation op) {
  switch (op) {
    case Operation::Complement: return "complement";
    case Operation::Union: return "union";
    case Operation::Intersection: return "intersection";
    case Operation::Difference: return "difference";
    case Operation::Star: return "star";
    case Operation::Plus: return "plus";
    case Operation::Reversal: return "reversal";
    case Operation::RightQuotient: return "right-quotient";
  }
  return "?";
}

std::optional<Operation> operation_from_string(const std::string& name) {
  if (name == "complement") return Operation::Complement;
  if (name == "union") return Operation::Union;
  if (name == "intersection") return Operation::Intersection;
  if (name == "difference") return Operation::Difference;
  if (name == "star") return Operation::Star;
  if (name == "plus") return Operation::Plus;
  if (name == "reversal") return Operation::Reversal;
  if (name == "right-quotient" || name == "quotient") return Operation::RightQuotient;
  return std::nullopt;
}

bool is_binary(Operation op) {
  switch (op) {
    case Operation::Union:
    case Operation::Intersection:
    case Operation::Difference:
    case Operation::RightQuotient: return true;
    default: return false;
  }
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::StatedFamily: return "stated-family";
    case Provenance::DerivedFamily: return "derived-family";
    case Provenance::SearchDerived: return "search-derived";
  }
  return "?";
}

Dfa to_dfa(const AutomatonSpec& spec) {
  if (const auto* word = std::get_if<UnaryPfaWord>(&spec)) return decode(*word);
  return std::get<Dfa>(spec);
}

std::string to_text(const AutomatonSpec& spec) {
  std::string text = std::visit([](const auto& value) { return format_automaton(value); }, spec);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

Dfa apply_operation(Operation op, const Dfa& left, const Dfa* right) {
  if (is_binary(op) && right == nullptr)
    throw std::logic_error("binary operation needs a right operand");
  switch (op) {
    case Operation::Complement: return complement(left);
    case Operation::Union: return product(left, *right, BoolOp::Union);
    case Operation::Intersection: return product(left, *right, BoolOp::Intersection);
    case Operation::Difference: return product(left, *right, BoolOp::Difference);
    case Operation::Star: return star(left);
    case Operation::Plus: return plus(left);
    case Operation::Reversal: return reverse_pfa(left);
    case Operation::RightQuotient: return right_quotient(left, *right);
  }
  throw std::logic_error("unhandled operation");
}

namespace {

std::string describe(const WitnessPair& pair) {
  std::ostringstream out;
  out << to_string(pair.operation) << " m=" << pair.m;
  if (pair.n) out << " n=" << *pair.n;
  out << " alpha=" << pair.alpha << " [" << pair.lemma_id << "]";
  return out.str();
}

void require(bool condition, const WitnessPair& pair, const std::string& what) {
  if (!condition) throw std::logic_error("witness failed verification (" + what + "): " + describe(pair));
}

UnaryPfaWord word_of(const std::string& bits) { return make_word(bits); }

std::string repeat(const std::string& chunk, int times) {
  std::string out;
  out.reserve(chunk.size() * std::max(times, 0));
  for (int i = 0; i < times; ++i) out += chunk;
  return out;
}

WitnessPair checked(WitnessPair pair) {
  verify_witness(pair);
  return pair;
}

}  // namespace

void verify_witness(const WitnessPair& pair) {
  Dfa left = to_dfa(pair.left);
  Dfa left_min = minimize(left);
  require(left_min.state_count == left.state_count, pair, "left operand not minimal");
  require(left_min.accepting_count() == pair.m, pair, "left asc != m");

  Dfa right;
  if (is_binary(pair.operation)) {
    require(pair.right.has_value(), pair, "missing right operand");
    require(pair.n.has_value(), pair, "missing n");
    right = to_dfa(*pair.right);
    Dfa right_min = minimize(right);
    require(right_min.state_count == right.state_count, pair, "right operand not minimal");
    require(right_min.accepting_count() == *pair.n, pair, "right asc != n");
  }

  Dfa result = apply_operation(pair.operation, left, is_binary(pair.operation) ? &right : nullptr);
  require(asc(result) == pair.alpha, pair, "result asc != alpha");
}

// --- complement ---------------------------------------------------------------

WitnessPair witness_complement(int m, int alpha) {
  if (m < 0 || alpha < 0) throw std::invalid_argument("m and alpha must be nonnegative");
  if (m == 0) {
    if (alpha != 1)
      throw MagicNumberError("thm:complement-table",
                             "complement of the empty language is everything: alpha must be 1");
    return checked({"thm:complement-table", Operation::Complement, word_of("0"), std::nullopt, 0,
                    std::nullopt, 1, Provenance::StatedFamily});
  }
  if (alpha == 0) {
    if (m != 1)
      throw MagicNumberError("thm:complement-table",
                             "complement has asc 0 only for the full language (m = 1)");
    return checked({"thm:complement-table", Operation::Complement, word_of("1"), std::nullopt, 1,
                    std::nullopt, 0, Provenance::StatedFamily});
  }
  // One block of accepting states: the complement keeps the same cycle with the
  // other block accepting, and a contiguous block is never shift-invariant.
  UnaryPfaWord left = word_of(repeat("1", m) + repeat("0", alpha));
  return checked({"thm:complement-table", Operation::Complement, left, std::nullopt, m,
                  std::nullopt, alpha, Provenance::DerivedFamily});
}

// --- star / plus ----------------------------------------------------------------

namespace {

// Residue family whose closure has accepting complexity alpha (m, alpha >= 1).
UnaryPfaWord star_family_word(int m, int alpha) {
  if (alpha == 1) {
    // residues 1..m mod m+1; the closure is everything.
    return word_of("0" + repeat("1", m));
  }
  if (m == 1) {
    // Single residue 2 mod 2*alpha - 3 (alpha >= 3): the closure misses exactly
    // the odd lengths below the modulus, leaving alpha - 1 accepting tail
    // positions plus the cycle state.
    std::string bits(static_cast<size_t>(2 * alpha - 3), '0');
    bits[2] = '1';
    return UnaryPfaWord{bits};
  }
  // residues {2} and {2(alpha-1)+i : 1 <= i <= m-1} mod 2(alpha-1)+m+1
  int modulus = 2 * (alpha - 1) + m + 1;
  std::string bits(static_cast<size_t>(modulus), '0');
  bits[2] = '1';
  for (int i = 1; i <= m - 1; ++i) bits[static_cast<size_t>(2 * (alpha - 1) + i)] = '1';
  return UnaryPfaWord{bits};
}

}  // namespace

WitnessPair witness_star(int m, int alpha) {
  if (m < 0 || alpha < 0) throw std::invalid_argument("m and alpha must be nonnegative");
  if (m == 0) {
    if (alpha != 1)
      throw MagicNumberError("thm:star-table",
                             "the closure of the empty language is {empty word}: alpha must be 1");
    return checked({"thm:star-table", Operation::Star, word_of("0"), std::nullopt, 0, std::nullopt,
                    1, Provenance::StatedFamily});
  }
  if (alpha == 0)
    throw MagicNumberError("thm:star-table",
                           "a closure always contains the empty word, so asc is at least 1");
  if (m == 1 && alpha == 2)
    // A one-accepting-class cycle language is a single residue r mod c. Its
    // closure with exactly two accepting states would be {0} plus a full
    // shifted lattice {n >= K : gcd(r,c) | n}, which forces r | c and collapses
    // to one accepting state. Confirmed by exhaustive search over cycles.
    throw MagicNumberError("thm:star-table",
                           "no single-accepting-residue cycle language has a closure with "
                           "exactly two accepting states");
  return checked({"thm:star-table", Operation::Star, star_family_word(m, alpha), std::nullopt, m,
                  std::nullopt, alpha, Provenance::StatedFamily});
}

WitnessPair witness_plus(int m, int alpha) {
  if (m < 0 || alpha < 0) throw std::invalid_argument("m and alpha must be nonnegative");
  if (m == 0) {
    if (alpha != 0)
      throw MagicNumberError("cor:plus-table", "the plus of the empty language is empty");
    return checked({"cor:plus-table", Operation::Plus, word_of("0"), std::nullopt, 0, std::nullopt,
                    0, Provenance::StatedFamily});
  }
  if (alpha == 0)
    throw MagicNumberError("cor:plus-table", "the plus of a nonempty language is nonempty");
  if (m == 1 && alpha == 1)
    // Odd lengths: the plus is every nonempty word. The alpha + 1 star family
    // does not exist here (two accepting states are unreachable for closures
    // of one-residue languages), so this case needs its own witness.
    return checked({"cor:plus-table", Operation::Plus, word_of("01"), std::nullopt, 1,
                    std::nullopt, 1, Provenance::DerivedFamily});
  // The star families avoid the empty word, so dropping it from the closure
  // removes exactly one accepting state: reuse the family one alpha higher.
  return checked({"cor:plus-table", Operation::Plus, star_family_word(m, alpha + 1), std::nullopt,
                  m, std::nullopt, alpha, Provenance::DerivedFamily});
}

// --- binary operations ----------------------------------------------------------

namespace {

WitnessPair search_pair(Operation op, int m, int n, int alpha, const std::string& lemma,
                        const WitnessLimits& limits, WitnessCache* cache) {
  if (cache) {
    if (auto hit = cache->lookup(op, m, n, alpha, limits.max_len)) {
      WitnessPair pair = *hit;
      pair.lemma_id = lemma;
      return pair;
    }
  }
  auto found = find_unary_pair_witness(op, m, n, alpha, limits.max_len);
  if (!found)
    throw SearchExhausted("no " + to_string(op) + " witness for m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) +
                          " within cycle length " + std::to_string(limits.max_len));
  found->lemma_id = lemma;
  if (cache) cache->store(*found, limits.max_len);
  return *found;
}

}  // namespace

WitnessPair witness_intersection(int m, int n, int alpha, const WitnessLimits& limits,
                                 WitnessCache* cache) {
  if (m < 1 || n < 1) throw std::invalid_argument("intersection witnesses need m, n >= 1");
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  int lo = std::min(m, n), hi = std::max(m, n), nm = n * m;
  if (alpha > nm)
    throw MagicNumberError("bound:intersection-product",
                           "intersection asc is at most n*m (every accepting state of the result "
                           "comes from an accepting pair of the product)");
  if (alpha > nm - lo && alpha < nm)
    throw MagicNumberError("thm:intersection-magic",
                           "no unary permutation-automaton pair attains an intersection asc in "
                           "[nm-min(n,m)+1, nm-1]");
  if (alpha <= hi) {
    // Interleaved-block pair: the intersection keeps alpha of the hi accepting
    // states and pads the cycle so nothing else aligns.
    std::string big = repeat("1" + repeat("0", lo), alpha) +
                      repeat(repeat("0", lo) + "1", hi - alpha) + repeat("0", lo + 1);
    // With lo == 1 and hi == 2*alpha the block pattern gains a half-turn
    // symmetry and stops being primitive; one extra pad block breaks it.
    if (lo == 1 && hi == 2 * alpha) big += repeat("0", lo + 1);
    std::string small = repeat("1", lo) + "0";
    UnaryPfaWord w_big = word_of(big), w_small = word_of(small);
    bool big_is_left = m == hi;
    return checked({"lemma:intersection-lower-interval", Operation::Intersection,
                    big_is_left ? w_big : w_small, big_is_left ? w_small : w_big, m, n, alpha,
                    Provenance::StatedFamily});
  }
  if (alpha == nm) {
    // Coprime cycle lengths m+n and n+m+1 make every accepting pair reachable.
    UnaryPfaWord left = word_of(repeat("1", m) + repeat("0", n));
    UnaryPfaWord right = word_of(repeat("1", n) + repeat("0", m + 1));
    return checked({"lemma:intersection-nm", Operation::Intersection, left, right, m, n, nm,
                    Provenance::StatedFamily});
  }
  return search_pair(Operation::Intersection, m, n, alpha, "conj:intersection", limits, cache);
}

WitnessPair witness_difference(int m, int n, int alpha, const WitnessLimits& limits,
                               WitnessCache* cache) {
  if (m < 1 || n < 1) throw std::invalid_argument("difference witnesses need m, n >= 1");
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (alpha <= m) {
    std::string w = repeat(repeat("0", n) + "1", alpha) + repeat("1" + repeat("0", n), m - alpha) +
                    repeat("0", n + 1);
    std::string v = repeat("1", n) + "0";
    return checked({"lemma:diff-lower-range", Operation::Difference, word_of(w), word_of(v), m, n,
                    alpha, Provenance::StatedFamily});
  }
  if (alpha % m == 0) {
    int x = alpha / m;
    int k = 1;
    while (std::gcd(m + k, x + n) != 1) ++k;
    UnaryPfaWord left = word_of(repeat("1", m) + repeat("0", k));
    UnaryPfaWord right = word_of(repeat("0", x) + repeat("1", n));
    return checked({"lemma:diff-upper-range-less", Operation::Difference, left, right, m, n, alpha,
                    Provenance::StatedFamily});
  }
  return search_pair(Operation::Difference, m, n, alpha, "lemma:diff-upper-range-n1", limits,
                     cache);
}

WitnessPair witness_union(int m, int n, int alpha, const WitnessLimits& limits,
                          WitnessCache* cache) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (m == 0 || n == 0) {
    int other = std::max(m, n);
    if (alpha != other)
      throw MagicNumberError("cor:union-table",
                             "union with the empty language keeps the other language");
    UnaryPfaWord empty = word_of("0");
    UnaryPfaWord block = other == 0 ? empty : word_of(repeat("1", other) + "0");
    return checked({"cor:union-table", Operation::Union, m == 0 ? empty : block,
                    m == 0 ? block : empty, m, n, alpha, Provenance::StatedFamily});
  }
  if (alpha == 0)
    throw MagicNumberError("cor:union-table", "a union of nonempty languages is nonempty");
  std::string lemma = "thm:union-mid-range";
  if (alpha <= std::min(m, n)) lemma = "thm:union-lower-range";
  if (alpha >= std::max(m, n)) lemma = "lemma:union-upper-range";
  return search_pair(Operation::Union, m, n, alpha, lemma, limits, cache);
}

std::optional<int> union_stratum(int m, int n, int alpha) {
  int hi = std::max(m, n), lo = std::min(m, n);
  if (lo < 1 || alpha < hi) return std::nullopt;
  for (int i = 1; i <= alpha; ++i)
    if (std::max(i * lo, hi) <= alpha && alpha <= i * lo + hi) return i;
  return std::nullopt;
}

WitnessPair witness_quotient(int m, int n, int alpha, const WitnessLimits& limits,
                             WitnessCache* cache) {
  if (m < 1 || n < 1) throw std::invalid_argument("quotient witnesses need m, n >= 1");
  if (alpha < 1 || alpha > m * n)
    throw MagicNumberError("cor:quotient-range",
                           "right quotient attains exactly the values in [1, mn]");
  if (n == 1) {
    std::string w = repeat("1", alpha) + repeat("0", m + 1 - alpha) +
                    repeat("1" + repeat("0", m), m - alpha) + repeat("0", m + 1);
    std::string v = "01" + repeat("0", m - 1);
    return checked({"lemma:quotient-n1", Operation::RightQuotient, word_of(w), word_of(v), m, 1,
                    alpha, Provenance::StatedFamily});
  }
  return search_pair(Operation::RightQuotient, m, n, alpha, "lemma:quotient-n-geq-2", limits,
                     cache);
}

// --- reversal --------------------------------------------------------------------

namespace {

// Candidate with a full cycle, one transposition and a block of accepting
// states. The two letters generate the whole symmetric group, so the reversal
// reaches every m-subset; whether the result is minimal is checked numerically.
Dfa reversal_candidate(int k, int m) {
  std::vector<int> transitions(static_cast<size_t>(k) * 2);
  for (int s = 0; s < k; ++s) {
    transitions[static_cast<size_t>(s) * 2] = (s + 1) % k;
    int swapped = s == 0 ? 1 : (s == 1 ? 0 : s);
    transitions[static_cast<size_t>(s) * 2 + 1] = k == 1 ? 0 : swapped;
  }
  std::vector<int> accepting(m);
  std::iota(accepting.begin(), accepting.end(), 0);
  return make_dfa(k, 2, std::move(transitions), 0, accepting);
}

std::optional<WitnessPair> reversal_from(const Dfa& candidate, int m, int alpha,
                                         const std::string& lemma, Provenance provenance) {
  Dfa min = minimize(candidate);
  if (!is_permutation(min) || min.accepting_count() != m) return std::nullopt;
  if (asc(reverse_pfa(min)) != alpha) return std::nullopt;
  return WitnessPair{lemma, Operation::Reversal, min, std::nullopt, m, std::nullopt, alpha,
                     provenance};
}

}  // namespace

WitnessPair witness_reversal(int m, int alpha, const WitnessLimits& limits, WitnessCache* cache) {
  if (m < 0 || alpha < 0) throw std::invalid_argument("m and alpha must be nonnegative");
  if (m == 0) {
    if (alpha != 0)
      throw MagicNumberError("thm:reversal-table", "the reversal of the empty language is empty");
    return checked({"thm:reversal-table", Operation::Reversal, word_of("0"), std::nullopt, 0,
                    std::nullopt, 0, Provenance::StatedFamily});
  }
  if (alpha == 0)
    throw MagicNumberError("thm:reversal-table", "the reversal of a nonempty language is nonempty");
  if (m == 1) {
    if (alpha != 1)
      throw MagicNumberError("thm:reversal-table", "asc(L) = 1 forces asc of the reversal to be 1");
    return checked({"thm:reversal-table", Operation::Reversal, word_of("10"), std::nullopt, 1,
                    std::nullopt, 1, Provenance::StatedFamily});
  }
  if (alpha == 1)
    throw MagicNumberError("lemma:reversal-alpha1",
                           "no language with asc >= 2 has a reversal with asc 1");

  if (cache) {
    if (auto hit = cache->lookup(Operation::Reversal, m, std::nullopt, alpha, limits.max_states))
      return *hit;
  }

  // Subset-count construction: alpha*k/m = C(k,m) makes room for every state to
  // sit in alpha reachable subsets.
  if (auto k = binomial_solvability(m, alpha); k && *k <= limits.max_states) {
    if (auto pair = reversal_from(reversal_candidate(*k, m), m, alpha, "thm:reversal-construction",
                                  Provenance::DerivedFamily)) {
      WitnessPair result = checked(*pair);
      if (cache) cache->store(result, limits.max_states);
      return result;
    }
  }

  // Bounded search over two-letter candidates: first letter fixed to the full
  // cycle (initial-state relabeling makes this a rich slice), second letter and
  // the accepting set free.
  for (int k = std::max(2, m); k <= limits.max_states; ++k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> accepting(m);
      std::iota(accepting.begin(), accepting.end(), 0);
      // combinations of size m out of k, lexicographic
      while (true) {
        std::vector<int> transitions(static_cast<size_t>(k) * 2);
        for (int s = 0; s < k; ++s) {
          transitions[static_cast<size_t>(s) * 2] = (s + 1) % k;
          transitions[static_cast<size_t>(s) * 2 + 1] = perm[s];
        }
        Dfa candidate = make_dfa(k, 2, std::move(transitions), 0, accepting);
        if (auto pair = reversal_from(candidate, m, alpha, "conj:reversal",
                                      Provenance::SearchDerived)) {
          WitnessPair result = checked(*pair);
          if (cache) cache->store(result, limits.max_states);
          return result;
        }
        // next combination
        int i = m - 1;
        while (i >= 0 && accepting[i] == k - m + i) --i;
        if (i < 0) break;
        ++accepting[i];
        for (int j = i + 1; j < m; ++j) accepting[j] = accepting[j - 1] + 1;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  throw SearchExhausted("no reversal witness for m=" + std::to_string(m) +
                        " alpha=" + std::to_string(alpha) + " within " +
                        std::to_string(limits.max_states) + " states");
}

// --- cache -----------------------------------------------------------------------

namespace {

constexpr const char* kCacheSchema = "asclab-witness-cache/1";

nlohmann::json cache_line(const WitnessPair& pair, int bound) {
  nlohmann::json line;
  line["alpha"] = pair.alpha;
  line["bound"] = bound;
  line["left"] = to_text(pair.left);
  line["lemma_id"] = pair.lemma_id;
  line["m"] = pair.m;
  line["n"] = pair.n ? nlohmann::json(*pair.n) : nlohmann::json(nullptr);
  line["operation"] = to_string(pair.operation);
  line["provenance"] = to_string(pair.provenance);
  line["right"] = pair.right ? nlohmann::json(to_text(*pair.right)) : nlohmann::json(nullptr);
  return line;
}

std::optional<AutomatonSpec> spec_from_text(const std::string& text) {
  ParsedAutomaton parsed = parse_automaton_detail(text);
  if (parsed.word) return AutomatonSpec{*parsed.word};
  return AutomatonSpec{parsed.dfa};
}

}  // namespace

WitnessCache::WitnessCache(std::string path) : path_(std::move(path)) {}

std::optional<WitnessPair> WitnessCache::lookup(Operation op, int m, std::optional<int> n,
                                                int alpha, int bound) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  try {
    auto header = nlohmann::json::parse(line);
    if (header.value("schema", "") != kCacheSchema) return std::nullopt;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }

  std::optional<WitnessPair> best;  // last matching line wins
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto entry = nlohmann::json::parse(line);
      if (entry.value("operation", "") != to_string(op)) continue;
      if (entry.value("m", -1) != m) continue;
      if (entry.value("alpha", -1) != alpha) continue;
      if (entry.value("bound", -1) != bound) continue;
      std::optional<int> entry_n;
      if (entry.contains("n") && !entry["n"].is_null()) entry_n = entry["n"].get<int>();
      if (entry_n != n) continue;

      WitnessPair pair;
      pair.lemma_id = entry.value("lemma_id", "");
      pair.operation = op;
      auto left = spec_from_text(entry.at("left").get<std::string>());
      if (!left) continue;
      pair.left = *left;
      if (entry.contains("right") && !entry["right"].is_null()) {
        auto right = spec_from_text(entry["right"].get<std::string>());
        if (!right) continue;
        pair.right = *right;
      }
      pair.m = m;
      pair.n = n;
      pair.alpha = alpha;
      pair.provenance = Provenance::SearchDerived;
      verify_witness(pair);  // never trust the disk
      best = std::move(pair);
    } catch (const std::exception&) {
      continue;  // malformed or stale line; treat as absent
    }
  }
  return best;
}

void WitnessCache::store(const WitnessPair& pair, int bound) {
  bool fresh = !std::ifstream(path_).good();
  std::ofstream out(path_, std::ios::app);
  if (!out) return;
  if (fresh) out << nlohmann::json{{"schema", kCacheSchema}}.dump() << "\n";
  out << cache_line(pair, bound).dump() << "\n";
}

}  // namespace asclab
