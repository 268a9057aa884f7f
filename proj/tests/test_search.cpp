#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "asclab/minimize.hpp"
#include "asclab/search.hpp"

using namespace asclab;

namespace {

std::set<int> attained_keys(const GSet& g) {
  std::set<int> keys;
  for (const auto& [alpha, pair] : g.attained) keys.insert(alpha);
  return keys;
}

std::string signature(const GSet& g) {
  std::string out;
  for (const auto& [alpha, pair] : g.attained) {
    out += std::to_string(alpha) + "=" + to_text(pair.left);
    if (pair.right) out += "|" + to_text(*pair.right);
    out += ";";
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_unary_pfas lists words in order") {
  auto all = enumerate_unary_pfas(4, 2, false);
  REQUIRE(all.size() == 6);
  CHECK(all.front().bits == "0011");
  CHECK(all.back().bits == "1100");
  auto minimal = enumerate_unary_pfas(4, 2, true);
  REQUIRE(minimal.size() == 4);
  CHECK(minimal[0].bits == "0011");
  CHECK(minimal[1].bits == "0110");
  CHECK(minimal[2].bits == "1001");
  CHECK(minimal[3].bits == "1100");
  CHECK(enumerate_unary_pfas(3, 0, false).size() == 1);
  CHECK(enumerate_unary_pfas(3, 0, true).empty());  // "000" collapses to "0"
  CHECK(enumerate_unary_pfas(1, 0, true).size() == 1);
  CHECK_THROWS_AS(enumerate_unary_pfas(0, 0, false), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_unary_pfas(4, 5, false), std::invalid_argument);
}

TEST_CASE("minimal_words_up_to goes by length then bits") {
  auto words = minimal_words_up_to(4, 2);
  REQUIRE(words.size() == 7);
  CHECK(words.front().bits == "011");
  CHECK(words.back().bits == "1100");
  for (size_t i = 1; i < words.size(); ++i) CHECK(word_less(words[i - 1], words[i]));
  for (const auto& w : words) {
    CHECK(w.ones() == 2);
    CHECK(is_unary_pfa_minimal(w));
  }
}

TEST_CASE("for_each_pfa visits exactly the counted automata") {
  long long seen = 0;
  for_each_pfa(3, 2, 2, [&](const Dfa& a) {
    CHECK(is_permutation(a));
    CHECK(a.accepting_count() == 2);
    CHECK(a.alphabet_size == 2);
    CHECK(a.initial == 0);
    ++seen;
    return true;
  });
  CHECK(seen == count_pfas(3, 2, 2));
  CHECK(count_pfas(3, 2, 2) == 108);
  CHECK(count_pfas(3, 2, -1) == 288);
  CHECK(count_pfas(3, 2, 0) == 36);
  CHECK(count_pfas(2, 1, 1) == 4);

  long long all_sizes = 0;
  for_each_pfa(3, 2, -1, [&](const Dfa&) {
    ++all_sizes;
    return true;
  });
  CHECK(all_sizes == 288);

  long long stopped = 0;
  bool finished = for_each_pfa(3, 2, -1, [&](const Dfa&) {
    ++stopped;
    return stopped < 5;
  });
  CHECK_FALSE(finished);
  CHECK(stopped == 5);
}

TEST_CASE("compute_gset is worker-count independent") {
  SweepConfig config{Operation::Union, 2, 2, 8, 1, true};
  GSet one = compute_gset(config);
  config.worker_count = 4;
  GSet four = compute_gset(config);
  CHECK(signature(one) == signature(four));
  CHECK(attained_keys(one).count(1) == 1);
  CHECK(attained_keys(one).count(4) == 1);
}

TEST_CASE("compute_gset validates its configuration") {
  CHECK_THROWS_AS(compute_gset({Operation::Intersection, 2, std::nullopt, 8, 1, true}),
                  std::invalid_argument);  // binary needs n
  CHECK_THROWS_AS(compute_gset({Operation::Complement, 2, 2, 8, 1, true}),
                  std::invalid_argument);  // unary rejects n
  CHECK_THROWS_AS(compute_gset({Operation::Intersection, 3, 3, 2, 1, true}),
                  std::invalid_argument);  // bound below max(m, n) + 1
}

TEST_CASE("unary-operation sweeps") {
  GSet rev = compute_gset({Operation::Reversal, 3, std::nullopt, 8, 1, true});
  CHECK(attained_keys(rev) == std::set<int>{3});  // reversal fixes unary languages
  GSet comp = compute_gset({Operation::Complement, 2, std::nullopt, 6, 1, true});
  CHECK(attained_keys(comp).count(1) == 1);
  CHECK(attained_keys(comp).count(4) == 1);
}

TEST_CASE("witness search returns the least pair and respects bounds") {
  auto found = find_unary_pair_witness(Operation::Intersection, 2, 2, 4, 8);
  REQUIRE(found.has_value());
  REQUIRE(found->right.has_value());
  CHECK(to_text(found->left) == "word:011");
  CHECK(to_text(*found->right) == "word:0011");
  CHECK(found->provenance == Provenance::SearchDerived);
  // 3 sits in the forbidden middle interval for (2, 2)
  CHECK_FALSE(find_unary_pair_witness(Operation::Intersection, 2, 2, 3, 12).has_value());
}

TEST_CASE("intersection audit at (2, 2)") {
  IntersectionAudit audit = run_intersection_audit(2, 2, 8, 2);
  CHECK(audit.pairs_checked == 5476);
  CHECK_FALSE(audit.magic_hit.has_value());
  CHECK(audit.divisor_violations == 0);
  CHECK(audit.rectangle_ok);
  CHECK(audit.first_violation.empty());
  CHECK(attained_keys(audit.gset) == std::set<int>{0, 1, 2, 4});
  CHECK_THROWS_AS(run_intersection_audit(0, 2, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_intersection_audit(2, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("conjectured non-magic set") {
  ConjectureFormulaSet f = ConjectureFormulaSet::compute(3, 2);
  CHECK(f.cap == 4);
  CHECK(f.non_magic == std::set<int>{0, 1, 2, 3, 4, 5});
  ConjectureFormulaSet square = ConjectureFormulaSet::compute(4, 4);
  CHECK(square.cap == 12);
  CHECK(square.non_magic.count(9) == 1);
  CHECK(square.non_magic.count(13) == 0);
}

TEST_CASE("intersection conjecture check passes at small grids") {
  ClaimReport report = check_conjecture_intersection(3, 2, 10);
  CHECK(report.verdict == Verdict::Pass);
  CHECK(report.notes.find("equal") != std::string::npos);
  REQUIRE(report.attained.has_value());
  auto keys = attained_keys(*report.attained);
  CHECK(keys.count(4) == 1);  // the whole middle interval for (3, 2)
  CHECK(keys.count(5) == 0);  // start of the impossible stretch
  // middle interval empty: vacuous pass
  ClaimReport vacuous = check_conjecture_intersection(1, 1, 6);
  CHECK(vacuous.verdict == Verdict::Pass);
  CHECK(vacuous.notes.find("vacuous") != std::string::npos);
}

TEST_CASE("reversal conjecture check on the small population") {
  ClaimReport report = check_conjecture_reversal(2, 4, 2);
  CHECK(report.verdict == Verdict::Pass);
  CHECK(report.items_checked == 9522);
  REQUIRE(report.attained.has_value());
  CHECK(attained_keys(*report.attained) == std::set<int>{2, 3});
  CHECK_THROWS_AS(check_conjecture_reversal(1, 4, 2), std::invalid_argument);
}

TEST_CASE("binomial solvability") {
  CHECK(binomial_solvability(2, 5) == 6);
  CHECK(binomial_solvability(3, 6) == 5);
  CHECK_FALSE(binomial_solvability(3, 7).has_value());
  CHECK(binomial_solvability(1, 1) == 1);
  CHECK_FALSE(binomial_solvability(1, 2).has_value());
  CHECK(binomial_solvability(4, 1) == 4);
  for (int alpha = 2; alpha <= 10; ++alpha) CHECK(binomial_solvability(2, alpha) == alpha + 1);
}

TEST_CASE("claim registry") {
  const auto& registry = claim_registry();
  CHECK(registry.size() == 10);
  std::set<std::string> ids;
  for (const auto& info : registry) ids.insert(info.id);
  for (const char* id :
       {"thm:intersection-magic", "cor:intersection-dfa", "lemma:rectangle",
        "explore:rectangle-binary", "lemma:reversal-alpha1", "lemma:number-AR", "lemma:AR-pfa",
        "cor:quotient-range", "conj:intersection", "conj:reversal"})
    CHECK(ids.count(id) == 1);
  CHECK_THROWS_AS(verify_claim("thm:no-such-claim", {}), std::invalid_argument);
}

TEST_CASE("single-cell claim runs") {
  VerifyBounds cell;
  cell.m = 3;
  cell.n = 2;
  cell.max_len = 8;
  auto reports = verify_claim("thm:intersection-magic", cell);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::Pass);
  CHECK(reports[0].claim_id == "thm:intersection-magic");
  CHECK(reports[0].items_checked > 0);

  auto quotient = verify_claim("cor:quotient-range", cell);
  REQUIRE(quotient.size() == 1);
  CHECK(quotient[0].verdict == Verdict::Pass);

  VerifyBounds tailed;
  tailed.m = 2;
  tailed.n = 2;
  tailed.max_len = 6;
  auto dfa_claim = verify_claim("cor:intersection-dfa", tailed);
  REQUIRE(dfa_claim.size() == 1);
  CHECK(dfa_claim[0].verdict == Verdict::Pass);
}

TEST_CASE("grid claim runs produce one report per cell") {
  VerifyBounds bounds;
  bounds.max_len = 6;
  auto reports = verify_claim("thm:intersection-magic", bounds);
  CHECK(reports.size() == 9);  // default 3 x 3 grid
  for (const auto& r : reports) CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("structural lemma claims pass at small bounds") {
  VerifyBounds small;
  small.max_states = 3;
  small.max_sigma = 2;
  for (const char* id : {"lemma:number-AR", "lemma:AR-pfa"}) {
    auto reports = verify_claim(id, small);
    REQUIRE(reports.size() == 1);
    CAPTURE(id);
    CHECK(reports[0].verdict == Verdict::Pass);
  }
  VerifyBounds alpha1;
  alpha1.m = 2;
  alpha1.max_states = 4;
  auto reports = verify_claim("lemma:reversal-alpha1", alpha1);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::Pass);

  VerifyBounds rect;
  rect.max_len = 8;
  auto rectangle = verify_claim("lemma:rectangle", rect);
  REQUIRE(rectangle.size() == 1);
  CHECK(rectangle[0].verdict == Verdict::Pass);
}

TEST_CASE("the binary rectangle question stays exploratory") {
  VerifyBounds small;
  small.max_states = 3;
  small.max_sigma = 2;
  auto reports = verify_claim("explore:rectangle-binary", small);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict != Verdict::Counterexample);
}
