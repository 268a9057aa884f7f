#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asclab/dfa.hpp"
#include "asclab/minimize.hpp"
#include "asclab/unary.hpp"
#include "oracle_helpers.hpp"

using namespace asclab;
using asclab::testing::random_dfa;
using asclab::testing::random_pfa;

TEST_CASE("nerode_partition on a worked example") {
  // states 3 and 4 are interchangeable, state 5 is unreachable
  Dfa a = make_dfa(6, 2,
                   {
                       1, 2,  // 0
                       3, 4,  // 1
                       4, 3,  // 2
                       3, 3,  // 3
                       4, 4,  // 4
                       5, 5,  // 5
                   },
                   0, {3, 4});
  NerodePartition p = nerode_partition(a);
  NerodePartition expected{{{0}, {1, 2}, {3, 4}}};
  CHECK(p == expected);
  CHECK(p == nerode_oracle(a));
}

TEST_CASE("partition refinement matches the brute-force oracle") {
  std::mt19937 rng(7041);
  for (int trial = 0; trial < 400; ++trial) {
    Dfa a = random_dfa(rng, 8, 3);
    CAPTURE(trial);
    CHECK(nerode_partition(a) == nerode_oracle(a));
  }
}

TEST_CASE("minimize is canonical") {
  std::mt19937 rng(7042);
  for (int trial = 0; trial < 200; ++trial) {
    Dfa a = asclab::testing::random_dfa_over(rng, 6, 2);
    Dfa b = asclab::testing::random_dfa_over(rng, 6, 2);
    Dfa ma = minimize(a);
    Dfa mb = minimize(b);
    CAPTURE(trial);
    CHECK(equivalent(a, ma));
    CHECK(minimize(ma) == ma);
    CHECK(equivalent(a, b) == (ma == mb));
  }
}

TEST_CASE("minimize drops unreachable states") {
  Dfa a = make_dfa(3, 1, {1, 0, 2}, 0, {1, 2});
  Dfa m = minimize(a);
  CHECK(m.state_count == 2);
  CHECK(asc(a) == 1);
}

TEST_CASE("minimizing a permutation automaton keeps it a permutation") {
  std::mt19937 rng(7043);
  for (int trial = 0; trial < 200; ++trial) {
    Dfa a = random_pfa(rng, 6, 2);
    CAPTURE(trial);
    CHECK(is_permutation(minimize(a)));
  }
}

TEST_CASE("complexity conventions") {
  Dfa none = single_state_dfa(2, false);
  CHECK(sc(none) == 1);
  CHECK(asc(none) == 0);
  Dfa all = single_state_dfa(2, true);
  CHECK(sc(all) == 1);
  CHECK(asc(all) == 1);
  Dfa parity = make_dfa(2, 2, {0, 1, 1, 0}, 0, {0});
  CHECK(sc(parity) == 2);
  CHECK(asc(parity) == 1);
  // a bloated empty-language automaton still reports (1, 0)
  Dfa bloated = make_dfa(3, 1, {1, 2, 0}, 0, {});
  CHECK(sc(bloated) == 1);
  CHECK(asc(bloated) == 0);
}

TEST_CASE("sc and asc of cycle words") {
  CHECK(sc(decode(make_word("0101"))) == 2);
  CHECK(asc(decode(make_word("0101"))) == 1);
  CHECK(sc(decode(make_word("011"))) == 3);
  CHECK(asc(decode(make_word("011"))) == 2);
}
