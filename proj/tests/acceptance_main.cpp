// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asclab/minimize.hpp"
#include "asclab/ops.hpp"
#include "asclab/search.hpp"
#include "asclab/unary.hpp"
#include "asclab/unary_lang.hpp"
#include "asclab/witness.hpp"
#include "oracle_helpers.hpp"

using namespace asclab;

namespace {

int failures = 0;

void criterion(int index, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("%s  %2d. %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", index, label.c_str(),
              static_cast<long long>(ms), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool expect(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
  std::string command = std::string(ASCLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool generator_matches(std::string& detail, int m, int n_or_minus1, int alpha, bool expected,
                       const std::function<WitnessPair()>& call, const std::string& tag) {
  bool got = true;
  try {
    WitnessPair pair = call();
    verify_witness(pair);
    if (pair.alpha != alpha) {
      detail = tag + ": wrong alpha";
      return false;
    }
  } catch (const MagicNumberError&) {
    got = false;
  }
  if (got != expected) {
    std::ostringstream note;
    note << tag << " m=" << m;
    if (n_or_minus1 >= 0) note << " n=" << n_or_minus1;
    note << " alpha=" << alpha << ": " << (got ? "witness where magic expected"
                                               : "magic where witness expected");
    detail = note.str();
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "minimization matches the brute-force refinement oracle", [](std::string& detail) {
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 1000; ++trial) {
      Dfa a = asclab::testing::random_dfa(rng, 8, 3);
      if (!expect(nerode_partition(a) == nerode_oracle(a), detail,
                  "partition mismatch at trial " + std::to_string(trial)))
        return false;
      if (!expect(equivalent(a, minimize(a)), detail,
                  "minimize changed the language at trial " + std::to_string(trial)))
        return false;
    }
    return true;
  });

  criterion(2, "cycle codec round trips and minimality matches sc on every word up to 12",
            [](std::string& detail) {
              for (int len = 1; len <= 12; ++len)
                for (const auto& bits : asclab::testing::all_bit_words(len)) {
                  UnaryPfaWord w{bits};
                  Dfa a = decode(w);
                  if (!expect(encode(a) == w, detail, "codec failed on " + bits)) return false;
                  if (!expect(is_unary_pfa_minimal(w) == (sc(a) == len), detail,
                              "minimality mismatch on " + bits))
                    return false;
                }
              return true;
            });

  criterion(3, "complement attainability table over m, alpha <= 8", [](std::string& detail) {
    for (int m = 0; m <= 8; ++m)
      for (int alpha = 0; alpha <= 8; ++alpha) {
        bool expected = m == 0 ? alpha == 1 : (alpha == 0 ? m == 1 : true);
        if (!generator_matches(detail, m, -1, alpha, expected,
                               [&] { return witness_complement(m, alpha); }, "complement"))
          return false;
      }
    return true;
  });

  criterion(4, "star and plus families over m <= 6", [](std::string& detail) {
    for (int m = 0; m <= 6; ++m)
      for (int alpha = 0; alpha <= 10; ++alpha) {
        bool star_expected = m == 0 ? alpha == 1 : (m == 1 ? alpha == 1 || alpha >= 3 : alpha >= 1);
        if (!generator_matches(detail, m, -1, alpha, star_expected,
                               [&] { return witness_star(m, alpha); }, "star"))
          return false;
        bool plus_expected = m == 0 ? alpha == 0 : alpha >= 1;
        if (!generator_matches(detail, m, -1, alpha, plus_expected,
                               [&] { return witness_plus(m, alpha); }, "plus"))
          return false;
      }
    // the one hole in the star table: closures of one-residue languages never
    // have exactly two accepting states (checked here up to cycle length 14)
    for (int len = 1; len <= 14; ++len)
      for (int r = 0; r < len; ++r) {
        std::string bits(static_cast<size_t>(len), '0');
        bits[static_cast<size_t>(r)] = '1';
        if (!expect(asc(star(decode(UnaryPfaWord{bits}))) != 2, detail,
                    "star asc 2 reached from " + bits))
          return false;
      }
    return true;
  });

  criterion(5, "difference families: low range and multiples of m", [](std::string& detail) {
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n)
        for (int alpha = 0; alpha <= m; ++alpha) {
          WitnessPair pair = witness_difference(m, n, alpha);
          verify_witness(pair);
          if (!expect(pair.lemma_id == "lemma:diff-lower-range", detail,
                      "unexpected lemma in the low range"))
            return false;
        }
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        for (int x = 2; x <= 3; ++x) {
          WitnessPair pair = witness_difference(m, n, m * x);
          verify_witness(pair);
          if (!expect(pair.lemma_id == "lemma:diff-upper-range-less", detail,
                      "unexpected lemma for alpha = m * x"))
            return false;
        }
    return true;
  });

  criterion(6, "intersection families: low interval and the full product", [](std::string& detail) {
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) {
        for (int alpha = 0; alpha <= std::max(m, n); ++alpha) {
          WitnessPair pair = witness_intersection(m, n, alpha);
          verify_witness(pair);
          if (!expect(pair.lemma_id == "lemma:intersection-lower-interval", detail,
                      "unexpected lemma below max(m, n)"))
            return false;
        }
        WitnessPair full = witness_intersection(m, n, m * n);
        verify_witness(full);
        // with min(m, n) == 1 the product bound collapses into the low interval
        std::string expected_lemma =
            m * n > std::max(m, n) ? "lemma:intersection-nm" : "lemma:intersection-lower-interval";
        if (!expect(full.lemma_id == expected_lemma, detail, "unexpected lemma at alpha = nm"))
          return false;
      }
    return true;
  });

  criterion(7, "intersection audit: magic interval, divisor fact, rectangles (m, n <= 4, len 12)",
            [](std::string& detail) {
              for (int m = 1; m <= 4; ++m)
                for (int n = 1; n <= 4; ++n) {
                  IntersectionAudit audit = run_intersection_audit(m, n, 12, 4);
                  std::string cell = "(" + std::to_string(m) + ", " + std::to_string(n) + ")";
                  if (!expect(!audit.magic_hit.has_value(), detail,
                              "magic interval hit at " + cell))
                    return false;
                  if (!expect(audit.divisor_violations == 0, detail,
                              "divisor violations at " + cell))
                    return false;
                  if (!expect(audit.rectangle_ok, detail,
                              "rectangle failure at " + cell + ": " + audit.first_violation))
                    return false;
                }
              return true;
            });

  criterion(8, "intersection conjecture inclusion holds on the sweep grid (m, n <= 4, len 12)",
            [](std::string& detail) {
              for (int m = 1; m <= 4; ++m)
                for (int n = 1; n <= 4; ++n) {
                  ClaimReport report = check_conjecture_intersection(m, n, 12, 4);
                  if (!expect(report.verdict == Verdict::Pass, detail,
                              "verdict " + to_string(report.verdict) + " at (" +
                                  std::to_string(m) + ", " + std::to_string(n) +
                                  "): " + report.notes))
                    return false;
                }
              return true;
            });

  criterion(9, "reversal: construction equivalence, subset structure, alpha-1 gap, binomials",
            [](std::string& detail) {
              for (int len = 1; len <= 10; ++len)
                for (const auto& bits : asclab::testing::all_bit_words(len)) {
                  Dfa a = decode(UnaryPfaWord{bits});
                  if (!expect(equivalent(reverse_pfa(a), reverse_generic(a)), detail,
                              "unary reversal mismatch on " + bits))
                    return false;
                }
              for (int k = 1; k <= 4; ++k) {
                bool ok = for_each_pfa(k, 2, -1, [&](const Dfa& a) {
                  if (!equivalent(reverse_pfa(a), reverse_generic(a))) return false;
                  if (!is_permutation(build_reversal(a).dfa)) return false;
                  return true;
                });
                if (!expect(ok, detail, "binary reversal mismatch at k=" + std::to_string(k)))
                  return false;
              }
              VerifyBounds structural;
              structural.max_states = 4;
              structural.max_sigma = 2;
              for (const char* id : {"lemma:number-AR", "lemma:AR-pfa"}) {
                auto reports = verify_claim(id, structural);
                if (!expect(reports.size() == 1 && reports[0].verdict == Verdict::Pass, detail,
                            std::string(id) + " did not pass"))
                  return false;
              }
              for (int m = 2; m <= 3; ++m) {
                VerifyBounds alpha1;
                alpha1.m = m;
                alpha1.max_states = 5;
                alpha1.max_sigma = 2;
                auto reports = verify_claim("lemma:reversal-alpha1", alpha1);
                if (!expect(reports.size() == 1 && reports[0].verdict == Verdict::Pass, detail,
                            "reversal alpha-1 gap failed at m=" + std::to_string(m)))
                  return false;
              }
              for (int alpha = 2; alpha <= 10; ++alpha)
                if (!expect(binomial_solvability(2, alpha) == alpha + 1, detail,
                            "binomial solvability wrong at alpha=" + std::to_string(alpha)))
                  return false;
              return true;
            });

  criterion(10, "quotient: n=1 family, sweep range [1, mn], left equals right on unary pairs",
            [](std::string& detail) {
              for (int m = 1; m <= 6; ++m)
                for (int alpha = 1; alpha <= m; ++alpha) {
                  WitnessPair pair = witness_quotient(m, 1, alpha);
                  verify_witness(pair);
                  if (!expect(pair.lemma_id == "lemma:quotient-n1", detail,
                              "unexpected lemma for n=1"))
                    return false;
                }
              for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) {
                  GSet g = compute_gset({Operation::RightQuotient, m, n, 12, 4, true});
                  for (const auto& [alpha, pair] : g.attained)
                    if (!expect(alpha >= 1 && alpha <= m * n, detail,
                                "quotient value outside [1, mn] at (" + std::to_string(m) + ", " +
                                    std::to_string(n) + ")"))
                      return false;
                }
              for (int la = 1; la <= 8; ++la)
                for (int lb = 1; lb <= 8; ++lb)
                  for (const auto& ba : asclab::testing::all_bit_words(la))
                    for (const auto& bb : asclab::testing::all_bit_words(lb)) {
                      Dfa a = decode(UnaryPfaWord{ba});
                      Dfa b = decode(UnaryPfaWord{bb});
                      if (!expect(equivalent(right_quotient(a, b), left_quotient(b, a)), detail,
                                  "quotient sides differ on " + ba + " / " + bb))
                        return false;
                    }
              return true;
            });

  criterion(11, "union sweep attains [1, 8] with verified witnesses and consistent strata",
            [](std::string& detail) {
              std::set<int> seen;
              for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) {
                  GSet g = compute_gset({Operation::Union, m, n, 12, 4, true});
                  int hi = std::max(m, n);
                  for (const auto& [alpha, pair] : g.attained) {
                    seen.insert(alpha);
                    verify_witness(pair);
                    auto stratum = union_stratum(m, n, alpha);
                    if (alpha >= hi) {
                      if (!expect(stratum.has_value(), detail,
                                  "missing stratum for attained alpha=" + std::to_string(alpha)))
                        return false;
                      int lo = std::min(m, n);
                      if (!expect(std::max(*stratum * lo, hi) <= alpha &&
                                      alpha <= *stratum * lo + hi,
                                  detail, "stratum interval misses alpha"))
                        return false;
                    } else if (!expect(!stratum.has_value(), detail,
                                       "stratum below max(m, n)")) {
                      return false;
                    }
                  }
                }
              for (int alpha = 1; alpha <= 8; ++alpha)
                if (!expect(seen.count(alpha) == 1, detail,
                            "alpha=" + std::to_string(alpha) + " not attained on the grid"))
                  return false;
              return true;
            });

  criterion(12, "command-line output is byte-identical across runs and worker counts",
            [](std::string& detail) {
              int code_a = 0, code_b = 0, code_c = 0;
              std::string gset_cmd = "gset intersection --m 2 --n 2 --max-len 10";
              std::string a = run_cli_capture(gset_cmd + " --workers 1", code_a);
              std::string b = run_cli_capture(gset_cmd + " --workers 4", code_b);
              std::string c = run_cli_capture(gset_cmd + " --workers 1", code_c);
              if (!expect(code_a == 0 && code_b == 0 && code_c == 0, detail,
                          "gset command failed"))
                return false;
              if (!expect(!a.empty() && a == b && a == c, detail, "gset output drifted"))
                return false;
              std::string verify_cmd = "verify thm:intersection-magic --m 3 --n 2 --max-len 10";
              std::string va = run_cli_capture(verify_cmd + " --workers 1", code_a);
              std::string vb = run_cli_capture(verify_cmd + " --workers 4", code_b);
              if (!expect(code_a == 0 && code_b == 0, detail, "verify command failed"))
                return false;
              if (!expect(!va.empty() && va == vb, detail, "verify output drifted"))
                return false;
              return true;
            });

  if (failures == 0)
    std::printf("acceptance: all 12 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
