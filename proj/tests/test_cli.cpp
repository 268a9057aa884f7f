#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef ASCLAB_CLI_PATH
#error "ASCLAB_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(ASCLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  CliResult result;
  result.out = out;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

nlohmann::json parse_doc(const CliResult& result) {
  REQUIRE_FALSE(result.out.empty());
  auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.at("schema_version") == "asclab/1");
  return doc;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/asclab_cli_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("apply reports complexities") {
  CliResult r = run_cli("apply intersection word:10 word:100");
  CHECK(r.exit_code == 0);
  auto doc = parse_doc(r);
  CHECK(doc.at("command") == "apply");
  CHECK(doc.at("payload").at("asc") == 1);
  CHECK(doc.at("payload").at("sc") == 6);

  CliResult c = run_cli("apply complement word:1");
  CHECK(c.exit_code == 0);
  CHECK(parse_doc(c).at("payload").at("asc") == 0);
}

TEST_CASE("apply star on the empty language") {
  std::string path = write_temp("empty.aut",
                                "dfa\nstates 1\nalphabet 1\ninitial 0\naccepting\ntrans 0 0 0\n");
  CliResult r = run_cli("apply star " + path);
  CHECK(r.exit_code == 0);
  auto payload = parse_doc(r).at("payload");
  CHECK(payload.at("asc") == 1);
  CHECK(payload.at("sc") == 2);
}

TEST_CASE("apply left-quotient takes the divisor first") {
  // dividing lengths 1 mod 4 by lengths 2 mod 4 leaves lengths 3 mod 4
  CliResult r = run_cli("apply left-quotient word:0010 word:0100 --minimize");
  CHECK(r.exit_code == 0);
  auto payload = parse_doc(r).at("payload");
  CHECK(payload.at("asc") == 1);
  CHECK(payload.at("sc") == 4);
  std::string text = payload.at("automaton").at("text");
  CHECK(text.find("accepting 3") != std::string::npos);
}

TEST_CASE("apply validates arity and input syntax") {
  CHECK(run_cli("apply union word:10").exit_code == 2);
  CHECK(run_cli("apply complement word:10 word:11").exit_code == 2);
  CHECK(run_cli("apply complement word:abc").exit_code == 2);
  CHECK(run_cli("apply frobnicate word:1").exit_code == 2);
}

TEST_CASE("apply rejects reversal of a non-permutation automaton") {
  std::string path = write_temp(
      "merged.aut", "dfa\nstates 2\nalphabet 1\ninitial 0\naccepting 1\ntrans 0 0 1\ntrans 1 0 1\n");
  CliResult r = run_cli("apply reversal-unary " + path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("witness produces verified pairs") {
  CliResult r = run_cli("witness star --m 2 --alpha 1");
  CHECK(r.exit_code == 0);
  auto payload = parse_doc(r).at("payload");
  CHECK(payload.at("lemma_id") == "thm:star-table");
  CHECK(payload.at("left").at("text") == "word:011");
  CHECK(payload.at("provenance") == "stated-family");
}

TEST_CASE("witness magic numbers exit with code 4") {
  CliResult r = run_cli("witness quotient --m 2 --n 1 --alpha 3");
  CHECK(r.exit_code == 4);
  auto payload = parse_doc(r).at("payload");
  CHECK(payload.at("kind") == "magic");
  CHECK(payload.at("claim_id") == "cor:quotient-range");

  CliResult rev = run_cli("witness reversal --m 2 --alpha 1");
  CHECK(rev.exit_code == 4);
  CHECK(parse_doc(rev).at("payload").at("claim_id") == "lemma:reversal-alpha1");
}

TEST_CASE("witness search exhaustion exits with code 5") {
  CliResult r = run_cli("witness intersection --m 3 --n 2 --alpha 4 --max-len 4");
  CHECK(r.exit_code == 5);
  CHECK(parse_doc(r).at("payload").at("kind") == "search-exhausted");
}

TEST_CASE("witness argument validation") {
  CHECK(run_cli("witness union --m 2 --alpha 3").exit_code == 2);     // binary needs --n
  CHECK(run_cli("witness star --m 2 --n 2 --alpha 1").exit_code == 2);  // unary rejects --n
}

TEST_CASE("gset lists attained values with witnesses") {
  CliResult r = run_cli("gset reversal-unary --m 3");
  CHECK(r.exit_code == 0);
  auto payload = parse_doc(r).at("payload");
  REQUIRE(payload.at("attained").size() == 1);
  CHECK(payload.at("attained")[0].at("alpha") == 3);

  CliResult q = run_cli("gset quotient --m 1 --n 1 --max-len 6");
  CHECK(q.exit_code == 0);
  auto attained = parse_doc(q).at("payload").at("attained");
  REQUIRE(attained.size() == 1);
  CHECK(attained[0].at("alpha") == 1);
}

TEST_CASE("gset emits csv and markdown tables") {
  CliResult csv = run_cli("gset intersection --m 2 --n 2 --max-len 8 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("# asclab/1\n", 0) == 0);
  CHECK(csv.out.find("alpha,left,right,lemma,provenance") != std::string::npos);
  CliResult md = run_cli("gset intersection --m 2 --n 2 --max-len 8 --format md");
  CHECK(md.exit_code == 0);
  CHECK(md.out.rfind("# asclab/1\n", 0) == 0);
  CHECK(md.out.find("| alpha |") != std::string::npos);
}

TEST_CASE("gset rejects misuse") {
  CHECK(run_cli("gset complement --m 2 --n 2").exit_code == 2);
  CHECK(run_cli("gset intersection --m 2").exit_code == 2);
  CHECK(run_cli("apply complement word:1 --format csv").exit_code == 2);
}

TEST_CASE("verify --list names every claim") {
  CliResult r = run_cli("verify --list");
  CHECK(r.exit_code == 0);
  auto payload = parse_doc(r).at("payload");
  CHECK(payload.size() == 10);
  bool found = false;
  for (const auto& entry : payload) found = found || entry.at("id") == "thm:intersection-magic";
  CHECK(found);
}

TEST_CASE("verify runs a single claim") {
  CliResult r = run_cli("verify thm:intersection-magic --m 3 --n 2 --max-len 8");
  CHECK(r.exit_code == 0);
  auto payload = parse_doc(r).at("payload");
  REQUIRE(payload.size() == 1);
  CHECK(payload[0].at("verdict") == "PASS");
  CHECK(payload[0].at("claim_id") == "thm:intersection-magic");
}

TEST_CASE("verify needs exactly one of claim or --all") {
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("verify thm:intersection-magic --all").exit_code == 2);
  CHECK(run_cli("verify thm:no-such-claim").exit_code == 2);
}

TEST_CASE("documents are byte-identical across runs and workers") {
  std::string gset_cmd = "gset intersection --m 2 --n 2 --max-len 10";
  CliResult a = run_cli(gset_cmd + " --workers 1");
  CliResult b = run_cli(gset_cmd + " --workers 4");
  CliResult c = run_cli(gset_cmd + " --workers 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  std::string verify_cmd = "verify thm:intersection-magic --m 3 --n 2 --max-len 8";
  CliResult va = run_cli(verify_cmd + " --workers 1");
  CliResult vb = run_cli(verify_cmd + " --workers 4");
  CHECK(va.exit_code == 0);
  CHECK(va.out == vb.out);
}

TEST_CASE("--out writes the document to a file") {
  std::string path = "/tmp/asclab_cli_out.json";
  std::remove(path.c_str());
  CliResult r = run_cli("apply complement word:1 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  CHECK(doc.at("payload").at("asc") == 0);
  std::remove(path.c_str());
}

TEST_CASE("--timing adds the only nondeterministic field") {
  CliResult without = run_cli("apply complement word:1");
  CHECK_FALSE(parse_doc(without).contains("timing_ms"));
  CliResult with = run_cli("apply complement word:1 --timing");
  CHECK(parse_doc(with).contains("timing_ms"));
}
