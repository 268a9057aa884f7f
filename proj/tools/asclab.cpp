#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asclab/json_io.hpp"
#include "asclab/minimize.hpp"
#include "asclab/ops.hpp"
#include "asclab/search.hpp"
#include "asclab/text_format.hpp"
#include "asclab/witness.hpp"

namespace {

using namespace asclab;

struct ApplyArgs {
  std::string op;
  std::string left;
  std::string right;
  bool emit_minimized = false;
};

struct WitnessArgs {
  std::string op;
  int m = 0;
  int n = 0;
  bool n_set = false;
  int alpha = 0;
  int max_len = 14;
  int states = 7;
  std::string cache;
};

struct GsetArgs {
  std::string op;
  int m = 0;
  int n = 0;
  bool n_set = false;
  int max_len = 12;
  int workers = 1;
  bool all_words = false;
};

struct VerifyArgs {
  std::string claim;
  bool all = false;
  bool list = false;
  int m = 0;
  int n = 0;
  int max_len = 0;
  int states = 0;
  int sigma = 0;
  int workers = 0;
  bool m_set = false, n_set = false, max_len_set = false, states_set = false, sigma_set = false,
       workers_set = false;
};

struct Output {
  std::string format = "json";
  std::string out_path;
  bool timing = false;
};

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

int emit_document(const Output& output, const std::string& command, nlohmann::json args,
                  nlohmann::json payload, std::chrono::steady_clock::time_point start,
                  int exit_code) {
  long long ms = elapsed_ms(start);
  std::optional<long long> timing;
  if (output.timing) timing = ms;
  nlohmann::json doc = output_document(command, std::move(args), std::move(payload), timing);
  deliver(doc.dump(2) + "\n", output.out_path);
  std::cerr << "elapsed_ms=" << ms << "\n";
  return exit_code;
}

// Inline "word:..." text is accepted directly; anything else is a file path.
AutomatonSpec load_spec(const std::string& arg) {
  std::string text;
  if (arg.rfind("word:", 0) == 0 || arg.find('\n') != std::string::npos) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open automaton file: " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  ParsedAutomaton parsed = parse_automaton_detail(text);
  if (parsed.word) return *parsed.word;
  return parsed.dfa;
}

Operation parse_operation(const std::string& name) {
  if (name == "reversal-unary") return Operation::Reversal;
  std::optional<Operation> op = operation_from_string(name);
  if (!op) throw std::invalid_argument("unknown operation: " + name);
  return *op;
}

int run_apply(const ApplyArgs& args, const Output& output,
              std::chrono::steady_clock::time_point start) {
  bool left_quot = args.op == "left-quotient";
  Operation op = left_quot ? Operation::RightQuotient : parse_operation(args.op);
  bool binary = left_quot || is_binary(op);
  if (binary && args.right.empty())
    throw std::invalid_argument(args.op + " needs two automata");
  if (!binary && !args.right.empty())
    throw std::invalid_argument(args.op + " takes one automaton");

  Dfa left = to_dfa(load_spec(args.left));
  Dfa result;
  if (left_quot) {
    Dfa right = to_dfa(load_spec(args.right));
    result = left_quotient(left, right);
  } else if (binary) {
    Dfa right = to_dfa(load_spec(args.right));
    result = apply_operation(op, left, &right);
  } else {
    result = apply_operation(op, left, nullptr);
  }
  if (args.emit_minimized) result = minimize(result);

  nlohmann::json payload{{"automaton",
                          {{"kind", "dfa"}, {"text", to_text(AutomatonSpec{result})}}},
                         {"sc", sc(result)},
                         {"asc", asc(result)},
                         {"minimized", args.emit_minimized}};
  nlohmann::json echo{{"op", args.op},
                      {"left", args.left},
                      {"right", args.right.empty() ? nlohmann::json() : nlohmann::json(args.right)},
                      {"minimize", args.emit_minimized}};
  return emit_document(output, "apply", std::move(echo), std::move(payload), start, 0);
}

int run_witness(const WitnessArgs& args, const Output& output,
                std::chrono::steady_clock::time_point start) {
  Operation op = parse_operation(args.op);
  bool binary = is_binary(op);
  if (binary && !args.n_set) throw std::invalid_argument(args.op + " needs --n");
  if (!binary && args.n_set) throw std::invalid_argument(args.op + " has no --n");

  WitnessLimits limits{args.max_len, args.states};
  std::optional<WitnessCache> cache;
  if (!args.cache.empty()) cache.emplace(args.cache);
  WitnessCache* cache_ptr = cache ? &*cache : nullptr;

  WitnessPair pair = [&] {
    switch (op) {
      case Operation::Complement: return witness_complement(args.m, args.alpha);
      case Operation::Star: return witness_star(args.m, args.alpha);
      case Operation::Plus: return witness_plus(args.m, args.alpha);
      case Operation::Reversal: return witness_reversal(args.m, args.alpha, limits, cache_ptr);
      case Operation::Union: return witness_union(args.m, args.n, args.alpha, limits, cache_ptr);
      case Operation::Intersection:
        return witness_intersection(args.m, args.n, args.alpha, limits, cache_ptr);
      case Operation::Difference:
        return witness_difference(args.m, args.n, args.alpha, limits, cache_ptr);
      case Operation::RightQuotient:
        return witness_quotient(args.m, args.n, args.alpha, limits, cache_ptr);
    }
    throw std::invalid_argument("unknown operation: " + args.op);
  }();

  nlohmann::json echo{{"op", args.op},
                      {"m", args.m},
                      {"n", args.n_set ? nlohmann::json(args.n) : nlohmann::json()},
                      {"alpha", args.alpha},
                      {"max_len", args.max_len},
                      {"states", args.states}};
  return emit_document(output, "witness", std::move(echo), to_json(pair), start, 0);
}

int run_gset(const GsetArgs& args, const Output& output,
             std::chrono::steady_clock::time_point start) {
  Operation op = parse_operation(args.op);
  SweepConfig config;
  config.operation = op;
  config.m = args.m;
  if (args.n_set) config.n = args.n;
  config.max_cycle_length = args.max_len;
  config.worker_count = args.workers;
  config.require_minimal_inputs = !args.all_words;
  GSet gset = compute_gset(config);

  if (output.format == "csv") {
    deliver(gset_csv(gset), output.out_path);
    std::cerr << "elapsed_ms=" << elapsed_ms(start) << "\n";
    return 0;
  }
  if (output.format == "md") {
    deliver(gset_markdown(gset), output.out_path);
    std::cerr << "elapsed_ms=" << elapsed_ms(start) << "\n";
    return 0;
  }
  nlohmann::json echo{{"op", args.op},
                      {"m", args.m},
                      {"n", args.n_set ? nlohmann::json(args.n) : nlohmann::json()},
                      {"max_len", args.max_len},
                      {"all_words", args.all_words}};
  return emit_document(output, "gset", std::move(echo), to_json(gset), start, 0);
}

nlohmann::json registry_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const ClaimInfo& info : claim_registry()) {
    out.push_back({{"id", info.id},
                   {"description", info.description},
                   {"defaults",
                    {{"max_len", info.defaults.max_len},
                     {"max_states", info.defaults.max_states},
                     {"max_sigma", info.defaults.max_sigma},
                     {"workers", info.defaults.workers},
                     {"m_grid_max", info.default_m_max},
                     {"n_grid_max", info.default_n_max}}}});
  }
  return out;
}

int run_verify(const VerifyArgs& args, const Output& output,
               std::chrono::steady_clock::time_point start) {
  if (args.list) {
    nlohmann::json echo{{"list", true}};
    return emit_document(output, "verify", std::move(echo), registry_json(), start, 0);
  }
  if (args.all != args.claim.empty())
    throw std::invalid_argument("pass exactly one claim id, or --all");

  std::vector<std::string> targets;
  if (args.all)
    for (const ClaimInfo& info : claim_registry()) targets.push_back(info.id);
  else
    targets.push_back(args.claim);

  nlohmann::json payload = nlohmann::json::array();
  bool counterexample = false;
  for (const std::string& id : targets) {
    const ClaimInfo* info = nullptr;
    for (const ClaimInfo& candidate : claim_registry())
      if (candidate.id == id) info = &candidate;
    if (info == nullptr) throw std::invalid_argument("unknown claim id: " + id);
    VerifyBounds bounds = info->defaults;
    if (args.m_set) bounds.m = args.m;
    if (args.n_set) bounds.n = args.n;
    if (args.max_len_set) bounds.max_len = args.max_len;
    if (args.states_set) bounds.max_states = args.states;
    if (args.sigma_set) bounds.max_sigma = args.sigma;
    if (args.workers_set) bounds.workers = args.workers;
    for (ClaimReport& report : verify_claim(id, bounds)) {
      counterexample = counterexample || report.verdict == Verdict::Counterexample;
      payload.push_back(to_json(report));
    }
  }

  nlohmann::json echo{{"claim", args.all ? nlohmann::json("--all") : nlohmann::json(args.claim)}};
  if (args.m_set) echo["m"] = args.m;
  if (args.n_set) echo["n"] = args.n;
  if (args.max_len_set) echo["max_len"] = args.max_len;
  if (args.states_set) echo["states"] = args.states;
  if (args.sigma_set) echo["sigma"] = args.sigma;
  return emit_document(output, "verify", std::move(echo), std::move(payload), start,
                       counterexample ? 1 : 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"accepting-state complexity laboratory"};
  app.require_subcommand(1);

  ApplyArgs apply_args;
  WitnessArgs witness_args;
  GsetArgs gset_args;
  VerifyArgs verify_args;
  Output output;

  auto add_output = [&](CLI::App* sub, bool with_format) {
    if (with_format)
      sub->add_option("--format", output.format, "json, csv, or md")
          ->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out", output.out_path, "write the document to a file instead of stdout");
    sub->add_flag("--timing", output.timing, "include timing_ms in the document");
  };

  CLI::App* apply = app.add_subcommand("apply", "apply an operation to automata");
  apply->add_option("op", apply_args.op, "operation name")->required();
  apply->add_option("left", apply_args.left, "automaton file or word:<bits>")->required();
  apply->add_option("right", apply_args.right, "second automaton for binary operations");
  apply->add_flag("--minimize", apply_args.emit_minimized, "emit the minimized result");
  add_output(apply, false);

  CLI::App* witness = app.add_subcommand("witness", "generate a verified witness pair");
  witness->add_option("op", witness_args.op, "operation name")->required();
  witness->add_option("--m", witness_args.m, "left operand complexity")->required();
  CLI::Option* wn = witness->add_option("--n", witness_args.n, "right operand complexity");
  witness->add_option("--alpha", witness_args.alpha, "target complexity")->required();
  witness->add_option("--max-len", witness_args.max_len, "cycle length bound for searches");
  witness->add_option("--states", witness_args.states, "state bound for reversal searches");
  witness->add_option("--cache", witness_args.cache, "witness cache file");
  add_output(witness, false);

  CLI::App* gset = app.add_subcommand("gset", "sweep attainable complexities with witnesses");
  gset->add_option("op", gset_args.op, "operation name")->required();
  gset->add_option("--m", gset_args.m, "left operand complexity")->required();
  CLI::Option* gn = gset->add_option("--n", gset_args.n, "right operand complexity");
  gset->add_option("--max-len", gset_args.max_len, "cycle length bound");
  gset->add_option("--workers", gset_args.workers, "worker threads");
  gset->add_flag("--all-words", gset_args.all_words,
                 "sweep every cycle word, not just minimal ones");
  add_output(gset, true);

  CLI::App* verify = app.add_subcommand("verify", "check recorded claims by bounded enumeration");
  verify->add_option("claim", verify_args.claim, "claim id");
  verify->add_flag("--all", verify_args.all, "run every registered claim");
  verify->add_flag("--list", verify_args.list, "dump the claim registry");
  CLI::Option* vm = verify->add_option("--m", verify_args.m, "fix m instead of the default grid");
  CLI::Option* vn = verify->add_option("--n", verify_args.n, "fix n instead of the default grid");
  CLI::Option* vl = verify->add_option("--max-len", verify_args.max_len, "cycle length bound");
  CLI::Option* vs = verify->add_option("--states", verify_args.states, "state bound");
  CLI::Option* vg = verify->add_option("--sigma", verify_args.sigma, "alphabet bound");
  CLI::Option* vw = verify->add_option("--workers", verify_args.workers, "worker threads");
  add_output(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  witness_args.n_set = wn->count() > 0;
  gset_args.n_set = gn->count() > 0;
  verify_args.m_set = vm->count() > 0;
  verify_args.n_set = vn->count() > 0;
  verify_args.max_len_set = vl->count() > 0;
  verify_args.states_set = vs->count() > 0;
  verify_args.sigma_set = vg->count() > 0;
  verify_args.workers_set = vw->count() > 0;

  auto start = std::chrono::steady_clock::now();
  try {
    if (apply->parsed()) return run_apply(apply_args, output, start);
    if (witness->parsed()) return run_witness(witness_args, output, start);
    if (gset->parsed()) return run_gset(gset_args, output, start);
    if (verify->parsed()) return run_verify(verify_args, output, start);
    std::cerr << "missing subcommand\n";
    return 2;
  } catch (const MagicNumberError& e) {
    nlohmann::json payload{{"kind", "magic"}, {"claim_id", e.claim_id}, {"message", e.what()}};
    return emit_document(output, "error", nlohmann::json::object(), std::move(payload), start, 4);
  } catch (const SearchExhausted& e) {
    nlohmann::json payload{{"kind", "search-exhausted"}, {"message", e.what()}};
    return emit_document(output, "error", nlohmann::json::object(), std::move(payload), start, 5);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
