#include "asclab/json_io.hpp"

#include <sstream>

namespace asclab {

namespace {

nlohmann::json spec_json(const AutomatonSpec& spec) {
  return {{"kind", std::holds_alternative<UnaryPfaWord>(spec) ? "word" : "dfa"},
          {"text", to_text(spec)}};
}

}  // namespace

nlohmann::json to_json(const WitnessPair& pair) {
  nlohmann::json out{{"lemma_id", pair.lemma_id},
                     {"operation", to_string(pair.operation)},
                     {"left", spec_json(pair.left)},
                     {"right", nullptr},
                     {"m", pair.m},
                     {"n", nullptr},
                     {"alpha", pair.alpha},
                     {"provenance", to_string(pair.provenance)}};
  if (pair.right) out["right"] = spec_json(*pair.right);
  if (pair.n) out["n"] = *pair.n;
  return out;
}

nlohmann::json to_json(const GSet& gset) {
  nlohmann::json attained = nlohmann::json::array();
  for (const auto& [alpha, pair] : gset.attained)
    attained.push_back({{"alpha", alpha}, {"witness", to_json(pair)}});
  nlohmann::json out{{"operation", to_string(gset.operation)},
                     {"m", gset.m},
                     {"n", nullptr},
                     {"max_cycle_length", gset.max_cycle_length},
                     {"attained", std::move(attained)}};
  if (gset.n) out["n"] = *gset.n;
  return out;
}

nlohmann::json to_json(const ClaimReport& report) {
  nlohmann::json out{{"claim_id", report.claim_id},
                     {"bounds", report.bounds},
                     {"verdict", to_string(report.verdict)},
                     {"items_checked", report.items_checked},
                     {"counterexample", nullptr},
                     {"attained", nullptr},
                     {"notes", report.notes}};
  if (report.counterexample) out["counterexample"] = to_json(*report.counterexample);
  if (report.attained) out["attained"] = to_json(*report.attained);
  return out;
}

nlohmann::json output_document(const std::string& command, nlohmann::json args,
                               nlohmann::json payload, std::optional<long long> timing_ms) {
  nlohmann::json out{{"schema_version", "asclab/1"},
                     {"command", command},
                     {"args", std::move(args)},
                     {"payload", std::move(payload)}};
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out;
}

namespace {

std::string csv_cell(const std::string& raw) {
  std::string flat;
  for (char c : raw) {
    if (c == '\n')
      flat += "\\n";
    else
      flat += c;
  }
  if (flat.find_first_of(",\"") == std::string::npos) return flat;
  std::string quoted = "\"";
  for (char c : flat) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string md_cell(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c == '\n')
      out += "<br>";
    else if (c == '|')
      out += "\\|";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string gset_csv(const GSet& gset) {
  std::ostringstream out;
  out << "# asclab/1\n";
  out << "alpha,left,right,lemma,provenance\n";
  for (const auto& [alpha, pair] : gset.attained) {
    out << alpha << ',' << csv_cell(to_text(pair.left)) << ','
        << (pair.right ? csv_cell(to_text(*pair.right)) : std::string()) << ','
        << csv_cell(pair.lemma_id) << ',' << to_string(pair.provenance) << '\n';
  }
  return out.str();
}

std::string gset_markdown(const GSet& gset) {
  std::ostringstream out;
  out << "# asclab/1\n\n";
  out << "| alpha | left | right | lemma | provenance |\n";
  out << "| --- | --- | --- | --- | --- |\n";
  for (const auto& [alpha, pair] : gset.attained) {
    out << "| " << alpha << " | " << md_cell(to_text(pair.left)) << " | "
        << (pair.right ? md_cell(to_text(*pair.right)) : std::string()) << " | "
        << md_cell(pair.lemma_id) << " | " << to_string(pair.provenance) << " |\n";
  }
  return out.str();
}

}  // namespace asclab
