#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "asclab/search.hpp"
#include "asclab/witness.hpp"

namespace asclab {

// JSON shapes for the CLI. nlohmann's default object keeps keys sorted, which
// is what makes repeated runs byte-identical; nothing here may iterate an
// unordered container.

nlohmann::json to_json(const WitnessPair& pair);
nlohmann::json to_json(const GSet& gset);
nlohmann::json to_json(const ClaimReport& report);

// Envelope written to stdout: schema_version "asclab/1", the subcommand name,
// an echo of the effective arguments, and the payload. timing_ms is optional
// so that default output stays stable across runs.
nlohmann::json output_document(const std::string& command, nlohmann::json args,
                               nlohmann::json payload,
                               std::optional<long long> timing_ms = std::nullopt);

std::string gset_csv(const GSet& gset);
std::string gset_markdown(const GSet& gset);

}  // namespace asclab
