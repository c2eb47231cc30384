#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irr/digraph.hpp"
#include "irr/irredundance.hpp"
#include "irr/reduction.hpp"
#include "irr/search.hpp"

namespace irr {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

json to_json(const Digraph& g);
json to_json(const BadEdgeWitness& w);
json to_json(const IrredundanceReport& r);
json to_json(const std::vector<ContractionOutcome>& trace);
json to_json(const SearchReport& r);
json to_json(const TheoremVerdict& v);
json to_json(const BipartiteSweepReport& r);
json to_json(const BoundTable& t);

/// Top-level report. `seconds` absent serializes timing as null.
json make_report(const std::string& command, const std::optional<Digraph>& input, json result,
                 std::optional<double> seconds);

/// Structural problems with a report document; empty when it conforms.
std::vector<std::string> report_schema_violations(const json& report);

/// Re-checks every bad-edge witness in a `check` report against `g`.
bool witnesses_reverify(const json& report, const Digraph& g);

}  // namespace irr
