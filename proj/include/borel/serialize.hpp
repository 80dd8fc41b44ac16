#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "borel/betti.hpp"
#include "borel/bounds.hpp"
#include "borel/hilbert.hpp"
#include "borel/standard_pairs.hpp"

namespace borel {

using Json = nlohmann::json;

Json to_json(const DegreeReport& report);
DegreeReport degree_report_from_json(const Json& j);

/// Array of decimal strings, lowest degree first.
Json to_json(const IntPolynomial& poly);
IntPolynomial int_polynomial_from_json(const Json& j);

/// {"field_char", "cutoff", "entries": [[i, j, rank], ...]} with entries sorted.
Json to_json(const BettiTable& table);
BettiTable betti_table_from_json(const Json& j);

Json to_json(const std::vector<StandardPair>& pairs);

Json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const Json& j);

/// One compact JSON object per line.
std::string to_json_lines(const std::vector<BoundReport>& reports);

/// Header check_name,instances,applicable,held,min_slack; empty slack when nothing applied.
std::string summary_csv(const std::vector<CheckSummary>& summaries);

}  // namespace borel
