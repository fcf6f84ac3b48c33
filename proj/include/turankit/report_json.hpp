#pragma once

#include "json.hpp"

#include "turankit/hypergraph.hpp"
#include "turankit/matching.hpp"
#include "turankit/pattern.hpp"
#include "turankit/solver.hpp"
#include "turankit/verify.hpp"

namespace turankit::report {

using Json = nlohmann::ordered_json;

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

Json to_json(const verify::CheckReport& rep);
verify::CheckReport check_report_from_json(const nlohmann::json& j);

Json to_json(const patterns::LagrangianEstimate& est);
patterns::LagrangianEstimate estimate_from_json(const nlohmann::json& j);

Json to_json(const patterns::MinimalityReport& rep);
Json to_json(const matching::MatchingWitness& w);
Json to_json(const solver::TuranRecord& rec);
Json to_json(const solver::TuranTable& table);

}  // namespace turankit::report
