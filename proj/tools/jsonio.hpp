#pragma once

// Serialization schemas for every report, stream record, and trace the CLI
// emits. All objects carry "schema": 1.

#include "wcifano/conditions.hpp"
#include "wcifano/reduction.hpp"
#include "wcifano/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace wcifano::jsonio {

using Json = nlohmann::ordered_json;

/// Chern values are JSON numbers while they fit int64, decimal strings beyond.
Json chern_value(const BigInt& v);
Json chern_array(const ChernProfile& profile);

Json candidate_to_json(const WciCandidate& cand);
Json conditions_to_json(const ConditionReport& report);

/// One survivor line: {"schema":1,"n":..,"k":..,"weights":[..],"degrees":[..],
/// "chern":[..],"l":..}.
Json record_to_json(const SurvivorRecord& record);
std::optional<SurvivorRecord> record_from_json(const Json& j);

std::string csv_header(int depth);
std::string record_to_csv(const SurvivorRecord& record);

Json report_to_json(const VerificationReport& report, const Json& config);

Json check_report(const WciCandidate& cand, std::optional<int> requested_l,
                  const Json& config);

Json additive_state_to_json(const AdditiveState& state);
Json multiplicative_state_to_json(const MultiplicativeState& state);
Json trace_to_json(const AdditiveTrace& trace, const Json& config);
Json trace_to_json(const MultiplicativeTrace& trace, const Json& config);

Json blowup_table(Int n, const Json& config);

} // namespace wcifano::jsonio
