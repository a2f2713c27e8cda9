#pragma once

#include <nlohmann/json.hpp>

#include "mimodof/catalog.hpp"
#include "mimodof/precoder.hpp"
#include "mimodof/region.hpp"
#include "mimodof/region_eq.hpp"
#include "mimodof/scheme.hpp"

// JSON forms used by the CLI and the --dump files. Exact rationals travel as
// strings "p/q" (plain "p" for integers); complex entries as [re, im] pairs;
// matrices row-major. Documents carrying region data are versioned.

namespace mimodof {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

json antenna_to_json(const AntennaConfig& cfg);
AntennaConfig antenna_from_json(const json& j);

json tuple_to_json(const DofTuple& d);
DofTuple tuple_from_json(const json& j);

json polytope_to_json(const DofPolytope& poly);
DofPolytope polytope_from_json(const json& j);

json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const json& j);

json aux_to_json(const AuxAllocation& aux);
AuxAllocation aux_from_json(const json& j);

json allocation_to_json(const StreamAllocation& alloc);
StreamAllocation allocation_from_json(const json& j);

json rank_report_to_json(const RankReport& report);
RankReport rank_report_from_json(const json& j);

json trial_summary_to_json(const TrialSummary& summary);
TrialSummary trial_summary_from_json(const json& j);

json plan_to_json(const SchemePlan& plan);
SchemePlan plan_from_json(const json& j);

json equality_report_to_json(const EqualityReport& report);
EqualityReport equality_report_from_json(const json& j);

json consistency_report_to_json(const ConsistencyReport& report);
ConsistencyReport consistency_report_from_json(const json& j);

json collapse_report_to_json(const CollapseReport& report);
CollapseReport collapse_report_from_json(const json& j);

json channels_to_json(const ChannelSet& ch);
json beamformers_to_json(const Beamformers& bf);

}  // namespace mimodof
