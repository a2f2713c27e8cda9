#include "mimodof/serialize.hpp"

namespace mimodof {

namespace {

json matrix_to_json(const CMat& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

}  // namespace

json antenna_to_json(const AntennaConfig& cfg) {
  return json{{"m1", cfg.m1}, {"m2", cfg.m2}, {"n1", cfg.n1}, {"n2", cfg.n2}};
}

AntennaConfig antenna_from_json(const json& j) {
  return AntennaConfig(j.at("m1").get<int>(), j.at("m2").get<int>(),
                       j.at("n1").get<int>(), j.at("n2").get<int>());
}

json tuple_to_json(const DofTuple& d) {
  json out = json::object();
  for (Msg m : kAllMessages) {
    if (d[m] != Rat(0)) {
      out["d" + std::string(msg_tag(m))] = format_rat(d[m]);
    }
  }
  return out;
}

DofTuple tuple_from_json(const json& j) {
  DofTuple d;
  for (const auto& [key, value] : j.items()) {
    if (key.empty() || key[0] != 'd') {
      throw std::invalid_argument("tuple keys look like d11, d01, d0");
    }
    const auto m = msg_from_tag(key.substr(1));
    if (!m) throw std::invalid_argument("unknown message key " + key);
    d.set(*m, parse_rat(value.get<std::string>()));
  }
  return d;
}

json polytope_to_json(const DofPolytope& poly) {
  json ineqs = json::array();
  for (const auto& iq : poly.ineqs) {
    json coeffs = json::object();
    for (Msg m : iq.coeffs.members()) {
      coeffs["d" + std::string(msg_tag(m))] = 1;
    }
    json entry{{"coeffs", coeffs}, {"rhs", std::to_string(iq.rhs)}};
    if (!iq.sources.empty()) entry["sources"] = iq.sources;
    ineqs.push_back(entry);
  }
  json active = json::array();
  for (Msg m : poly.active.members()) active.push_back(msg_tag(m));
  return json{
      {"version", kFormatVersion}, {"active", active}, {"inequalities", ineqs}};
}

DofPolytope polytope_from_json(const json& j) {
  if (j.at("version").get<int>() != kFormatVersion) {
    throw std::invalid_argument("unsupported polytope format version");
  }
  DofPolytope poly;
  for (const auto& tag : j.at("active")) {
    const auto m = msg_from_tag(tag.get<std::string>());
    if (!m) throw std::invalid_argument("unknown message tag in active set");
    poly.active.insert(*m);
  }
  for (const auto& entry : j.at("inequalities")) {
    LinearInequality iq;
    for (const auto& [key, one] : entry.at("coeffs").items()) {
      const auto m = msg_from_tag(key.substr(1));
      if (!m || one.get<int>() != 1) {
        throw std::invalid_argument("coefficients are 0/1 keyed by d-tags");
      }
      iq.coeffs.insert(*m);
    }
    const Rat rhs = parse_rat(entry.at("rhs").get<std::string>());
    if (!is_integer(rhs) || rhs < Rat(0)) {
      throw std::invalid_argument("rhs must be a nonnegative integer");
    }
    iq.rhs = rhs.numerator();
    if (entry.contains("sources")) {
      iq.sources = entry["sources"].get<std::vector<int>>();
    }
    poly.ineqs.push_back(std::move(iq));
  }
  return poly;
}

json vertex_to_json(const Vertex& v) {
  return json{{"point", tuple_to_json(v.point)},
              {"active_facets", v.active_facets},
              {"denominator", v.denominator}};
}

Vertex vertex_from_json(const json& j) {
  Vertex v;
  v.point = tuple_from_json(j.at("point"));
  v.active_facets = j.at("active_facets").get<std::vector<int>>();
  v.denominator = j.at("denominator").get<long long>();
  return v;
}

json aux_to_json(const AuxAllocation& aux) {
  return json{{"z11", format_rat(aux.z11)}, {"z12", format_rat(aux.z12)},
              {"z21", format_rat(aux.z21)}, {"z22", format_rat(aux.z22)},
              {"a1", format_rat(aux.a1)},   {"a2", format_rat(aux.a2)},
              {"z01", format_rat(aux.z01)}, {"z02", format_rat(aux.z02)}};
}

AuxAllocation aux_from_json(const json& j) {
  auto get = [&](const char* key) {
    return parse_rat(j.at(key).get<std::string>());
  };
  return AuxAllocation{get("z11"), get("z12"), get("z21"), get("z22"),
                       get("a1"),  get("a2"),  get("z01"), get("z02")};
}

json allocation_to_json(const StreamAllocation& alloc) {
  return json{{"z11", alloc.z11}, {"z12", alloc.z12}, {"z21", alloc.z21},
              {"z22", alloc.z22}, {"a1", alloc.a1},   {"a2", alloc.a2},
              {"r11", alloc.r11}, {"r12", alloc.r12}, {"r21", alloc.r21},
              {"r22", alloc.r22}, {"z01", alloc.z01}, {"z02", alloc.z02},
              {"r01", alloc.r01}, {"r02", alloc.r02}, {"r1", alloc.r1},
              {"r2", alloc.r2},   {"r0", alloc.r0}};
}

StreamAllocation allocation_from_json(const json& j) {
  StreamAllocation a;
  a.z11 = j.at("z11").get<long long>();
  a.z12 = j.at("z12").get<long long>();
  a.z21 = j.at("z21").get<long long>();
  a.z22 = j.at("z22").get<long long>();
  a.a1 = j.at("a1").get<long long>();
  a.a2 = j.at("a2").get<long long>();
  a.r11 = j.at("r11").get<long long>();
  a.r12 = j.at("r12").get<long long>();
  a.r21 = j.at("r21").get<long long>();
  a.r22 = j.at("r22").get<long long>();
  a.z01 = j.at("z01").get<long long>();
  a.z02 = j.at("z02").get<long long>();
  a.r01 = j.at("r01").get<long long>();
  a.r02 = j.at("r02").get<long long>();
  a.r1 = j.at("r1").get<long long>();
  a.r2 = j.at("r2").get<long long>();
  a.r0 = j.at("r0").get<long long>();
  return a;
}

json rank_report_to_json(const RankReport& report) {
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    conditions.push_back(json{{"name", c.name},
                              {"target", c.target},
                              {"measured", c.measured},
                              {"pass", c.pass},
                              {"margin", c.margin}});
  }
  return json{{"conditions", conditions}, {"all_pass", report.all_pass()}};
}

RankReport rank_report_from_json(const json& j) {
  RankReport report;
  const auto& conditions = j.at("conditions");
  for (std::size_t i = 0; i < report.conditions.size(); ++i) {
    auto& c = report.conditions[i];
    c.name = conditions.at(i).at("name").get<std::string>();
    c.target = conditions.at(i).at("target").get<long long>();
    c.measured = conditions.at(i).at("measured").get<long long>();
    c.pass = conditions.at(i).at("pass").get<bool>();
    c.margin = conditions.at(i).at("margin").get<double>();
  }
  return report;
}

json trial_summary_to_json(const TrialSummary& summary) {
  json failures = json::object();
  for (std::size_t i = 0; i < summary.condition_failures.size(); ++i) {
    const std::string name = summary.condition_names[i].empty()
                                 ? "condition" + std::to_string(i)
                                 : summary.condition_names[i];
    failures[name] = summary.condition_failures[i];
  }
  return json{{"trials", summary.trials},
              {"passes", summary.passes},
              {"invalid", summary.invalid},
              {"failures_by_condition", failures},
              {"min_margin", summary.min_margin}};
}

TrialSummary trial_summary_from_json(const json& j) {
  TrialSummary summary;
  summary.trials = j.at("trials").get<int>();
  summary.passes = j.at("passes").get<int>();
  summary.invalid = j.at("invalid").get<int>();
  std::size_t i = 0;
  for (const auto& [name, count] : j.at("failures_by_condition").items()) {
    if (i >= summary.condition_failures.size()) break;
    summary.condition_names[i] = name;
    summary.condition_failures[i] = count.get<long long>();
    ++i;
  }
  summary.min_margin = j.at("min_margin").get<double>();
  return summary;
}

json plan_to_json(const SchemePlan& plan) {
  return json{{"antennas", antenna_to_json(plan.cfg)},
              {"target", tuple_to_json(plan.target)},
              {"extension", plan.extension},
              {"acs", plan.acs},
              {"stream_multiplier", plan.stream_multiplier},
              {"effective_allocation", allocation_to_json(plan.effective_alloc)}};
}

SchemePlan plan_from_json(const json& j) {
  SchemePlan plan;
  plan.cfg = antenna_from_json(j.at("antennas"));
  plan.target = tuple_from_json(j.at("target"));
  plan.extension = j.at("extension").get<int>();
  plan.acs = j.at("acs").get<bool>();
  plan.stream_multiplier = j.at("stream_multiplier").get<int>();
  plan.effective_alloc = allocation_from_json(j.at("effective_allocation"));
  return plan;
}

json equality_report_to_json(const EqualityReport& report) {
  json discrepancies = json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back(
        json{{"point", tuple_to_json(d.point)}, {"kind", d.kind}});
  }
  return json{{"vertices_checked", report.vertices_checked},
              {"probes_checked", report.probes_checked},
              {"discrepancies", discrepancies},
              {"ok", report.ok()}};
}

EqualityReport equality_report_from_json(const json& j) {
  EqualityReport report;
  report.vertices_checked = j.at("vertices_checked").get<int>();
  report.probes_checked = j.at("probes_checked").get<int>();
  for (const auto& d : j.at("discrepancies")) {
    report.discrepancies.push_back(
        {tuple_from_json(d.at("point")), d.at("kind").get<std::string>()});
  }
  return report;
}

json consistency_report_to_json(const ConsistencyReport& report) {
  json discrepancies = json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back(json{{"antennas", antenna_to_json(d.cfg)},
                                 {"check", d.check},
                                 {"detail", d.detail}});
  }
  return json{{"configs_checked", report.configs_checked},
              {"symmetric_checked", report.symmetric_checked},
              {"max_denominator_x", report.max_denominator_x},
              {"max_denominator_cognitive_x", report.max_denominator_cogx},
              {"max_denominator_three_message",
               report.max_denominator_three_message},
              {"discrepancies", discrepancies},
              {"ok", report.ok()}};
}

ConsistencyReport consistency_report_from_json(const json& j) {
  ConsistencyReport report;
  report.configs_checked = j.at("configs_checked").get<int>();
  report.symmetric_checked = j.at("symmetric_checked").get<int>();
  report.max_denominator_x = j.at("max_denominator_x").get<long long>();
  report.max_denominator_cogx =
      j.at("max_denominator_cognitive_x").get<long long>();
  report.max_denominator_three_message =
      j.at("max_denominator_three_message").get<long long>();
  for (const auto& d : j.at("discrepancies")) {
    report.discrepancies.push_back({antenna_from_json(d.at("antennas")),
                                    d.at("check").get<std::string>(),
                                    d.at("detail").get<std::string>()});
  }
  return report;
}

json collapse_report_to_json(const CollapseReport& report) {
  return json{{"side", report.side},
              {"containment_residual", report.containment_residual},
              {"rank_deficit", report.rank_deficit},
              {"extension_only", rank_report_to_json(report.extension_only)}};
}

CollapseReport collapse_report_from_json(const json& j) {
  CollapseReport report;
  report.side = j.at("side").get<std::string>();
  report.containment_residual = j.at("containment_residual").get<double>();
  report.rank_deficit = j.at("rank_deficit").get<long long>();
  report.extension_only = rank_report_from_json(j.at("extension_only"));
  return report;
}

json channels_to_json(const ChannelSet& ch) {
  json matrices = json::object();
  for (int r = 1; r <= 2; ++r) {
    for (int t = 1; t <= 2; ++t) {
      matrices["H" + std::to_string(r) + std::to_string(t)] =
          matrix_to_json(ch.channel(r, t));
    }
  }
  return json{{"version", kFormatVersion},
              {"antennas", antenna_to_json(ch.cfg)},
              {"form", channel_form_name(ch.form)},
              {"extension", ch.extension},
              {"matrices", matrices}};
}

json beamformers_to_json(const Beamformers& bf) {
  json out = json::object();
  for (Msg m : kAllMessages) {
    const auto& mb = bf.of(m);
    out["V" + std::string(msg_tag(m))] = json{{"Z", matrix_to_json(mb.z)},
                                              {"A", matrix_to_json(mb.a)},
                                              {"R", matrix_to_json(mb.r)}};
  }
  return out;
}

}  // namespace mimodof
