// Command-line front end: region computation, vertex enumeration, membership
// checks, scheme planning with Monte Carlo rank verification, and the
// extension-vs-ACS demonstration. Exit codes: 0 success/pass, 1 usage error,
// 2 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mimodof/catalog.hpp"
#include "mimodof/region.hpp"
#include "mimodof/region_eq.hpp"
#include "mimodof/rng.hpp"
#include "mimodof/scheme.hpp"
#include "mimodof/serialize.hpp"

namespace {

using namespace mimodof;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct CommonOpts {
  std::string antennas;
  std::string messages = "full";
  std::string dof;
  std::uint64_t seed = 0;
  int trials = 100;
  double rtol = 1e-8;
  std::string format = "table";
  std::string output;
  std::string dump;
  bool no_acs = false;
  bool irredundant = false;
  int max_antennas = 4;
  int extension = 3;
};

AntennaConfig parse_antennas(const std::string& text) {
  int values[4];
  int consumed = 0;
  if (std::sscanf(text.c_str(), "%d,%d,%d,%d%n", &values[0], &values[1],
                  &values[2], &values[3], &consumed) != 4 ||
      consumed != static_cast<int>(text.size())) {
    throw std::invalid_argument("--antennas expects M1,M2,N1,N2");
  }
  return AntennaConfig(values[0], values[1], values[2], values[3]);
}

// A catalog name resolves to its published region; an explicit tag list goes
// through the general construction.
DofPolytope resolve_region(const AntennaConfig& cfg, const std::string& spec) {
  if (auto name = catalog_from_name(spec)) {
    return specialize_named(cfg, *name);
  }
  return build_general_region(cfg, parse_message_set(spec));
}

MessageSet resolve_message_set(const std::string& spec) {
  if (auto name = catalog_from_name(spec)) return preset_message_set(*name);
  return parse_message_set(spec);
}

// Either tagged entries "11=1/3,22=1" or a bare list matched against the
// active messages in canonical order (11,21,12,22,1,2,01,02,0).
DofTuple parse_dof(const std::string& text, MessageSet active) {
  DofTuple d;
  if (text.find('=') != std::string::npos) {
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("mixed tagged/bare --dof entries");
      }
      const auto m = msg_from_tag(item.substr(0, eq));
      if (!m) throw std::invalid_argument("unknown message tag in --dof");
      d.set(*m, parse_rat(item.substr(eq + 1)));
    }
  } else {
    const auto members = active.members();
    std::stringstream stream(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(stream, item, ',')) {
      if (i >= members.size()) {
        throw std::invalid_argument("--dof has more entries than messages");
      }
      d.set(members[i++], parse_rat(item));
    }
    if (i != members.size()) {
      throw std::invalid_argument("--dof needs one value per message (" +
                                  format_message_set(active) + ")");
    }
  }
  if (!d.is_nonnegative()) {
    throw std::invalid_argument("--dof entries must be nonnegative");
  }
  return d;
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.output);
  if (!file) throw std::runtime_error("cannot write " + opts.output);
  file << text;
}

std::string sources_label(const LinearInequality& iq) {
  if (iq.sources.empty()) return "    ";
  std::string out = "(";
  for (std::size_t i = 0; i < iq.sources.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(iq.sources[i]);
  }
  return out + ")";
}

int cmd_region(const CommonOpts& opts) {
  const AntennaConfig cfg = parse_antennas(opts.antennas);
  DofPolytope poly = resolve_region(cfg, opts.messages);
  if (opts.irredundant) poly = remove_redundant(poly);

  if (opts.format == "json") {
    emit(opts, polytope_to_json(poly).dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream out;
  out << "DoF region, messages {" << format_message_set(poly.active)
      << "}, antennas " << cfg.to_string() << ":\n";
  for (const auto& iq : poly.ineqs) {
    out << "  " << sources_label(iq) << " " << iq.to_string() << "\n";
  }
  emit(opts, out.str());
  return kExitOk;
}

int cmd_vertices(const CommonOpts& opts) {
  const AntennaConfig cfg = parse_antennas(opts.antennas);
  const DofPolytope poly = resolve_region(cfg, opts.messages);
  const auto vertices = enumerate_vertices(poly);
  const auto stats = vertex_denominator_stats(poly);
  const auto members = poly.active.members();

  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& v : vertices) rows.push_back(vertex_to_json(v));
    emit(opts, json{{"version", kFormatVersion},
                    {"antennas", antenna_to_json(cfg)},
                    {"vertices", rows},
                    {"max_denominator", stats.max_denominator},
                    {"fractional_vertices", stats.fractional_vertices.size()}}
                   .dump(2) +
                   "\n");
    return kExitOk;
  }

  std::ostringstream out;
  std::string header;
  for (Msg m : members) {
    if (!header.empty()) header += ",";
    header += "d";
    header += msg_tag(m);
  }
  header += ",denominator";
  if (opts.format == "csv") {
    out << header << "\n";
    for (const auto& v : vertices) {
      for (Msg m : members) out << format_rat(v.point[m]) << ",";
      out << v.denominator << "\n";
    }
  } else {
    out << "vertices of {" << format_message_set(poly.active) << "} on "
        << cfg.to_string() << ": " << vertices.size() << "\n";
    out << "  " << header << "\n";
    for (const auto& v : vertices) {
      out << "  ";
      for (Msg m : members) out << format_rat(v.point[m]) << ",";
      out << v.denominator << "\n";
    }
    out << "max denominator: " << stats.max_denominator << "\n";
    out << "fractional vertices: " << stats.fractional_vertices.size() << "\n";
  }
  emit(opts, out.str());
  return kExitOk;
}

int cmd_check(const CommonOpts& opts) {
  const AntennaConfig cfg = parse_antennas(opts.antennas);
  const DofPolytope poly = resolve_region(cfg, opts.messages);
  const DofTuple d = parse_dof(opts.dof, poly.active);

  const bool in_region = contains(poly, d);
  const bool in_eq = eq_contains(cfg, d);
  const AuxAllocation witness = eq_witness(cfg, d);

  if (opts.format == "json") {
    emit(opts, json{{"target", tuple_to_json(d)},
                    {"in_region", in_region},
                    {"in_achievable_region", in_eq},
                    {"witness", aux_to_json(witness)},
                    {"verdicts_agree", in_region == in_eq}}
                   .dump(2) +
                   "\n");
  } else {
    std::ostringstream out;
    out << "target: " << d.to_string(poly.active) << "\n";
    if (in_region) {
      out << "outer-bound region: IN\n";
    } else {
      out << "outer-bound region: OUT";
      if (const auto idx = first_violated(poly, d)) {
        out << ", violates " << sources_label(poly.ineqs[*idx]) << " "
            << poly.ineqs[*idx].to_string();
      }
      out << "\n";
    }
    out << "achievable region: " << (in_eq ? "IN" : "OUT") << "\n";
    out << "witness: z11=" << format_rat(witness.z11)
        << " z12=" << format_rat(witness.z12)
        << " z21=" << format_rat(witness.z21)
        << " z22=" << format_rat(witness.z22)
        << " a1=" << format_rat(witness.a1)
        << " a2=" << format_rat(witness.a2)
        << " z01=" << format_rat(witness.z01)
        << " z02=" << format_rat(witness.z02) << "\n";
    out << "verdicts agree: " << (in_region == in_eq ? "yes" : "NO") << "\n";
    emit(opts, out.str());
  }
  return in_region == in_eq ? kExitOk : kExitVerification;
}

std::string render_rank_table(const RankReport& report) {
  std::ostringstream out;
  for (const auto& c : report.conditions) {
    out << "  " << c.name << ": measured " << c.measured << " target "
        << c.target << (c.pass ? " ok" : " FAIL") << "\n";
  }
  return out.str();
}

void dump_trial(const CommonOpts& opts, const SchemePlan& plan) {
  if (opts.dump.empty()) return;
  const ChannelSet ch = prepare_channels(plan, mix_seed(opts.seed, 0));
  const Beamformers bf =
      build_beamformers(ch, plan.effective_alloc,
                        mix_seed(mix_seed(opts.seed, 0), 0x626561));
  const RankReport report = verify_ranks(ch, bf, plan.effective_alloc, opts.rtol);
  std::ofstream file(opts.dump);
  if (!file) throw std::runtime_error("cannot write " + opts.dump);
  file << json{{"version", kFormatVersion},
               {"plan", plan_to_json(plan)},
               {"channels", channels_to_json(ch)},
               {"beamformers", beamformers_to_json(bf)},
               {"ranks", rank_report_to_json(report)}}
              .dump(2)
       << "\n";
}

int cmd_plan_verify(const CommonOpts& opts) {
  const AntennaConfig cfg = parse_antennas(opts.antennas);
  const MessageSet msgs = resolve_message_set(opts.messages);
  const DofTuple d = parse_dof(opts.dof, msgs);

  SchemePlan plan;
  try {
    plan = plan_scheme(cfg, d,
                       opts.no_acs ? std::optional<bool>(false) : std::nullopt);
  } catch (const RegionViolation& e) {
    std::cerr << "target rejected: " << e.what() << "\n";
    return kExitUsage;
  }

  const TrialSummary summary = monte_carlo_verify(plan, opts.trials, opts.seed,
                                                  opts.rtol);
  dump_trial(opts, plan);

  if (opts.format == "json") {
    emit(opts, json{{"plan", plan_to_json(plan)},
                    {"summary", trial_summary_to_json(summary)}}
                   .dump(2) +
                   "\n");
  } else {
    std::ostringstream out;
    out << "plan: T=" << plan.extension << " ACS=" << (plan.acs ? "yes" : "no")
        << " stream-multiplier=" << plan.stream_multiplier << "\n";
    out << "effective allocation: "
        << allocation_to_json(plan.effective_alloc).dump() << "\n";
    out << "trials: " << summary.passes << "/" << summary.trials << " passed";
    if (summary.invalid > 0) out << " (" << summary.invalid << " invalid)";
    out << "\n";
    if (summary.passes < summary.trials) {
      out << "failures by condition:\n";
      for (std::size_t i = 0; i < summary.condition_failures.size(); ++i) {
        if (summary.condition_failures[i] > 0) {
          out << "  " << summary.condition_names[i] << ": "
              << summary.condition_failures[i] << "\n";
        }
      }
    }
    out << "min singular-value margin: " << summary.min_margin << "\n";
    emit(opts, out.str());
  }
  return summary.all_pass() ? kExitOk : kExitVerification;
}

int cmd_demo_acs(const CommonOpts& opts) {
  const AntennaConfig cfg = parse_antennas(opts.antennas);
  if (!detect_acs_required(cfg)) {
    std::cerr << "ACS not required for this configuration "
              << cfg.to_string() << "\n";
    return kExitUsage;
  }
  const DofTuple corner = acs_corner_x(cfg);
  const SchemePlan acs_plan = plan_scheme(cfg, corner);

  int deficit_trials = 0;
  double worst_residual = 0.0;
  for (int k = 0; k < opts.trials; ++k) {
    const CollapseReport r = demonstrate_alignment_collapse(
        cfg, opts.extension, mix_seed(opts.seed, k), opts.rtol);
    if (r.rank_deficit >= 1) ++deficit_trials;
    worst_residual = std::max(worst_residual, r.containment_residual);
  }
  const TrialSummary acs_summary =
      monte_carlo_verify(acs_plan, opts.trials, opts.seed, opts.rtol);

  const CollapseReport sample = demonstrate_alignment_collapse(
      cfg, opts.extension, mix_seed(opts.seed, 0), opts.rtol);
  dump_trial(opts, acs_plan);

  if (opts.format == "json") {
    emit(opts, json{{"corner", tuple_to_json(corner)},
                    {"extension_only", collapse_report_to_json(sample)},
                    {"deficit_trials", deficit_trials},
                    {"max_containment_residual", worst_residual},
                    {"acs", trial_summary_to_json(acs_summary)},
                    {"trials", opts.trials}}
                   .dump(2) +
                   "\n");
  } else {
    std::ostringstream out;
    out << "corner point: " << corner.to_string(preset_message_set(CatalogName::X))
        << ", extension T=" << opts.extension << "\n";
    out << "extension only (no ACS), side " << sample.side << ":\n";
    out << render_rank_table(sample.extension_only);
    out << "  containment residual: " << sample.containment_residual << "\n";
    out << "  rank deficit in " << deficit_trials << "/" << opts.trials
        << " trials, max residual " << worst_residual << "\n";
    out << "with ACS (T=" << acs_plan.extension << "):\n";
    out << "  " << acs_summary.passes << "/" << acs_summary.trials
        << " trials at full rank\n";
    emit(opts, out.str());
  }
  const bool demonstrated =
      deficit_trials == opts.trials && acs_summary.all_pass();
  return demonstrated ? kExitOk : kExitVerification;
}

int cmd_catalog_check(const CommonOpts& opts) {
  const ConsistencyReport report = check_catalog_consistency(opts.max_antennas);
  if (opts.format == "json") {
    emit(opts, consistency_report_to_json(report).dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::ostringstream out;
    out << "check,value\n";
    out << "configs_checked," << report.configs_checked << "\n";
    out << "symmetric_checked," << report.symmetric_checked << "\n";
    out << "max_denominator_x," << report.max_denominator_x << "\n";
    out << "max_denominator_cognitive_x," << report.max_denominator_cogx << "\n";
    out << "max_denominator_three_message,"
        << report.max_denominator_three_message << "\n";
    out << "discrepancies," << report.discrepancies.size() << "\n";
    emit(opts, out.str());
  } else {
    std::ostringstream out;
    out << "catalog consistency sweep, antennas 1.." << opts.max_antennas
        << ":\n";
    out << "  configs checked: " << report.configs_checked << " ("
        << report.symmetric_checked << " symmetric)\n";
    out << "  max denominator: " << report.max_denominator_x << " (X), "
        << report.max_denominator_cogx << " (cognitive-X), "
        << report.max_denominator_three_message << " (three-message-X)\n";
    if (report.ok()) {
      out << "  discrepancies: none\n";
    } else {
      out << "  discrepancies:\n";
      for (const auto& d : report.discrepancies) {
        out << "    " << d.cfg.to_string() << " " << d.check << ": "
            << d.detail << "\n";
      }
    }
    emit(opts, out.str());
  }
  return report.ok() ? kExitOk : kExitVerification;
}

int cmd_sumdof(const CommonOpts& opts) {
  const AntennaConfig cfg = parse_antennas(opts.antennas);
  const DofPolytope poly = resolve_region(cfg, opts.messages);
  std::map<Msg, Rat> unit;
  for (Msg m : poly.active.members()) unit[m] = Rat(1);
  const WeightedMax best = max_weighted_sum(poly, unit);

  std::optional<Rat> closed;
  const auto name = catalog_from_name(opts.messages);
  const bool symmetric = cfg.m1 == cfg.m2 && cfg.n1 == cfg.n2;
  if (name && symmetric) {
    if (*name == CatalogName::X) closed = closed_form_sumdof_x(cfg.m1, cfg.n1);
    if (*name == CatalogName::CognitiveX) {
      closed = closed_form_sumdof_cogx(cfg.m1, cfg.n1);
    }
  }

  if (opts.format == "json") {
    json out{{"antennas", antenna_to_json(cfg)},
             {"messages", format_message_set(poly.active)},
             {"max_sum", format_rat(best.value)},
             {"argmax", vertex_to_json(best.argmax)}};
    if (closed) {
      out["closed_form"] = format_rat(*closed);
      out["matches"] = (*closed == best.value);
    }
    emit(opts, out.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "max sum DoF over {" << format_message_set(poly.active) << "} on "
        << cfg.to_string() << ": " << format_rat(best.value) << " at "
        << best.argmax.point.to_string(poly.active) << "\n";
    if (closed) {
      out << "closed form: " << format_rat(*closed)
          << (*closed == best.value ? " (matches)" : " (MISMATCH)") << "\n";
    }
    emit(opts, out.str());
  }
  return (!closed || *closed == best.value) ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DoF regions and linear precoding for the 2x2 MIMO "
               "interference network with general message sets"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto add_common = [&](CLI::App* cmd, bool needs_antennas) {
    auto* antennas = cmd->add_option("--antennas", opts.antennas,
                                     "antenna counts M1,M2,N1,N2");
    if (needs_antennas) antennas->required();
    cmd->add_option("--messages", opts.messages,
                    "catalog name (X, cognitive-X, IC, IC-CM, cognitive-IC, "
                    "generalized-cognitive-IC, BC-PCR, three-message-X, full) "
                    "or comma list of tags");
    cmd->add_option("--seed", opts.seed, "64-bit RNG seed")->default_val(0);
    cmd->add_option("--trials", opts.trials, "Monte Carlo trials")
        ->default_val(100)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rtol", opts.rtol, "relative singular-value cutoff")
        ->default_val(1e-8)
        ->check(CLI::Range(1e-300, 1e-2));
    cmd->add_option("--format", opts.format, "table | json | csv")
        ->default_val("table")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--output", opts.output, "write to file instead of stdout");
    cmd->add_option("--dump", opts.dump,
                    "write channels/beamformers/ranks of trial 0 as JSON");
  };

  auto* region = app.add_subcommand("region", "print the DoF region");
  add_common(region, true);
  region->add_flag("--irredundant", opts.irredundant,
                   "drop all redundant inequalities");

  auto* vertices = app.add_subcommand("vertices", "enumerate region vertices");
  add_common(vertices, true);

  auto* check = app.add_subcommand(
      "check", "membership of a DoF tuple in both region descriptions");
  add_common(check, true);
  check->add_option("--dof", opts.dof, "tuple, bare list or tagged 11=1/3,...")
      ->required();

  auto* plan_verify = app.add_subcommand(
      "plan-verify", "plan extension/ACS for a tuple and verify ranks");
  add_common(plan_verify, true);
  plan_verify
      ->add_option("--dof", opts.dof, "tuple, bare list or tagged 11=1/3,...")
      ->required();
  plan_verify->add_flag("--no-acs", opts.no_acs,
                        "force the plan to skip the doubled real form");

  auto* demo = app.add_subcommand(
      "demo-acs", "show the extension-only rank collapse next to the ACS fix");
  add_common(demo, true);
  demo->add_option("--extension", opts.extension,
                   "symbol-extension length for the collapse run")
      ->default_val(3)
      ->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand(
      "catalog-check", "cross-validate regions against the closed forms");
  add_common(catalog, false);
  catalog
      ->add_option("--max-antennas", opts.max_antennas,
                   "sweep antenna counts 1..N")
      ->default_val(4)
      ->check(CLI::PositiveNumber);

  auto* sumdof = app.add_subcommand("sumdof", "maximum sum DoF of a region");
  add_common(sumdof, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(region)) return cmd_region(opts);
    if (app.got_subcommand(vertices)) return cmd_vertices(opts);
    if (app.got_subcommand(check)) return cmd_check(opts);
    if (app.got_subcommand(plan_verify)) return cmd_plan_verify(opts);
    if (app.got_subcommand(demo)) return cmd_demo_acs(opts);
    if (app.got_subcommand(catalog)) return cmd_catalog_check(opts);
    if (app.got_subcommand(sumdof)) return cmd_sumdof(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
