#include "mimodof/scheme.hpp"

#include <algorithm>

#include "mimodof/rng.hpp"

namespace mimodof {

bool detect_acs_required(const AntennaConfig& cfg) {
  return cfg.m1 + cfg.m2 == cfg.n1 + cfg.n2 && cfg.min_antenna() == 1;
}

SchemePlan plan_scheme(const AntennaConfig& cfg, const DofTuple& d,
                       std::optional<bool> acs_override) {
  if (!d.is_nonnegative()) {
    throw std::invalid_argument("target tuple must be nonnegative");
  }
  const DofPolytope region = build_general_region(cfg, MessageSet::all());
  if (const auto violated = first_violated(region, d)) {
    throw RegionViolation(region.ineqs[*violated]);
  }

  SchemePlan plan;
  plan.cfg = cfg;
  plan.target = d;
  plan.extension = static_cast<int>(d.lcm_denominator());

  const int t = plan.extension;
  const AntennaConfig extended_cfg(t * cfg.m1, t * cfg.m2, t * cfg.n1,
                                   t * cfg.n2);
  const StreamAllocation extended_alloc =
      allocate_streams(extended_cfg, d.scaled(Rat(t)));
  const bool alignment_in_play = extended_alloc.a1 + extended_alloc.a2 > 0;
  plan.acs = detect_acs_required(cfg) && (t > 1 || alignment_in_play);
  if (acs_override) plan.acs = *acs_override;

  plan.stream_multiplier = plan.acs ? 2 * t : t;
  plan.effective_alloc = allocate_streams(
      plan.effective_cfg(), d.scaled(Rat(plan.stream_multiplier)));
  return plan;
}

ChannelSet prepare_channels(const SchemePlan& plan, std::uint64_t seed) {
  ChannelSet ch = extend_channels(sample_channels(plan.cfg, seed),
                                  plan.extension);
  if (plan.acs) ch = acs_transform(ch);
  return ch;
}

namespace {

constexpr std::uint64_t kBeamformerSubstream = 0x626561;

}  // namespace

TrialSummary monte_carlo_verify(const SchemePlan& plan, int trials,
                                std::uint64_t master_seed, double rtol) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  TrialSummary summary;
  summary.trials = trials;

  for (int k = 0; k < trials; ++k) {
    const std::uint64_t trial_seed = mix_seed(master_seed, k);
    const ChannelSet ch = prepare_channels(plan, trial_seed);

    Beamformers bf;
    try {
      bf = build_beamformers(ch, plan.effective_alloc,
                             mix_seed(trial_seed, kBeamformerSubstream));
    } catch (const BudgetError&) {
      ++summary.invalid;
      continue;
    }

    const RankReport report = verify_ranks(ch, bf, plan.effective_alloc, rtol);
    summary.min_margin = std::min(summary.min_margin, report.min_margin());
    if (report.all_pass()) {
      ++summary.passes;
    } else {
      for (std::size_t i = 0; i < report.conditions.size(); ++i) {
        if (!report.conditions[i].pass) ++summary.condition_failures[i];
      }
    }
    for (std::size_t i = 0; i < report.conditions.size(); ++i) {
      summary.condition_names[i] = report.conditions[i].name;
    }
  }
  return summary;
}

namespace {

CMat hcatpair(const CMat& a, const CMat& b) {
  CMat out(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  out << a, b;
  return out;
}

double containment_residual(const CMat& candidate, const CMat& subspace,
                            double rtol) {
  if (candidate.cols() == 0) return 0.0;
  if (subspace.cols() == 0) return 1.0;
  Eigen::JacobiSVD<CMat> svd(subspace, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rtol * sigma(0)) ++rank;
  }
  const CMat basis = svd.matrixU().leftCols(rank);
  const CMat residual = candidate - basis * (basis.adjoint() * candidate);
  return residual.norm() / candidate.norm();
}

}  // namespace

CollapseReport demonstrate_alignment_collapse(const AntennaConfig& cfg, int t,
                                              std::uint64_t seed,
                                              double rtol) {
  if (!detect_acs_required(cfg)) {
    throw std::invalid_argument(
        "collapse demonstration needs M1+M2 = N1+N2 with a single-antenna "
        "node; got " + cfg.to_string());
  }
  const DofTuple corner = acs_corner_x(cfg);
  const DofTuple scaled = corner.scaled(Rat(t));
  if (!scaled.is_integer_valued()) {
    throw std::invalid_argument(
        "extension length must clear the corner denominators (multiple of " +
        std::to_string(corner.lcm_denominator()) + ")");
  }

  const ChannelSet ch = extend_channels(sample_channels(cfg, seed), t);
  const StreamAllocation alloc =
      allocate_streams(ch.effective_cfg(), scaled);
  const Beamformers bf =
      build_beamformers(ch, alloc, mix_seed(seed, kBeamformerSubstream));

  CollapseReport report;
  report.extension_only = verify_ranks(ch, bf, alloc, rtol);

  const bool rx2_side = (cfg.m1 == 1 || cfg.n2 == 1);
  if (rx2_side) {
    report.side = "receiver-2";
    const CMat aligned = ch.channel(2, 1) * bf.of(Msg::W21).a;
    const CMat absorbing =
        ch.channel(2, 2) *
        hcatpair(bf.of(Msg::W22).z, bf.of(Msg::W22).a);
    report.containment_residual = containment_residual(aligned, absorbing, rtol);
    const auto& cond = report.extension_only.condition("[D2 U2]");
    report.rank_deficit = cond.target - cond.measured;
  } else {
    report.side = "receiver-1";
    const CMat aligned = ch.channel(1, 2) * bf.of(Msg::W12).a;
    const CMat absorbing =
        ch.channel(1, 1) *
        hcatpair(bf.of(Msg::W11).z, bf.of(Msg::W11).a);
    report.containment_residual = containment_residual(aligned, absorbing, rtol);
    const auto& cond = report.extension_only.condition("[D1 U1]");
    report.rank_deficit = cond.target - cond.measured;
  }
  return report;
}

}  // namespace mimodof
