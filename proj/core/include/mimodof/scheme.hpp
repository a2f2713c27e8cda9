#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mimodof/catalog.hpp"
#include "mimodof/precoder.hpp"
#include "mimodof/region.hpp"

namespace mimodof {

// Thrown by the planner when the target tuple is outside the DoF region;
// carries the violated bound.
class RegionViolation : public std::runtime_error {
 public:
  explicit RegionViolation(LinearInequality violated)
      : std::runtime_error("target tuple violates " + violated.to_string()),
        violated_(std::move(violated)) {}
  const LinearInequality& violated() const { return violated_; }

 private:
  LinearInequality violated_;
};

// Antenna settings where block-diagonal extension alone provably collapses
// the aligned desired streams: equal total antennas on both sides with a
// single-antenna node somewhere.
bool detect_acs_required(const AntennaConfig& cfg);

struct SchemePlan {
  AntennaConfig cfg;
  DofTuple target;
  int extension = 1;          // symbol-extension length T
  bool acs = false;
  int stream_multiplier = 1;  // streams per DoF: T, or 2T under realification
  StreamAllocation effective_alloc;

  AntennaConfig effective_cfg() const {
    return AntennaConfig(stream_multiplier * cfg.m1, stream_multiplier * cfg.m2,
                         stream_multiplier * cfg.n1,
                         stream_multiplier * cfg.n2);
  }
};

// Chooses T as the lcm of the target's denominators, switches the scheme to
// the doubled real representation when the antenna setting demands it (or
// whenever T = 1 but alignment is in play on such a setting), and allocates
// streams on the resulting system. acs_override forces the flag either way.
SchemePlan plan_scheme(const AntennaConfig& cfg, const DofTuple& d,
                       std::optional<bool> acs_override = std::nullopt);

// sample -> extend -> realify, per the plan.
ChannelSet prepare_channels(const SchemePlan& plan, std::uint64_t seed);

struct TrialSummary {
  int trials = 0;
  int passes = 0;
  int invalid = 0;  // beamformer budget errors, not rank failures
  std::array<long long, 6> condition_failures{};
  std::array<std::string, 6> condition_names;
  double min_margin = 1.0;

  bool all_pass() const { return passes == trials && invalid == 0; }
};

// Runs the full pipeline on fresh channels per trial (seeds derived from
// master_seed) and tallies the six rank conditions.
TrialSummary monte_carlo_verify(const SchemePlan& plan, int trials,
                                std::uint64_t master_seed, double rtol = 1e-8);

struct CollapseReport {
  std::string side;  // "receiver-2" or "receiver-1"
  double containment_residual = 0.0;
  long long rank_deficit = 0;  // on [D2 U2] resp. [D1 U1]
  RankReport extension_only;
};

// Builds the extension-only scheme at the fractional max-sum corner and
// measures the forced span containment of the aligned desired streams plus
// the resulting rank deficit. Requires detect_acs_required(cfg) and a T that
// clears the corner's denominators.
CollapseReport demonstrate_alignment_collapse(const AntennaConfig& cfg, int t,
                                              std::uint64_t seed,
                                              double rtol = 1e-8);

}  // namespace mimodof
