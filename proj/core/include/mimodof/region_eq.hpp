#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mimodof/antenna.hpp"
#include "mimodof/dof_tuple.hpp"
#include "mimodof/region.hpp"

namespace mimodof {

// Stream-budget auxiliaries of the achievability-side region. z_ij counts
// streams of the private message W_ij zero-forced at its unintended
// receiver; a1 counts aligned pairs of (W21, W22) collapsed at receiver 1
// and a2 pairs of (W11, W12) collapsed at receiver 2; z_0i counts streams
// of W_0i zero-forced at the receiver that does not want it.
struct AuxAllocation {
  Rat z11, z12, z21, z22, a1, a2, z01, z02;

  bool operator==(const AuxAllocation&) const = default;
};

// The constructive auxiliary assignment: zero-forcing capped by null-space
// dimension, then alignment from the leftover concatenated null space, then
// whatever concatenated null space remains goes to the cognitive messages.
// Always satisfies the twelve budget constraints, for any nonnegative d.
AuxAllocation eq_witness(const AntennaConfig& cfg, const DofTuple& d);

// Budget-constraint check for an arbitrary auxiliary assignment; returns the
// number (50..61) of the first violated constraint, or nullopt.
std::optional<int> first_violated_budget(const AntennaConfig& cfg,
                                         const DofTuple& d,
                                         const AuxAllocation& aux);

// Human-readable form of budget constraint 50..61, e.g.
// "(53) z21 + a1 <= d21".
std::string budget_constraint_text(int number);

// Membership in the achievability-side region, decided by plugging the
// constructive witness into the five receiver/transmitter dimension counts.
// No search over the auxiliaries is needed for correctness.
bool eq_contains(const AntennaConfig& cfg, const DofTuple& d);

// Independent slow oracle: exact feasibility search over the auxiliary
// polytope. The two auxiliary groups are disjoint, so feasibility reduces to
// maximizing each group's total and comparing against the required slack.
bool eq_contains_search(const AntennaConfig& cfg, const DofTuple& d);

struct EqualityReport {
  struct Discrepancy {
    DofTuple point;
    std::string kind;  // "vertex_not_in_eq" | "membership_mismatch"
  };
  std::vector<Discrepancy> discrepancies;
  int vertices_checked = 0;
  int probes_checked = 0;

  bool ok() const { return discrepancies.empty(); }
};

// Checks that the outer-bound region and the achievability-side region agree
// on the given message subset: every vertex is achievable, and membership
// verdicts match on half-step perturbations off every vertex.
EqualityReport regions_equal(const AntennaConfig& cfg, MessageSet msgs);

}  // namespace mimodof
