#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mimodof/antenna.hpp"
#include "mimodof/dof_tuple.hpp"
#include "mimodof/message.hpp"
#include "mimodof/rational.hpp"

namespace mimodof {

// One 0/1-coefficient bound: sum of the coeff messages' DoF <= rhs. The rhs
// is always an integer built from antenna counts via max/min/sum.
struct LinearInequality {
  MessageSet coeffs;
  long long rhs = 0;
  // Indices (3..11) of the general-region rows this bound descends from;
  // empty when it is a combined closed-form bound.
  std::vector<int> sources;

  Rat lhs_at(const DofTuple& d) const {
    Rat acc(0);
    for (Msg m : coeffs.members()) acc += d[m];
    return acc;
  }
  bool holds_at(const DofTuple& d) const { return lhs_at(d) <= Rat(rhs); }

  std::string to_string() const;
};

// A bounded DoF polytope over an active message subset: the listed
// inequalities plus nonnegativity of every active coordinate. Every active
// message appears in some inequality, so the region is bounded, and all rhs
// are nonnegative, so the origin is always feasible.
struct DofPolytope {
  std::vector<LinearInequality> ineqs;
  MessageSet active;

  std::string to_string() const;
};

// The nine general-region rows evaluated at cfg, keyed by row index 3..11.
std::vector<LinearInequality> general_region_rows(const AntennaConfig& cfg);

// Restricts the nine general rows to msgs (inactive coordinates are fixed to
// zero and eliminated). Rows whose restricted support is empty are dropped;
// rows with identical restricted support are merged keeping the smallest
// rhs. Redundant rows with distinct supports are intentionally kept.
DofPolytope build_general_region(const AntennaConfig& cfg, MessageSet msgs);

// Exact membership. Throws std::invalid_argument if d has mass outside the
// active set.
bool contains(const DofPolytope& poly, const DofTuple& d);

// Index of the first violated inequality at d, or nullopt when every listed
// inequality holds. Nonnegativity is not examined here.
std::optional<int> first_violated(const DofPolytope& poly, const DofTuple& d);

struct Vertex {
  DofTuple point;
  std::vector<int> active_facets;  // inequality indices tight at the point
  long long denominator = 1;       // lcm of the entry denominators
};

// All vertices, exactly, via basic feasible solutions of
// {inequalities} u {nonnegativity}: every full-rank constraint subset is
// solved and feasible solutions are kept. Output is deduplicated and sorted
// lexicographically in canonical message order.
std::vector<Vertex> enumerate_vertices(const DofPolytope& poly);

struct WeightedMax {
  Rat value;
  Vertex argmax;
};

// Exact maximum of <w,d> over the polytope; the maximizer is the
// lexicographically smallest optimal vertex. Weights must be supported on
// the active set.
WeightedMax max_weighted_sum(const DofPolytope& poly,
                             const std::map<Msg, Rat>& weights);

struct DenominatorStats {
  long long max_denominator = 1;
  std::vector<Vertex> fractional_vertices;
};

DenominatorStats vertex_denominator_stats(const DofPolytope& poly);

// Full irredundancy (beyond the construction-time dominance pruning):
// drops every inequality whose removal provably leaves the region unchanged.
DofPolytope remove_redundant(const DofPolytope& poly);

// Max of coordinate k over the slice where every other active coordinate is
// pinned to `fixed`. Throws if the pinned values are already infeasible.
Rat max_free_coordinate(const DofPolytope& poly, Msg k,
                        const std::map<Msg, Rat>& fixed);

// True when the two polytopes describe the same point set (mutual vertex
// containment; valid because both are bounded).
bool regions_set_equal(const DofPolytope& a, const DofPolytope& b);

}  // namespace mimodof
