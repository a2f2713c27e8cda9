#include "mimodof/region_eq.hpp"

#include <algorithm>
#include <stdexcept>

#include "mimodof/rational_linalg.hpp"

namespace mimodof {

namespace {

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }

Rat total_dof(const DofTuple& d) { return d.sum(); }

}  // namespace

AuxAllocation eq_witness(const AntennaConfig& cfg, const DofTuple& d) {
  if (!d.is_nonnegative()) {
    throw std::invalid_argument("DoF tuple must be nonnegative");
  }
  const Rat m1(cfg.m1), m2(cfg.m2), n1(cfg.n1), n2(cfg.n2);

  AuxAllocation aux;
  aux.z11 = rmin(d[Msg::W11], pos_part(m1 - n2));
  aux.z12 = rmin(d[Msg::W12], pos_part(m2 - n2));
  aux.z21 = rmin(d[Msg::W21], pos_part(m1 - n1));
  aux.z22 = rmin(d[Msg::W22], pos_part(m2 - n1));

  aux.a1 = rmin(rmin(d[Msg::W21] - aux.z21, d[Msg::W22] - aux.z22),
                pos_part(m1 + m2 - n1 - aux.z21 - aux.z22));
  aux.a2 = rmin(rmin(d[Msg::W11] - aux.z11, d[Msg::W12] - aux.z12),
                pos_part(m1 + m2 - n2 - aux.z11 - aux.z12));

  aux.z01 = rmin(d[Msg::W01],
                 pos_part(m1 + m2 - n2 - aux.z11 - aux.z12 - aux.a2));
  aux.z02 = rmin(d[Msg::W02],
                 pos_part(m1 + m2 - n1 - aux.z21 - aux.z22 - aux.a1));
  return aux;
}

std::optional<int> first_violated_budget(const AntennaConfig& cfg,
                                         const DofTuple& d,
                                         const AuxAllocation& aux) {
  const Rat m1(cfg.m1), m2(cfg.m2), n1(cfg.n1), n2(cfg.n2);
  const struct {
    int number;
    Rat lhs;
    Rat rhs;
  } checks[] = {
      {50, aux.z21 + aux.z22 + aux.a1 + aux.z02, pos_part(m1 + m2 - n1)},
      {51, aux.z21, pos_part(m1 - n1)},
      {52, aux.z22, pos_part(m2 - n1)},
      {53, aux.z21 + aux.a1, d[Msg::W21]},
      {54, aux.z22 + aux.a1, d[Msg::W22]},
      {55, aux.z02, d[Msg::W02]},
      {56, aux.z11 + aux.z12 + aux.a2 + aux.z01, pos_part(m1 + m2 - n2)},
      {57, aux.z11, pos_part(m1 - n2)},
      {58, aux.z12, pos_part(m2 - n2)},
      {59, aux.z11 + aux.a2, d[Msg::W11]},
      {60, aux.z12 + aux.a2, d[Msg::W12]},
      {61, aux.z01, d[Msg::W01]},
  };
  for (const Rat* v : {&aux.z11, &aux.z12, &aux.z21, &aux.z22, &aux.a1,
                       &aux.a2, &aux.z01, &aux.z02}) {
    if (*v < Rat(0)) return 50;  // sign violations are budget violations
  }
  for (const auto& c : checks) {
    if (c.lhs > c.rhs) return c.number;
  }
  return std::nullopt;
}

std::string budget_constraint_text(int number) {
  switch (number) {
    case 50: return "(50) z21 + z22 + a1 + z02 <= (M1+M2-N1)+";
    case 51: return "(51) z21 <= (M1-N1)+";
    case 52: return "(52) z22 <= (M2-N1)+";
    case 53: return "(53) z21 + a1 <= d21";
    case 54: return "(54) z22 + a1 <= d22";
    case 55: return "(55) z02 <= d02";
    case 56: return "(56) z11 + z12 + a2 + z01 <= (M1+M2-N2)+";
    case 57: return "(57) z11 <= (M1-N2)+";
    case 58: return "(58) z12 <= (M2-N2)+";
    case 59: return "(59) z11 + a2 <= d11";
    case 60: return "(60) z12 + a2 <= d12";
    case 61: return "(61) z01 <= d01";
    default: return "(unknown budget constraint)";
  }
}

namespace {

bool dimension_counts_hold(const AntennaConfig& cfg, const DofTuple& d,
                           const AuxAllocation& aux) {
  const Rat m1(cfg.m1), m2(cfg.m2), n1(cfg.n1), n2(cfg.n2);
  const Rat total = total_dof(d);
  if (total - aux.z21 - aux.z22 - aux.a1 - aux.z02 > n1) return false;
  if (total - aux.z11 - aux.z12 - aux.a2 - aux.z01 > n2) return false;
  if (d[Msg::W1] + d[Msg::W11] + d[Msg::W21] > m1) return false;
  if (d[Msg::W2] + d[Msg::W12] + d[Msg::W22] > m2) return false;
  if (total > rmin(m1 + m2, n1 + n2)) return false;
  return true;
}

}  // namespace

bool eq_contains(const AntennaConfig& cfg, const DofTuple& d) {
  if (!d.is_nonnegative()) return false;
  return dimension_counts_hold(cfg, d, eq_witness(cfg, d));
}

namespace {

// Max of z_a + z_b + a + z_0 over one auxiliary group's budget polytope:
//   z_a <= capA, z_b <= capB, group total <= capSum,
//   z_a + a <= dA, z_b + a <= dB, z_0 <= d0, all vars >= 0.
Rat max_group_total(const Rat& cap_sum, const Rat& cap_a, const Rat& cap_b,
                    const Rat& da, const Rat& db, const Rat& d0) {
  const RatMat a = {
      {Rat(1), Rat(1), Rat(1), Rat(1)},
      {Rat(1), Rat(0), Rat(0), Rat(0)},
      {Rat(0), Rat(1), Rat(0), Rat(0)},
      {Rat(1), Rat(0), Rat(1), Rat(0)},
      {Rat(0), Rat(1), Rat(1), Rat(0)},
      {Rat(0), Rat(0), Rat(0), Rat(1)},
  };
  const RatVec b = {cap_sum, cap_a, cap_b, da, db, d0};
  Rat best(0);
  for (const auto& x : enumerate_basic_feasible_points(a, b)) {
    const Rat total = x[0] + x[1] + x[2] + x[3];
    best = std::max(best, total);
  }
  return best;
}

}  // namespace

bool eq_contains_search(const AntennaConfig& cfg, const DofTuple& d) {
  if (!d.is_nonnegative()) return false;
  const Rat m1(cfg.m1), m2(cfg.m2), n1(cfg.n1), n2(cfg.n2);
  const Rat total = total_dof(d);

  if (d[Msg::W1] + d[Msg::W11] + d[Msg::W21] > m1) return false;
  if (d[Msg::W2] + d[Msg::W12] + d[Msg::W22] > m2) return false;
  if (total > rmin(m1 + m2, n1 + n2)) return false;

  const Rat best1 =
      max_group_total(pos_part(m1 + m2 - n1), pos_part(m1 - n1),
                      pos_part(m2 - n1), d[Msg::W21], d[Msg::W22],
                      d[Msg::W02]);
  if (total - best1 > n1) return false;
  const Rat best2 =
      max_group_total(pos_part(m1 + m2 - n2), pos_part(m1 - n2),
                      pos_part(m2 - n2), d[Msg::W11], d[Msg::W12],
                      d[Msg::W01]);
  return total - best2 <= n2;
}

EqualityReport regions_equal(const AntennaConfig& cfg, MessageSet msgs) {
  EqualityReport report;
  const DofPolytope poly = build_general_region(cfg, msgs);
  const Rat half(1, 2);

  for (const Vertex& v : enumerate_vertices(poly)) {
    ++report.vertices_checked;
    if (!eq_contains(cfg, v.point)) {
      report.discrepancies.push_back({v.point, "vertex_not_in_eq"});
    }
    for (Msg k : msgs.members()) {
      ++report.probes_checked;
      DofTuple probe = v.point;
      probe.set(k, probe[k] + half);
      const bool in_region = contains(poly, probe);
      const bool in_eq = eq_contains(cfg, probe);
      if (in_region != in_eq) {
        report.discrepancies.push_back({probe, "membership_mismatch"});
      }
    }
  }
  return report;
}

}  // namespace mimodof
