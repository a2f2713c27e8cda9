#include "mimodof/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace mimodof {

std::string_view catalog_name(CatalogName name) {
  switch (name) {
    case CatalogName::X: return "X";
    case CatalogName::ThreeMessageX: return "three-message-X";
    case CatalogName::CognitiveX: return "cognitive-X";
    case CatalogName::IC: return "IC";
    case CatalogName::ICCM: return "IC-CM";
    case CatalogName::CognitiveIC: return "cognitive-IC";
    case CatalogName::GeneralizedCognitiveIC: return "generalized-cognitive-IC";
    case CatalogName::BCPCR: return "BC-PCR";
    case CatalogName::Full: return "full";
  }
  return "?";
}

std::optional<CatalogName> catalog_from_name(std::string_view text) {
  for (CatalogName name : kAllCatalogNames) {
    if (catalog_name(name) == text) return name;
  }
  return std::nullopt;
}

MessageSet preset_message_set(CatalogName name) {
  using M = Msg;
  switch (name) {
    case CatalogName::X:
      return MessageSet::of({M::W11, M::W12, M::W21, M::W22});
    case CatalogName::ThreeMessageX:
      return MessageSet::of({M::W11, M::W12, M::W21});
    case CatalogName::CognitiveX:
      return MessageSet::of({M::W01, M::W21, M::W12, M::W22});
    case CatalogName::IC:
      return MessageSet::of({M::W11, M::W22});
    case CatalogName::ICCM:
      return MessageSet::of({M::W11, M::W22, M::W0});
    case CatalogName::CognitiveIC:
      return MessageSet::of({M::W01, M::W22});
    case CatalogName::GeneralizedCognitiveIC:
      return MessageSet::of({M::W21, M::W22, M::W01});
    case CatalogName::BCPCR:
      return MessageSet::of({M::W11, M::W21, M::W01});
    case CatalogName::Full:
      return MessageSet::all();
  }
  throw std::invalid_argument("unknown catalog name");
}

DofPolytope specialize_named(const AntennaConfig& cfg, CatalogName name) {
  using M = Msg;
  const long long m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  auto set = [](std::initializer_list<Msg> l) { return MessageSet::of(l); };

  DofPolytope poly;
  poly.active = preset_message_set(name);
  switch (name) {
    case CatalogName::X:
      poly.ineqs = {
          {set({M::W11, M::W12, M::W21}), std::max(m1, n1), {3}},
          {set({M::W11, M::W12, M::W22}), std::max(m2, n1), {4}},
          {set({M::W21, M::W22, M::W11}), std::max(m1, n2), {5}},
          {set({M::W21, M::W22, M::W12}), std::max(m2, n2), {6}},
          {set({M::W11, M::W12}), n1, {7}},
          {set({M::W21, M::W22}), n2, {8}},
          {set({M::W11, M::W21}), m1, {9}},
          {set({M::W12, M::W22}), m2, {10}},
      };
      break;
    case CatalogName::ThreeMessageX:
      poly.ineqs = {
          {set({M::W11, M::W12, M::W21}), std::max(m1, n1), {3}},
          {set({M::W11, M::W12}), n1, {7}},
          {set({M::W21, M::W11}), m1, {9}},
          {set({M::W21, M::W12}), std::max(m2, n2), {6}},
          {set({M::W21}), n2, {8}},
          {set({M::W12}), m2, {10}},
      };
      break;
    case CatalogName::CognitiveX:
      poly.ineqs = {
          {set({M::W01, M::W12, M::W21}), std::max(m1, n1), {3}},
          {set({M::W01, M::W12, M::W22}), std::max(m2, n1), {4}},
          {set({M::W21, M::W22, M::W12}), std::max(m2, n2), {6}},
          {set({M::W01, M::W12}), n1, {7}},
          {set({M::W21, M::W22}), n2, {8}},
          {set({M::W21}), m1, {9}},
          {set({M::W12, M::W22}), m2, {10}},
          {set({M::W01, M::W21, M::W12, M::W22}), m1 + m2, {}},
      };
      break;
    case CatalogName::IC:
      poly.ineqs = {
          {set({M::W11}), std::min(m1, n1), {7, 9}},
          {set({M::W22}), std::min(m2, n2), {8, 10}},
          {set({M::W11, M::W22}),
           std::min(std::max(m2, n1), std::max(m1, n2)), {4, 5}},
      };
      break;
    case CatalogName::ICCM:
      poly.ineqs = {
          {set({M::W11}), m1, {9}},
          {set({M::W22}), m2, {10}},
          {set({M::W0, M::W11}), n1, {7}},
          {set({M::W0, M::W22}), n2, {8}},
          {set({M::W0, M::W11, M::W22}),
           std::min({m1 + m2, std::max(m2, n1), std::max(m1, n2)}),
           {4, 5, 11}},
      };
      break;
    case CatalogName::CognitiveIC:
      poly.ineqs = {
          {set({M::W01}), n1, {7}},
          {set({M::W22}), std::min(m2, n2), {8, 10}},
          {set({M::W01, M::W22}), std::min(m1 + m2, std::max(m2, n1)),
           {4, 11}},
      };
      break;
    case CatalogName::GeneralizedCognitiveIC:
      poly.ineqs = {
          {set({M::W01}), n1, {7}},
          {set({M::W21}), m1, {9}},
          {set({M::W22}), m2, {10}},
          {set({M::W21, M::W22}), n2, {8}},
          {set({M::W01, M::W21}), std::max(m1, n1), {3}},
          {set({M::W01, M::W22}), std::max(m2, n1), {4}},
          {set({M::W01, M::W21, M::W22}), m1 + m2, {}},
      };
      break;
    case CatalogName::BCPCR:
      poly.ineqs = {
          {set({M::W21}), n2, {8}},
          {set({M::W01, M::W11}), n1, {7}},
          {set({M::W11, M::W21}), m1, {9}},
          {set({M::W01, M::W11, M::W21}),
           std::min(m1 + m2, std::max(m1, n1)), {3, 11}},
      };
      break;
    case CatalogName::Full:
      return build_general_region(cfg, MessageSet::all());
  }
  return poly;
}

namespace {

// Piecewise values keyed by the ratio M/N; adjacent pieces agree at the
// breakpoints, which a unit test pins down.
Rat piecewise_sumdof(int m, int n, const Rat& low_break, const Rat& low_val,
                     const Rat& mid_val, const Rat& high_val,
                     const Rat& top_val) {
  const Rat ratio(m, n);
  if (ratio <= low_break) return low_val;
  if (ratio <= Rat(1)) return mid_val;
  if (ratio <= Rat(3, 2)) return high_val;
  return top_val;
}

}  // namespace

Rat closed_form_sumdof_x(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("antenna counts must be >= 1");
  return piecewise_sumdof(m, n, Rat(2, 3), Rat(2 * m), Rat(4 * n, 3),
                          Rat(4 * m, 3), Rat(2 * n));
}

Rat closed_form_sumdof_cogx(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("antenna counts must be >= 1");
  return piecewise_sumdof(m, n, Rat(3, 4), Rat(2 * m), Rat(3 * n, 2),
                          Rat(m) + Rat(n, 2), Rat(2 * n));
}

namespace {

void require_acs_configuration(const AntennaConfig& cfg) {
  if (cfg.m1 + cfg.m2 != cfg.n1 + cfg.n2 || cfg.min_antenna() != 1) {
    throw std::invalid_argument(
        "fractional max-sum corner requires M1+M2 = N1+N2 with a "
        "single-antenna node; got " + cfg.to_string());
  }
}

}  // namespace

DofTuple acs_corner_x(const AntennaConfig& cfg) {
  require_acs_configuration(cfg);
  const Rat gap(2, 3);
  DofTuple d;
  d.set(Msg::W11, Rat(std::min(cfg.m1, cfg.n1)) - gap);
  d.set(Msg::W12, Rat(std::min(cfg.m2, cfg.n1)) - gap);
  d.set(Msg::W21, Rat(std::min(cfg.m1, cfg.n2)) - gap);
  d.set(Msg::W22, Rat(std::min(cfg.m2, cfg.n2)) - gap);
  return d;
}

std::pair<DofTuple, DofTuple> acs_corner_cogx(const AntennaConfig& cfg) {
  require_acs_configuration(cfg);
  const Rat half(1, 2);
  DofTuple first;
  first.set(Msg::W01, Rat(std::min(cfg.m1, cfg.n1)) - half);
  first.set(Msg::W21, Rat(std::min(cfg.m1, cfg.n2)) - half);
  first.set(Msg::W12, Rat(std::min(cfg.m1 + cfg.m2, cfg.n1)) -
                          Rat(std::min(cfg.m1, cfg.n1)));
  first.set(Msg::W22, Rat(std::min(cfg.m2, cfg.n2)) - half);

  DofTuple second;
  second.set(Msg::W01, Rat(std::min(cfg.m1 + cfg.m2, cfg.n1)) - half);
  second.set(Msg::W21, Rat(std::min(cfg.m1, cfg.n2)) - half);
  second.set(Msg::W12, Rat(0));
  second.set(Msg::W22, Rat(std::min(cfg.m2, cfg.n2)) - half);
  return {first, second};
}

ConsistencyReport check_catalog_consistency(int max_antennas) {
  if (max_antennas < 1) throw std::invalid_argument("sweep bound must be >= 1");
  ConsistencyReport report;
  const std::map<Msg, Rat> unit_x = {{Msg::W11, Rat(1)},
                                     {Msg::W12, Rat(1)},
                                     {Msg::W21, Rat(1)},
                                     {Msg::W22, Rat(1)}};
  const std::map<Msg, Rat> unit_cogx = {{Msg::W01, Rat(1)},
                                        {Msg::W12, Rat(1)},
                                        {Msg::W21, Rat(1)},
                                        {Msg::W22, Rat(1)}};

  for (int m1 = 1; m1 <= max_antennas; ++m1)
    for (int m2 = 1; m2 <= max_antennas; ++m2)
      for (int n1 = 1; n1 <= max_antennas; ++n1)
        for (int n2 = 1; n2 <= max_antennas; ++n2) {
          const AntennaConfig cfg(m1, m2, n1, n2);
          ++report.configs_checked;

          const DofPolytope x_region =
              build_general_region(cfg, preset_message_set(CatalogName::X));
          const DofPolytope cogx_region = build_general_region(
              cfg, preset_message_set(CatalogName::CognitiveX));
          const DofPolytope three_region = build_general_region(
              cfg, preset_message_set(CatalogName::ThreeMessageX));

          const auto x_stats = vertex_denominator_stats(x_region);
          const auto cogx_stats = vertex_denominator_stats(cogx_region);
          const auto three_stats = vertex_denominator_stats(three_region);
          report.max_denominator_x =
              std::max(report.max_denominator_x, x_stats.max_denominator);
          report.max_denominator_cogx = std::max(report.max_denominator_cogx,
                                                 cogx_stats.max_denominator);
          report.max_denominator_three_message =
              std::max(report.max_denominator_three_message,
                       three_stats.max_denominator);

          if (three_stats.max_denominator != 1) {
            report.discrepancies.push_back(
                {cfg, "three-message-integrality",
                 "fractional vertex found"});
          }

          if (m1 == m2 && n1 == n2) {
            ++report.symmetric_checked;
            const Rat x_max = max_weighted_sum(x_region, unit_x).value;
            if (x_max != closed_form_sumdof_x(m1, n1)) {
              report.discrepancies.push_back(
                  {cfg, "x-sumdof",
                   "region max " + format_rat(x_max) + " vs closed form " +
                       format_rat(closed_form_sumdof_x(m1, n1))});
            }
            const Rat cog_max = max_weighted_sum(cogx_region, unit_cogx).value;
            if (cog_max != closed_form_sumdof_cogx(m1, n1)) {
              report.discrepancies.push_back(
                  {cfg, "cognitive-x-sumdof",
                   "region max " + format_rat(cog_max) + " vs closed form " +
                       format_rat(closed_form_sumdof_cogx(m1, n1))});
            }
          }

          if (m1 + m2 == n1 + n2 && cfg.min_antenna() == 1) {
            const DofTuple corner = acs_corner_x(cfg);
            if (!contains(x_region, corner)) {
              report.discrepancies.push_back(
                  {cfg, "acs-corner-membership", corner.to_string()});
            }
            const Rat x_max = max_weighted_sum(x_region, unit_x).value;
            if (corner.sum() != x_max) {
              report.discrepancies.push_back(
                  {cfg, "acs-corner-optimality",
                   "corner sum " + format_rat(corner.sum()) +
                       " vs region max " + format_rat(x_max)});
            }
          }
        }
  return report;
}

}  // namespace mimodof
