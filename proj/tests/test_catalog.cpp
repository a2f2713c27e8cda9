#include <doctest.h>

#include "mimodof/catalog.hpp"

using namespace mimodof;

TEST_CASE("preset message sets") {
  CHECK(preset_message_set(CatalogName::X) ==
        MessageSet::of({Msg::W11, Msg::W12, Msg::W21, Msg::W22}));
  CHECK(preset_message_set(CatalogName::ThreeMessageX) ==
        MessageSet::of({Msg::W11, Msg::W12, Msg::W21}));
  CHECK(preset_message_set(CatalogName::CognitiveX) ==
        MessageSet::of({Msg::W01, Msg::W21, Msg::W12, Msg::W22}));
  CHECK(preset_message_set(CatalogName::IC) ==
        MessageSet::of({Msg::W11, Msg::W22}));
  CHECK(preset_message_set(CatalogName::ICCM) ==
        MessageSet::of({Msg::W11, Msg::W22, Msg::W0}));
  CHECK(preset_message_set(CatalogName::CognitiveIC) ==
        MessageSet::of({Msg::W01, Msg::W22}));
  CHECK(preset_message_set(CatalogName::GeneralizedCognitiveIC) ==
        MessageSet::of({Msg::W21, Msg::W22, Msg::W01}));
  CHECK(preset_message_set(CatalogName::BCPCR) ==
        MessageSet::of({Msg::W11, Msg::W21, Msg::W01}));
  CHECK(preset_message_set(CatalogName::Full).size() == 9);
}

TEST_CASE("catalog names round-trip") {
  for (CatalogName name : kAllCatalogNames) {
    CHECK(catalog_from_name(catalog_name(name)) == name);
  }
  CHECK(!catalog_from_name("Y").has_value());
}

TEST_CASE("published region shapes") {
  CHECK(specialize_named(AntennaConfig(1, 1, 1, 1), CatalogName::X)
            .ineqs.size() == 8);
  CHECK(specialize_named(AntennaConfig(3, 2, 2, 2), CatalogName::BCPCR)
            .ineqs.size() == 4);
  CHECK(specialize_named(AntennaConfig(2, 2, 2, 2), CatalogName::IC)
            .ineqs.size() == 3);

  // The two-message sum bound of the interference channel.
  const auto ic = specialize_named(AntennaConfig(2, 2, 2, 2), CatalogName::IC);
  bool found = false;
  for (const auto& iq : ic.ineqs) {
    if (iq.coeffs == MessageSet::of({Msg::W11, Msg::W22})) {
      found = true;
      CHECK(iq.rhs == 2);
    }
  }
  CHECK(found);
}

TEST_CASE("published regions equal the general construction") {
  for (int m1 = 1; m1 <= 3; ++m1)
    for (int m2 = 1; m2 <= 3; ++m2)
      for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2) {
          const AntennaConfig cfg(m1, m2, n1, n2);
          for (CatalogName name : kAllCatalogNames) {
            const auto displayed = specialize_named(cfg, name);
            const auto general =
                build_general_region(cfg, preset_message_set(name));
            CHECK_MESSAGE(regions_set_equal(displayed, general),
                          catalog_name(name), " on ", cfg.to_string());
          }
        }
}

TEST_CASE("closed-form max sum values") {
  CHECK(closed_form_sumdof_x(3, 3) == Rat(4));
  CHECK(closed_form_sumdof_x(2, 3) == Rat(4));
  CHECK(closed_form_sumdof_x(1, 1) == Rat(4, 3));
  CHECK(closed_form_sumdof_x(4, 2) == Rat(4));   // ratio 2: receiver-limited
  CHECK(closed_form_sumdof_x(1, 3) == Rat(2));   // ratio 1/3: transmitter-limited

  CHECK(closed_form_sumdof_cogx(2, 2) == Rat(3));
  CHECK(closed_form_sumdof_cogx(3, 2) == Rat(4));
  CHECK(closed_form_sumdof_cogx(1, 2) == Rat(2));
}

TEST_CASE("piecewise formulas agree at their breakpoints") {
  // Ratio 2/3 and 3/4: both pieces give the same value.
  CHECK(Rat(2 * 2) == Rat(4 * 3, 3));            // x at M/N = 2/3 with (2,3)
  CHECK(closed_form_sumdof_x(2, 3) == Rat(4));
  CHECK(Rat(2 * 3) == Rat(3 * 4, 2));            // cognitive at 3/4 with (3,4)
  CHECK(closed_form_sumdof_cogx(3, 4) == Rat(6));
  // Ratio 1: middle pieces coincide.
  CHECK(closed_form_sumdof_x(5, 5) == Rat(4 * 5, 3));
  CHECK(closed_form_sumdof_cogx(5, 5) == Rat(3 * 5, 2));
  // Ratio 3/2: upper pieces coincide.
  CHECK(closed_form_sumdof_x(3, 2) == Rat(4));
  CHECK(closed_form_sumdof_x(3, 2) == Rat(2 * 2));
  CHECK(closed_form_sumdof_cogx(3, 2) == Rat(4));
}

TEST_CASE("fractional max-sum corner of the four-message channel") {
  SUBCASE("single antennas") {
    const DofTuple corner = acs_corner_x(AntennaConfig(1, 1, 1, 1));
    for (Msg m : preset_message_set(CatalogName::X).members()) {
      CHECK(corner[m] == Rat(1, 3));
    }
    CHECK(corner.sum() == Rat(4, 3));
  }
  SUBCASE("uneven antennas") {
    const DofTuple corner = acs_corner_x(AntennaConfig(1, 3, 2, 2));
    CHECK(corner[Msg::W11] == Rat(1, 3));
    CHECK(corner[Msg::W12] == Rat(4, 3));
    CHECK(corner[Msg::W21] == Rat(1, 3));
    CHECK(corner[Msg::W22] == Rat(4, 3));
    CHECK(corner.sum() == Rat(10, 3));

    const DofTuple swapped = acs_corner_x(AntennaConfig(2, 1, 2, 1));
    CHECK(swapped[Msg::W11] == Rat(4, 3));
    CHECK(swapped[Msg::W12] == Rat(1, 3));
    CHECK(swapped[Msg::W21] == Rat(1, 3));
    CHECK(swapped[Msg::W22] == Rat(1, 3));
    CHECK(swapped.sum() == Rat(7, 3));
  }
  SUBCASE("requires the degenerate antenna balance") {
    CHECK_THROWS_AS(acs_corner_x(AntennaConfig(2, 2, 2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(acs_corner_x(AntennaConfig(1, 2, 2, 2)),
                    std::invalid_argument);
  }
  SUBCASE("the corner is a vertex and attains the max sum") {
    for (int c = 2; c <= 6; ++c) {
      for (int m1 = 1; m1 < c; ++m1)
        for (int n1 = 1; n1 < c; ++n1) {
          const AntennaConfig cfg(m1, c - m1, n1, c - n1);
          if (cfg.min_antenna() != 1) continue;
          const DofTuple corner = acs_corner_x(cfg);
          const auto poly = specialize_named(cfg, CatalogName::X);
          bool is_vertex = false;
          for (const auto& v : enumerate_vertices(poly)) {
            if (v.point == corner) is_vertex = true;
          }
          CHECK_MESSAGE(is_vertex, "corner not a vertex on ", cfg.to_string());
          std::map<Msg, Rat> unit;
          for (Msg m : poly.active.members()) unit[m] = Rat(1);
          CHECK(max_weighted_sum(poly, unit).value == corner.sum());
          CHECK(corner.sum() == Rat(c) - Rat(2, 3));
        }
    }
  }
}

TEST_CASE("fractional max-sum corners of the cognitive variant") {
  SUBCASE("single antennas: the two corners coincide") {
    const auto [first, second] = acs_corner_cogx(AntennaConfig(1, 1, 1, 1));
    CHECK(first == second);
    CHECK(first[Msg::W01] == Rat(1, 2));
    CHECK(first[Msg::W21] == Rat(1, 2));
    CHECK(first[Msg::W12] == Rat(0));
    CHECK(first[Msg::W22] == Rat(1, 2));
    CHECK(first.sum() == Rat(3, 2));
  }
  SUBCASE("uneven antennas: two distinct corners") {
    const auto [first, second] = acs_corner_cogx(AntennaConfig(1, 3, 2, 2));
    CHECK(first[Msg::W01] == Rat(1, 2));
    CHECK(first[Msg::W21] == Rat(1, 2));
    CHECK(first[Msg::W12] == Rat(1));
    CHECK(first[Msg::W22] == Rat(3, 2));
    CHECK(second[Msg::W01] == Rat(3, 2));
    CHECK(second[Msg::W21] == Rat(1, 2));
    CHECK(second[Msg::W12] == Rat(0));
    CHECK(second[Msg::W22] == Rat(3, 2));
    CHECK(first.sum() == Rat(7, 2));
    CHECK(second.sum() == Rat(7, 2));
  }
  SUBCASE("coinciding corners when the direct link saturates") {
    const auto [first, second] = acs_corner_cogx(AntennaConfig(2, 1, 2, 1));
    CHECK(first == second);
    CHECK(first.sum() == Rat(5, 2));
  }
  SUBCASE("both corners lie in the region and attain its max sum") {
    for (int c = 2; c <= 6; ++c) {
      for (int m1 = 1; m1 < c; ++m1)
        for (int n1 = 1; n1 < c; ++n1) {
          const AntennaConfig cfg(m1, c - m1, n1, c - n1);
          if (cfg.min_antenna() != 1) continue;
          const auto poly = specialize_named(cfg, CatalogName::CognitiveX);
          std::map<Msg, Rat> unit;
          for (Msg m : poly.active.members()) unit[m] = Rat(1);
          const Rat max_sum = max_weighted_sum(poly, unit).value;
          const auto [first, second] = acs_corner_cogx(cfg);
          for (const DofTuple& corner : {first, second}) {
            CHECK(contains(poly, corner));
            CHECK(corner.sum() == Rat(c) - Rat(1, 2));
          }
          CHECK(max_sum == Rat(c) - Rat(1, 2));
        }
    }
  }
}

TEST_CASE("cognition can only grow the region") {
  const auto cog_set = preset_message_set(CatalogName::CognitiveX);
  for (int m1 = 1; m1 <= 3; ++m1)
    for (int m2 = 1; m2 <= 3; ++m2)
      for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2) {
          const AntennaConfig cfg(m1, m2, n1, n2);
          const auto x_region = specialize_named(cfg, CatalogName::X);
          const auto cog_region = build_general_region(cfg, cog_set);
          for (const auto& v : enumerate_vertices(x_region)) {
            DofTuple mapped;
            mapped.set(Msg::W01, v.point[Msg::W11]);
            mapped.set(Msg::W21, v.point[Msg::W21]);
            mapped.set(Msg::W12, v.point[Msg::W12]);
            mapped.set(Msg::W22, v.point[Msg::W22]);
            CHECK(contains(cog_region, mapped));
          }
        }
}

TEST_CASE("consistency sweep is clean and hits the known denominators") {
  const auto report = check_catalog_consistency(4);
  CHECK(report.ok());
  CHECK(report.configs_checked == 256);
  CHECK(report.symmetric_checked == 16);
  CHECK(report.max_denominator_x == 3);
  CHECK(report.max_denominator_cogx == 2);
  CHECK(report.max_denominator_three_message == 1);
}

TEST_CASE("redundant transmit or receive antennas keep the max sum at 4") {
  std::map<Msg, Rat> unit;
  for (Msg m : preset_message_set(CatalogName::X).members()) unit[m] = Rat(1);
  for (const AntennaConfig& cfg :
       {AntennaConfig(3, 3, 3, 3), AntennaConfig(3, 3, 2, 2),
        AntennaConfig(2, 2, 3, 3)}) {
    const auto poly = specialize_named(cfg, CatalogName::X);
    CHECK(max_weighted_sum(poly, unit).value == Rat(4));
  }
}
