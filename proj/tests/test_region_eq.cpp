#include <doctest.h>

#include "mimodof/region_eq.hpp"
#include "mimodof/rng.hpp"

using namespace mimodof;

namespace {

DofTuple x_tuple(const Rat& d11, const Rat& d21, const Rat& d12,
                 const Rat& d22) {
  return DofTuple({{Msg::W11, d11}, {Msg::W21, d21}, {Msg::W12, d12},
                   {Msg::W22, d22}});
}

}  // namespace

TEST_CASE("witness values on hand-checked inputs") {
  SUBCASE("equal antennas, unit tuple: alignment only") {
    const auto aux =
        eq_witness(AntennaConfig(3, 3, 3, 3),
                   x_tuple(Rat(1), Rat(1), Rat(1), Rat(1)));
    CHECK(aux.z11 == Rat(0));
    CHECK(aux.z12 == Rat(0));
    CHECK(aux.z21 == Rat(0));
    CHECK(aux.z22 == Rat(0));
    CHECK(aux.a1 == Rat(1));
    CHECK(aux.a2 == Rat(1));
    CHECK(aux.z01 == Rat(0));
    CHECK(aux.z02 == Rat(0));
  }
  SUBCASE("single stream with no null space to use") {
    const auto aux = eq_witness(AntennaConfig(2, 1, 2, 1),
                                DofTuple({{Msg::W21, Rat(1)}}));
    CHECK(aux.z21 == Rat(0));  // min(1, (M1-N1)+) with M1 = N1 = 2
    CHECK(aux == AuxAllocation{});
  }
  SUBCASE("zero tuple gives zero auxiliaries") {
    CHECK(eq_witness(AntennaConfig(4, 3, 2, 1), DofTuple()) ==
          AuxAllocation{});
  }
  SUBCASE("zero-forcing saturates before alignment") {
    // (4,4,2,2) with two streams per private message: all zero-forced.
    const auto aux = eq_witness(AntennaConfig(4, 4, 2, 2),
                                x_tuple(Rat(2), Rat(2), Rat(2), Rat(2)));
    CHECK(aux.z11 == Rat(2));
    CHECK(aux.z12 == Rat(2));
    CHECK(aux.z21 == Rat(2));
    CHECK(aux.z22 == Rat(2));
    CHECK(aux.a1 == Rat(0));
    CHECK(aux.a2 == Rat(0));
  }
}

TEST_CASE("the witness always satisfies the budget constraints") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const AntennaConfig cfg(1 + rng.next_u64() % 4, 1 + rng.next_u64() % 4,
                            1 + rng.next_u64() % 4, 1 + rng.next_u64() % 4);
    DofTuple d;
    for (Msg m : kAllMessages) {
      d.set(m, Rat(rng.next_u64() % 9, 1 + rng.next_u64() % 3));
    }
    const auto aux = eq_witness(cfg, d);
    CHECK(!first_violated_budget(cfg, d, aux).has_value());
  }
}

TEST_CASE("achievable-region membership on frozen cases") {
  CHECK(eq_contains(AntennaConfig(2, 3, 4, 1), DofTuple()));
  CHECK(eq_contains(AntennaConfig(1, 1, 1, 1),
                    x_tuple(Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1, 3))));
  CHECK(!eq_contains(AntennaConfig(1, 1, 1, 1),
                     x_tuple(Rat(1), Rat(1), Rat(1), Rat(1))));
}

TEST_CASE("constructive membership agrees with the feasibility search") {
  Rng rng(77);
  int in_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const AntennaConfig cfg(1 + rng.next_u64() % 3, 1 + rng.next_u64() % 3,
                            1 + rng.next_u64() % 3, 1 + rng.next_u64() % 3);
    DofTuple d;
    for (Msg m : kAllMessages) {
      // Mix of integers and halves/thirds, small enough to land inside
      // reasonably often.
      d.set(m, Rat(rng.next_u64() % 4, 1 + rng.next_u64() % 3));
    }
    const bool constructive = eq_contains(cfg, d);
    const bool searched = eq_contains_search(cfg, d);
    CHECK(constructive == searched);
    in_count += constructive;
  }
  CHECK(in_count > 0);  // the sample actually exercises both verdicts
  CHECK(in_count < 400);
}

TEST_CASE("outer and achievable regions coincide on frozen configurations") {
  SUBCASE("single antennas, all nine messages") {
    const auto report =
        regions_equal(AntennaConfig(1, 1, 1, 1), MessageSet::all());
    CHECK(report.ok());
    CHECK(report.vertices_checked > 0);
  }
  SUBCASE("mixed antennas, four private messages") {
    const auto report = regions_equal(
        AntennaConfig(3, 4, 5, 6),
        MessageSet::of({Msg::W11, Msg::W21, Msg::W12, Msg::W22}));
    CHECK(report.ok());
  }
  SUBCASE("two-message subset") {
    const auto report = regions_equal(AntennaConfig(2, 2, 2, 2),
                                      MessageSet::of({Msg::W11, Msg::W22}));
    CHECK(report.ok());
  }
}

TEST_CASE("budget constraint text names the auxiliary") {
  CHECK(budget_constraint_text(53) == "(53) z21 + a1 <= d21");
  CHECK(budget_constraint_text(56) == "(56) z11 + z12 + a2 + z01 <= (M1+M2-N2)+");
}
