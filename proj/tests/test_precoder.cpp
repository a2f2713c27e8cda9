#include <doctest.h>

#include "mimodof/precoder.hpp"
#include "mimodof/rng.hpp"

using namespace mimodof;

namespace {

DofTuple x_tuple(long long d11, long long d21, long long d12, long long d22) {
  return DofTuple({{Msg::W11, Rat(d11)}, {Msg::W21, Rat(d21)},
                   {Msg::W12, Rat(d12)}, {Msg::W22, Rat(d22)}});
}

}  // namespace

TEST_CASE("stream allocation on hand-checked tuples") {
  SUBCASE("alignment onto the leftover concatenated null space") {
    const auto alloc =
        allocate_streams(AntennaConfig(3, 3, 3, 3), x_tuple(1, 1, 1, 1));
    CHECK(alloc.z11 == 0);
    CHECK(alloc.z12 == 0);
    CHECK(alloc.z21 == 0);
    CHECK(alloc.z22 == 0);
    CHECK(alloc.a1 == 1);
    CHECK(alloc.a2 == 1);
    CHECK(alloc.r11 == 0);
    CHECK(alloc.r22 == 0);
  }
  SUBCASE("zero-forcing absorbs everything when transmitters dominate") {
    const auto alloc =
        allocate_streams(AntennaConfig(4, 4, 2, 2), x_tuple(2, 2, 2, 2));
    CHECK(alloc.z11 == 2);
    CHECK(alloc.z12 == 2);
    CHECK(alloc.z21 == 2);
    CHECK(alloc.z22 == 2);
    CHECK(alloc.a1 == 0);
    CHECK(alloc.a2 == 0);
    CHECK(alloc.r11 == 0);
  }
  SUBCASE("multicast messages ride on random beamforming only") {
    const auto alloc = allocate_streams(AntennaConfig(1, 1, 1, 1),
                                        DofTuple({{Msg::W0, Rat(1)}}));
    CHECK(alloc.r0 == 1);
    CHECK(alloc.totals().sum() == Rat(1));
    CHECK(alloc.aux() == AuxAllocation{});
  }
  SUBCASE("cognitive message takes the residual null space") {
    // (2,2,1,1): concatenated null at receiver 2 has dim 2; one goes to the
    // pair (W11, W12), the rest to W01.
    const auto alloc = allocate_streams(
        AntennaConfig(2, 2, 1, 1),
        DofTuple({{Msg::W11, Rat(1)}, {Msg::W12, Rat(1)}, {Msg::W01, Rat(1)}}));
    CHECK(alloc.z11 == 1);
    CHECK(alloc.z12 == 1);
    CHECK(alloc.a2 == 0);
    CHECK(alloc.z01 == 1);
    CHECK(alloc.r01 == 0);
  }
  SUBCASE("fractional tuples are rejected") {
    CHECK_THROWS_AS(allocate_streams(AntennaConfig(1, 1, 1, 1),
                                     DofTuple({{Msg::W11, Rat(1, 3)}})),
                    std::invalid_argument);
  }
}

TEST_CASE("zero-forcing blocks vanish at the unintended receiver") {
  SUBCASE("private message nulled through a single channel") {
    const auto ch = sample_channels(AntennaConfig(2, 2, 1, 1), 17);
    const auto alloc =
        allocate_streams(ch.cfg, DofTuple({{Msg::W11, Rat(1)}}));
    REQUIRE(alloc.z11 == 1);
    const auto bf = build_beamformers(ch, alloc, 99);
    const auto& h21 = ch.channel(2, 1);
    CHECK((h21 * bf.of(Msg::W11).z).norm() <= 1e-10 * h21.norm());
  }
  SUBCASE("cognitive message nulled through the concatenated channel") {
    const auto ch = sample_channels(AntennaConfig(2, 2, 2, 1), 18);
    const auto alloc =
        allocate_streams(ch.cfg, DofTuple({{Msg::W02, Rat(2)}}));
    REQUIRE(alloc.z02 == 2);
    const auto bf = build_beamformers(ch, alloc, 7);
    const auto cat1 = ch.concatenated(1);
    CHECK((cat1 * bf.of(Msg::W02).z).norm() <= 1e-10 * cat1.norm());
  }
}

TEST_CASE("alignment pairs cancel at their common unintended receiver") {
  const auto ch = sample_channels(AntennaConfig(3, 3, 3, 3), 21);
  const auto alloc = allocate_streams(ch.cfg, x_tuple(1, 1, 1, 1));
  REQUIRE(alloc.a1 == 1);
  REQUIRE(alloc.a2 == 1);
  const auto bf = build_beamformers(ch, alloc, 22);

  const CMat at_rx1 = ch.channel(1, 1) * bf.of(Msg::W21).a +
                      ch.channel(1, 2) * bf.of(Msg::W22).a;
  const CMat at_rx2 = ch.channel(2, 1) * bf.of(Msg::W11).a +
                      ch.channel(2, 2) * bf.of(Msg::W12).a;
  CHECK(at_rx1.norm() <= 1e-10);
  CHECK(at_rx2.norm() <= 1e-10);
}

TEST_CASE("beamformer columns are unit norm (pairs jointly)") {
  const auto ch = sample_channels(AntennaConfig(3, 2, 2, 2), 31);
  DofTuple d({{Msg::W11, Rat(1)}, {Msg::W12, Rat(1)}, {Msg::W21, Rat(1)},
              {Msg::W22, Rat(1)}, {Msg::W0, Rat(1)}});
  const auto alloc = allocate_streams(ch.cfg, d);
  const auto bf = build_beamformers(ch, alloc, 5);
  for (Msg m : kAllMessages) {
    const auto& mb = bf.of(m);
    for (Eigen::Index c = 0; c < mb.z.cols(); ++c) {
      CHECK(mb.z.col(c).norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
    for (Eigen::Index c = 0; c < mb.r.cols(); ++c) {
      CHECK(mb.r.col(c).norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  for (Eigen::Index c = 0; c < alloc.a1; ++c) {
    const double joint = std::hypot(bf.of(Msg::W21).a.col(c).norm(),
                                    bf.of(Msg::W22).a.col(c).norm());
    CHECK(joint == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("zero allocation yields zero-column matrices everywhere") {
  const auto ch = sample_channels(AntennaConfig(2, 3, 1, 2), 8);
  const auto bf = build_beamformers(ch, StreamAllocation{}, 0);
  for (Msg m : kAllMessages) CHECK(bf.of(m).all().cols() == 0);
  const auto rx = assemble_received(ch, bf);
  CHECK(rx.d1.cols() == 0);
  CHECK(rx.u1.cols() == 0);
  CHECK(rx.d2.cols() == 0);
  CHECK(rx.u2.cols() == 0);
}

TEST_CASE("received matrices have the allocated column counts") {
  const auto ch = sample_channels(AntennaConfig(3, 3, 3, 3), 77);
  const auto alloc = allocate_streams(ch.cfg, x_tuple(1, 1, 1, 1));
  const auto bf = build_beamformers(ch, alloc, 78);
  const auto rx = assemble_received(ch, bf);
  CHECK(rx.d1.cols() == 2);  // d11 + d12
  CHECK(rx.u1.cols() == 2);  // d21 + d22
  CHECK(rx.d2.cols() == 2);
  CHECK(rx.u2.cols() == 2);
  CHECK(rx.d1.rows() == 3);
}

TEST_CASE("rank verification passes on a generic integer tuple") {
  const auto ch = sample_channels(AntennaConfig(3, 3, 3, 3), 123);
  const auto alloc = allocate_streams(ch.cfg, x_tuple(1, 1, 1, 1));
  const auto bf = build_beamformers(ch, alloc, 124);
  const auto report = verify_ranks(ch, bf, alloc);
  CHECK(report.all_pass());
  CHECK(report.condition("U1").target == 1);  // aligned pair collapses to 1
  CHECK(report.condition("U2").target == 1);
  CHECK(report.condition("D1").target == 2);
  CHECK(report.condition("[D1 U1]").target == 3);
  CHECK(report.min_margin() > 0);
}

TEST_CASE("overdrawn null-space budgets raise the violated constraint") {
  const auto ch = sample_channels(AntennaConfig(1, 1, 1, 1), 3);
  StreamAllocation alloc;
  alloc.z21 = 1;  // no null space of H11 exists on (1,1,1,1)
  try {
    build_beamformers(ch, alloc, 0);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(e.constraint_number() == 51);
    CHECK(std::string(e.what()).find("(51)") != std::string::npos);
  }
}
