#include "mimodof/precoder.hpp"

#include <algorithm>

#include "mimodof/rng.hpp"

namespace mimodof {

long long StreamAllocation::zero_of(Msg m) const {
  switch (m) {
    case Msg::W11: return z11;
    case Msg::W12: return z12;
    case Msg::W21: return z21;
    case Msg::W22: return z22;
    case Msg::W01: return z01;
    case Msg::W02: return z02;
    default: return 0;
  }
}

long long StreamAllocation::align_of(Msg m) const {
  switch (m) {
    case Msg::W11:
    case Msg::W12: return a2;
    case Msg::W21:
    case Msg::W22: return a1;
    default: return 0;
  }
}

long long StreamAllocation::random_of(Msg m) const {
  switch (m) {
    case Msg::W11: return r11;
    case Msg::W12: return r12;
    case Msg::W21: return r21;
    case Msg::W22: return r22;
    case Msg::W01: return r01;
    case Msg::W02: return r02;
    case Msg::W1: return r1;
    case Msg::W2: return r2;
    case Msg::W0: return r0;
  }
  return 0;
}

long long StreamAllocation::total(Msg m) const {
  return zero_of(m) + align_of(m) + random_of(m);
}

DofTuple StreamAllocation::totals() const {
  DofTuple d;
  for (Msg m : kAllMessages) d.set(m, Rat(total(m)));
  return d;
}

StreamAllocation allocate_streams(const AntennaConfig& cfg,
                                  const DofTuple& d) {
  if (!d.is_nonnegative()) {
    throw std::invalid_argument("stream counts must be nonnegative");
  }
  if (!d.is_integer_valued()) {
    throw std::invalid_argument(
        "stream allocation needs an integer tuple; extend the channel first");
  }
  auto get = [&](Msg m) { return d[m].numerator(); };
  const long long m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  auto pos = [](long long v) { return std::max(v, 0ll); };

  StreamAllocation a;
  a.z11 = std::min(get(Msg::W11), pos(m1 - n2));
  a.z12 = std::min(get(Msg::W12), pos(m2 - n2));
  a.z21 = std::min(get(Msg::W21), pos(m1 - n1));
  a.z22 = std::min(get(Msg::W22), pos(m2 - n1));

  a.a2 = std::min({get(Msg::W11) - a.z11, get(Msg::W12) - a.z12,
                   pos(m1 + m2 - n2 - a.z11 - a.z12)});
  a.a1 = std::min({get(Msg::W21) - a.z21, get(Msg::W22) - a.z22,
                   pos(m1 + m2 - n1 - a.z21 - a.z22)});

  a.r11 = get(Msg::W11) - a.z11 - a.a2;
  a.r12 = get(Msg::W12) - a.z12 - a.a2;
  a.r21 = get(Msg::W21) - a.z21 - a.a1;
  a.r22 = get(Msg::W22) - a.z22 - a.a1;

  a.z01 = std::min(get(Msg::W01), pos(m1 + m2 - n2 - a.z11 - a.z12 - a.a2));
  a.z02 = std::min(get(Msg::W02), pos(m1 + m2 - n1 - a.z21 - a.z22 - a.a1));
  a.r01 = get(Msg::W01) - a.z01;
  a.r02 = get(Msg::W02) - a.z02;

  a.r1 = get(Msg::W1);
  a.r2 = get(Msg::W2);
  a.r0 = get(Msg::W0);
  return a;
}

namespace {

CMat null_basis_for(const ChannelSet& ch, const CMat& h) {
  if (ch.is_real()) {
    return null_space_basis_real(h.real()).cast<std::complex<double>>();
  }
  return null_space_basis(h);
}

CMat mixed_columns(const ChannelSet& ch, const CMat& basis, long long cols,
                   Rng& rng) {
  if (cols == 0) return CMat(basis.rows(), 0);
  const CMat mix =
      rng.sphere_columns(static_cast<int>(basis.cols()),
                         static_cast<int>(cols), ch.is_real());
  return basis * mix;
}

}  // namespace

Beamformers build_beamformers(const ChannelSet& ch,
                              const StreamAllocation& alloc,
                              std::uint64_t seed) {
  const AntennaConfig eff = ch.effective_cfg();
  if (const auto violated =
          first_violated_budget(eff, alloc.totals(), alloc.aux())) {
    throw BudgetError(*violated, "allocation exceeds null-space budget " +
                                     budget_constraint_text(*violated));
  }

  Rng rng(seed);
  Beamformers bf;

  // Null spaces: H(r,t) nulls transmitter t at receiver r; the concatenated
  // [H_r1 H_r2] nulls a stacked two-transmitter beamformer at receiver r.
  const CMat null_h21 = null_basis_for(ch, ch.channel(2, 1));
  const CMat null_h22 = null_basis_for(ch, ch.channel(2, 2));
  const CMat null_h11 = null_basis_for(ch, ch.channel(1, 1));
  const CMat null_h12 = null_basis_for(ch, ch.channel(1, 2));
  const CMat null_cat2 = null_basis_for(ch, ch.concatenated(2));
  const CMat null_cat1 = null_basis_for(ch, ch.concatenated(1));

  auto require_cols = [](const CMat& basis, long long need) {
    if (basis.cols() < need) {
      throw std::runtime_error("numerical null space smaller than budget");
    }
  };
  require_cols(null_h21, alloc.z11);
  require_cols(null_h22, alloc.z12);
  require_cols(null_h11, alloc.z21);
  require_cols(null_h12, alloc.z22);
  require_cols(null_cat2, alloc.a2 + alloc.z01);
  require_cols(null_cat1, alloc.a1 + alloc.z02);

  bf.of(Msg::W11).z = mixed_columns(ch, null_h21, alloc.z11, rng);
  bf.of(Msg::W12).z = mixed_columns(ch, null_h22, alloc.z12, rng);
  bf.of(Msg::W21).z = mixed_columns(ch, null_h11, alloc.z21, rng);
  bf.of(Msg::W22).z = mixed_columns(ch, null_h12, alloc.z22, rng);

  const Eigen::Index m1_eff = ch.channel(1, 1).cols();
  const Eigen::Index m2_eff = ch.channel(1, 2).cols();
  const CMat pair2 = mixed_columns(ch, null_cat2, alloc.a2, rng);
  bf.of(Msg::W11).a = pair2.topRows(m1_eff);
  bf.of(Msg::W12).a = pair2.bottomRows(m2_eff);
  const CMat pair1 = mixed_columns(ch, null_cat1, alloc.a1, rng);
  bf.of(Msg::W21).a = pair1.topRows(m1_eff);
  bf.of(Msg::W22).a = pair1.bottomRows(m2_eff);

  bf.of(Msg::W01).z = mixed_columns(ch, null_cat2, alloc.z01, rng);
  bf.of(Msg::W02).z = mixed_columns(ch, null_cat1, alloc.z02, rng);

  const bool real = ch.is_real();
  auto random_block = [&](Eigen::Index rows, long long cols) {
    return rng.sphere_columns(static_cast<int>(rows), static_cast<int>(cols),
                              real);
  };
  bf.of(Msg::W11).r = random_block(m1_eff, alloc.r11);
  bf.of(Msg::W12).r = random_block(m2_eff, alloc.r12);
  bf.of(Msg::W21).r = random_block(m1_eff, alloc.r21);
  bf.of(Msg::W22).r = random_block(m2_eff, alloc.r22);
  bf.of(Msg::W01).r = random_block(m1_eff + m2_eff, alloc.r01);
  bf.of(Msg::W02).r = random_block(m1_eff + m2_eff, alloc.r02);
  bf.of(Msg::W1).r = random_block(m1_eff, alloc.r1);
  bf.of(Msg::W2).r = random_block(m2_eff, alloc.r2);
  bf.of(Msg::W0).r = random_block(m1_eff + m2_eff, alloc.r0);

  // Give the alignment-free blocks consistent (empty) shapes.
  for (Msg m : kAllMessages) {
    auto& mb = bf.of(m);
    const Eigen::Index rows = std::max({mb.z.rows(), mb.a.rows(), mb.r.rows(),
                                        Eigen::Index(0)});
    if (mb.z.cols() == 0) mb.z = CMat(rows, 0);
    if (mb.a.cols() == 0) mb.a = CMat(rows, 0);
    if (mb.r.cols() == 0) mb.r = CMat(rows, 0);
  }
  return bf;
}

namespace {

CMat hcat(std::initializer_list<CMat> blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows = std::max(rows, b.rows());
    cols += b.cols();
  }
  CMat out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace

ReceivedMatrices assemble_received(const ChannelSet& ch,
                                   const Beamformers& bf) {
  const CMat cat1 = ch.concatenated(1);
  const CMat cat2 = ch.concatenated(2);
  auto v = [&](Msg m) { return bf.of(m).all(); };

  ReceivedMatrices rx;
  rx.d1 = hcat({ch.channel(1, 1) * v(Msg::W11), ch.channel(1, 2) * v(Msg::W12),
                cat1 * v(Msg::W01), ch.channel(1, 1) * v(Msg::W1),
                ch.channel(1, 2) * v(Msg::W2), cat1 * v(Msg::W0)});
  rx.u1 = hcat({ch.channel(1, 1) * v(Msg::W21), ch.channel(1, 2) * v(Msg::W22),
                cat1 * v(Msg::W02)});
  rx.d2 = hcat({ch.channel(2, 1) * v(Msg::W21), ch.channel(2, 2) * v(Msg::W22),
                cat2 * v(Msg::W02), ch.channel(2, 1) * v(Msg::W1),
                ch.channel(2, 2) * v(Msg::W2), cat2 * v(Msg::W0)});
  rx.u2 = hcat({ch.channel(2, 1) * v(Msg::W11), ch.channel(2, 2) * v(Msg::W12),
                cat2 * v(Msg::W01)});
  return rx;
}

const RankCondition& RankReport::condition(std::string_view name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown rank condition " + std::string(name));
}

namespace {

RankCondition measure_rank(std::string name, const CMat& m, long long target,
                           double rtol) {
  RankCondition c;
  c.name = std::move(name);
  c.target = target;
  if (m.cols() == 0 || m.rows() == 0) {
    c.measured = 0;
  } else {
    Eigen::JacobiSVD<CMat> svd(m);
    const auto& sigma = svd.singularValues();
    c.measured = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > rtol * sigma(0)) ++c.measured;
    }
    if (target >= 1 && target <= sigma.size() && sigma(0) > 0.0) {
      c.margin = sigma(target - 1) / sigma(0);
    } else if (target >= 1) {
      c.margin = 0.0;  // rank target beyond the matrix dimensions
    }
  }
  c.pass = (c.measured == c.target);
  return c;
}

}  // namespace

RankReport verify_ranks(const ChannelSet& ch, const Beamformers& bf,
                        const StreamAllocation& alloc, double rtol) {
  const ReceivedMatrices rx = assemble_received(ch, bf);
  auto d = [&](Msg m) { return alloc.total(m); };

  const long long tu1 = (d(Msg::W21) - alloc.z21) + (d(Msg::W22) - alloc.z22) -
                        alloc.a1 + (d(Msg::W02) - alloc.z02);
  const long long tu2 = (d(Msg::W11) - alloc.z11) + (d(Msg::W12) - alloc.z12) -
                        alloc.a2 + (d(Msg::W01) - alloc.z01);
  const long long td1 = d(Msg::W11) + d(Msg::W12) + d(Msg::W01) + d(Msg::W1) +
                        d(Msg::W2) + d(Msg::W0);
  const long long td2 = d(Msg::W21) + d(Msg::W22) + d(Msg::W02) + d(Msg::W1) +
                        d(Msg::W2) + d(Msg::W0);

  RankReport report;
  report.conditions[0] = measure_rank("U1", rx.u1, tu1, rtol);
  report.conditions[1] = measure_rank("U2", rx.u2, tu2, rtol);
  report.conditions[2] = measure_rank("D1", rx.d1, td1, rtol);
  report.conditions[3] = measure_rank("D2", rx.d2, td2, rtol);
  report.conditions[4] =
      measure_rank("[D1 U1]", hcat({rx.d1, rx.u1}), td1 + tu1, rtol);
  report.conditions[5] =
      measure_rank("[D2 U2]", hcat({rx.d2, rx.u2}), td2 + tu2, rtol);
  return report;
}

}  // namespace mimodof
