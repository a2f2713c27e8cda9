#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mimodof/channel.hpp"
#include "mimodof/dof_tuple.hpp"
#include "mimodof/region_eq.hpp"

namespace mimodof {

// Integer stream split of a DoF tuple, in the same shape the budget
// constraints use: z counts zero-forced streams, a1/a2 aligned pairs (a1 for
// the pair (W21, W22) collapsed at receiver 1, a2 for (W11, W12) at receiver
// 2), r the randomly beamformed remainder. The cognitive messages W01/W02
// have no alignment part by construction, and the multicast messages are
// random-only.
struct StreamAllocation {
  long long z11 = 0, z12 = 0, z21 = 0, z22 = 0;
  long long a1 = 0, a2 = 0;
  long long r11 = 0, r12 = 0, r21 = 0, r22 = 0;
  long long z01 = 0, z02 = 0, r01 = 0, r02 = 0;
  long long r1 = 0, r2 = 0, r0 = 0;

  // Total streams carried by a message.
  long long total(Msg m) const;
  long long align_of(Msg m) const;  // a2 for W11/W12, a1 for W21/W22, else 0
  long long zero_of(Msg m) const;
  long long random_of(Msg m) const;

  AuxAllocation aux() const {
    return {Rat(z11), Rat(z12), Rat(z21), Rat(z22),
            Rat(a1),  Rat(a2),  Rat(z01), Rat(z02)};
  }
  DofTuple totals() const;

  bool operator==(const StreamAllocation&) const = default;
};

// Splits an integer tuple: zero-forcing up to the per-channel null-space
// dimension first, then pairwise alignment from the leftover concatenated
// null space, then random beamforming; the cognitive messages get only the
// concatenated null space that remains after the private messages.
StreamAllocation allocate_streams(const AntennaConfig& cfg, const DofTuple& d);

// Thrown when an allocation asks for more null space than the channel set
// offers; carries the number (50..61) of the violated budget constraint.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(int constraint_number, const std::string& what)
      : std::runtime_error(what), constraint_number_(constraint_number) {}
  int constraint_number() const { return constraint_number_; }

 private:
  int constraint_number_;
};

// Column blocks of one message's precoder. Zero-forcing and random columns
// are unit norm; alignment columns are unit as stacked transmitter pairs
// (the pair shares one scale, otherwise the cancellation identity breaks).
struct MessageBeamformer {
  CMat z, a, r;

  CMat all() const {
    CMat out(rows(), z.cols() + a.cols() + r.cols());
    out << z, a, r;
    return out;
  }
  Eigen::Index rows() const {
    return z.rows() > 0 ? z.rows() : (a.rows() > 0 ? a.rows() : r.rows());
  }
};

struct Beamformers {
  std::array<MessageBeamformer, kNumMessages> per_message;

  const MessageBeamformer& of(Msg m) const { return per_message[index_of(m)]; }
  MessageBeamformer& of(Msg m) { return per_message[index_of(m)]; }
};

// Constructs all nine precoders for the channel set's working form. Private
// and multicast precoders have eff-M_t rows; W01/W02/W0 are stacked over
// both transmitters. All mixing randomness comes from the seed; real draws
// are used on realified channels.
Beamformers build_beamformers(const ChannelSet& ch,
                              const StreamAllocation& alloc,
                              std::uint64_t seed);

// Received direction matrices: D_i collects the desired messages of
// receiver i, U_i the undesired ones.
struct ReceivedMatrices {
  CMat d1, u1, d2, u2;
};

ReceivedMatrices assemble_received(const ChannelSet& ch,
                                   const Beamformers& bf);

struct RankCondition {
  std::string name;
  long long target = 0;
  long long measured = 0;
  bool pass = false;
  double margin = 1.0;  // sigma_target / sigma_max, 1.0 for empty targets
};

struct RankReport {
  std::array<RankCondition, 6> conditions;  // U1 U2 D1 D2 [D1 U1] [D2 U2]

  bool all_pass() const {
    for (const auto& c : conditions) {
      if (!c.pass) return false;
    }
    return true;
  }
  double min_margin() const {
    double m = 1.0;
    for (const auto& c : conditions) m = std::min(m, c.margin);
    return m;
  }
  const RankCondition& condition(std::string_view name) const;
};

// Measures the six independence conditions of the scheme: interference
// dimensions at each receiver, desired-signal dimensions, and the direct sum
// of the two. Targets come from the allocation; a singular value counts
// toward rank when it exceeds rtol times the largest.
RankReport verify_ranks(const ChannelSet& ch, const Beamformers& bf,
                        const StreamAllocation& alloc, double rtol = 1e-8);

}  // namespace mimodof
