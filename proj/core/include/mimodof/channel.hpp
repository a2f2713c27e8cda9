#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "mimodof/antenna.hpp"

namespace mimodof {

using CMat = Eigen::MatrixXcd;

enum class ChannelForm { Base, Extended, AcsExtended };

std::string_view channel_form_name(ChannelForm form);

// The four channel matrices of the 2x2 network. base(r,t) always holds the
// unextended N_r x M_t block; channel(r,t) holds the working matrix for the
// current form:
//   Base          N_r x M_t, complex
//   Extended      T-fold block diagonal, T*N_r x T*M_t
//   AcsExtended   T-fold block diagonal of the doubled real representation,
//                 2T*N_r x 2T*M_t, all entries real
struct ChannelSet {
  AntennaConfig cfg;
  ChannelForm form = ChannelForm::Base;
  int extension = 1;  // T

  const CMat& base(int r, int t) const { return base_[r - 1][t - 1]; }
  const CMat& channel(int r, int t) const { return eff_[r - 1][t - 1]; }
  CMat& mutable_base(int r, int t) { return base_[r - 1][t - 1]; }
  CMat& mutable_channel(int r, int t) { return eff_[r - 1][t - 1]; }

  // [H_r1 H_r2] in the working form.
  CMat concatenated(int r) const;

  bool is_real() const { return form == ChannelForm::AcsExtended; }
  int multiplier() const {
    return form == ChannelForm::AcsExtended ? 2 * extension : extension;
  }
  // Antenna counts of the working matrices.
  AntennaConfig effective_cfg() const {
    const int s = multiplier();
    return AntennaConfig(s * cfg.m1, s * cfg.m2, s * cfg.n1, s * cfg.n2);
  }

 private:
  CMat base_[2][2];
  CMat eff_[2][2];
};

// Generic channels: i.i.d. circularly symmetric complex Gaussian entries of
// unit variance, reproducible from the seed.
ChannelSet sample_channels(const AntennaConfig& cfg, std::uint64_t seed);

// T-fold symbol extension: every block becomes I_T (x) H.
ChannelSet extend_channels(const ChannelSet& ch, int t);

// Doubled real representation [[Re(H), -Im(H)], [Im(H), Re(H)]] of every
// block; an extended input yields I_T (x) Hhat (realification applied to the
// per-slot block, not to the big block-diagonal matrix).
ChannelSet acs_transform(const ChannelSet& ch);

// Realification of a complex vector: Re stacked over Im.
Eigen::VectorXd realify_vector(const Eigen::VectorXcd& x);
// The doubled real representation of a complex matrix.
Eigen::MatrixXd realify_matrix(const CMat& h);

// Orthonormal basis of the numerical right null space: the trailing
// right-singular vectors whose singular values fall below rtol times the
// largest. Full-rank wide-or-square inputs yield a basis with zero columns.
CMat null_space_basis(const CMat& h, double rtol = 1e-8);
Eigen::MatrixXd null_space_basis_real(const Eigen::MatrixXd& h,
                                      double rtol = 1e-8);

// Numerical rank by the same singular-value cutoff.
int numerical_rank(const CMat& m, double rtol = 1e-8);

}  // namespace mimodof
