#include "mimodof/channel.hpp"

#include <stdexcept>

#include "mimodof/rng.hpp"

namespace mimodof {

std::string_view channel_form_name(ChannelForm form) {
  switch (form) {
    case ChannelForm::Base: return "base";
    case ChannelForm::Extended: return "extended";
    case ChannelForm::AcsExtended: return "acs_extended";
  }
  return "?";
}

CMat ChannelSet::concatenated(int r) const {
  const CMat& h1 = channel(r, 1);
  const CMat& h2 = channel(r, 2);
  CMat out(h1.rows(), h1.cols() + h2.cols());
  out << h1, h2;
  return out;
}

ChannelSet sample_channels(const AntennaConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  ChannelSet ch;
  ch.cfg = cfg;
  ch.form = ChannelForm::Base;
  ch.extension = 1;
  for (int r = 1; r <= 2; ++r) {
    for (int t = 1; t <= 2; ++t) {
      CMat h(cfg.rx(r), cfg.tx(t));
      for (Eigen::Index i = 0; i < h.rows(); ++i) {
        for (Eigen::Index j = 0; j < h.cols(); ++j) {
          h(i, j) = rng.next_cnormal();
        }
      }
      ch.mutable_base(r, t) = h;
      ch.mutable_channel(r, t) = std::move(h);
    }
  }
  return ch;
}

namespace {

CMat kron_identity(int t, const CMat& h) {
  CMat out = CMat::Zero(t * h.rows(), t * h.cols());
  for (int k = 0; k < t; ++k) {
    out.block(k * h.rows(), k * h.cols(), h.rows(), h.cols()) = h;
  }
  return out;
}

}  // namespace

ChannelSet extend_channels(const ChannelSet& ch, int t) {
  if (ch.form != ChannelForm::Base) {
    throw std::invalid_argument("symbol extension applies to base channels");
  }
  if (t < 1) throw std::invalid_argument("extension length must be >= 1");
  ChannelSet out;
  out.cfg = ch.cfg;
  out.form = ChannelForm::Extended;
  out.extension = t;
  for (int r = 1; r <= 2; ++r) {
    for (int tx = 1; tx <= 2; ++tx) {
      out.mutable_base(r, tx) = ch.base(r, tx);
      out.mutable_channel(r, tx) = kron_identity(t, ch.base(r, tx));
    }
  }
  return out;
}

Eigen::MatrixXd realify_matrix(const CMat& h) {
  Eigen::MatrixXd out(2 * h.rows(), 2 * h.cols());
  out.topLeftCorner(h.rows(), h.cols()) = h.real();
  out.topRightCorner(h.rows(), h.cols()) = -h.imag();
  out.bottomLeftCorner(h.rows(), h.cols()) = h.imag();
  out.bottomRightCorner(h.rows(), h.cols()) = h.real();
  return out;
}

Eigen::VectorXd realify_vector(const Eigen::VectorXcd& x) {
  Eigen::VectorXd out(2 * x.size());
  out.head(x.size()) = x.real();
  out.tail(x.size()) = x.imag();
  return out;
}

ChannelSet acs_transform(const ChannelSet& ch) {
  if (ch.form == ChannelForm::AcsExtended) {
    throw std::invalid_argument("channels are already in the real form");
  }
  ChannelSet out;
  out.cfg = ch.cfg;
  out.form = ChannelForm::AcsExtended;
  out.extension = ch.extension;
  for (int r = 1; r <= 2; ++r) {
    for (int t = 1; t <= 2; ++t) {
      out.mutable_base(r, t) = ch.base(r, t);
      const CMat doubled =
          realify_matrix(ch.base(r, t)).cast<std::complex<double>>();
      out.mutable_channel(r, t) = kron_identity(out.extension, doubled);
    }
  }
  return out;
}

int numerical_rank(const CMat& m, double rtol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rtol * sigma(0)) ++rank;
  }
  return rank;
}

CMat null_space_basis(const CMat& h, double rtol) {
  if (h.cols() == 0) return CMat(h.cols(), 0);
  if (h.rows() == 0) return CMat::Identity(h.cols(), h.cols());
  Eigen::JacobiSVD<CMat> svd(h, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rtol * sigma(0)) ++rank;
  }
  return svd.matrixV().rightCols(h.cols() - rank);
}

Eigen::MatrixXd null_space_basis_real(const Eigen::MatrixXd& h, double rtol) {
  if (h.cols() == 0) return Eigen::MatrixXd(h.cols(), 0);
  if (h.rows() == 0) return Eigen::MatrixXd::Identity(h.cols(), h.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > rtol * sigma(0)) ++rank;
  }
  return svd.matrixV().rightCols(h.cols() - rank);
}

}  // namespace mimodof
