#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace mimodof {

// splitmix64; fully specified, so streams are reproducible from the seed
// alone with no dependence on library distribution internals.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives the sub-stream seed for index k (per-trial channels, beamformer
// mixing, ...) from a master seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t k);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform on (0, 1].
  double next_unit();

  // Standard normal via Box-Muller (pairs cached).
  double next_gaussian();

  // Circularly symmetric complex normal, unit variance.
  std::complex<double> next_cnormal();

  // Columns drawn uniformly from the unit sphere (normalized Gaussian
  // vectors); real_valued selects real entries for realified systems.
  Eigen::MatrixXcd sphere_columns(int rows, int cols, bool real_valued);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mimodof
