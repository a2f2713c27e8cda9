#include "mimodof/rng.hpp"

#include <cmath>
#include <numbers>

namespace mimodof {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t k) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = a ^ (k * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull);
  return splitmix64(s);
}

double Rng::next_unit() {
  // 53 mantissa bits; shifted into (0, 1].
  return (double)((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::complex<double> Rng::next_cnormal() {
  // Unit variance overall: each quadrature carries 1/2.
  const double scale = std::numbers::sqrt2 / 2.0;
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re * scale, im * scale};
}

Eigen::MatrixXcd Rng::sphere_columns(int rows, int cols, bool real_valued) {
  Eigen::MatrixXcd x(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      x(r, c) = real_valued ? std::complex<double>(next_gaussian(), 0.0)
                            : next_cnormal();
    }
    const double norm = x.col(c).norm();
    if (norm > 0.0) x.col(c) /= norm;
  }
  return x;
}

}  // namespace mimodof
