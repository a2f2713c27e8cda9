#pragma once

#include <stdexcept>
#include <string>

namespace mimodof {

// Antenna counts (M1, M2) at the transmitters and (N1, N2) at the receivers.
struct AntennaConfig {
  int m1 = 1;
  int m2 = 1;
  int n1 = 1;
  int n2 = 1;

  AntennaConfig() = default;
  AntennaConfig(int m1_, int m2_, int n1_, int n2_)
      : m1(m1_), m2(m2_), n1(n1_), n2(n2_) {
    if (m1 < 1 || m2 < 1 || n1 < 1 || n2 < 1) {
      throw std::invalid_argument("antenna counts must be >= 1");
    }
  }

  // M_t for t in {1,2}; N_r for r in {1,2}.
  int tx(int t) const { return t == 1 ? m1 : m2; }
  int rx(int r) const { return r == 1 ? n1 : n2; }

  int min_antenna() const { return std::min(std::min(m1, m2), std::min(n1, n2)); }

  bool operator==(const AntennaConfig&) const = default;

  std::string to_string() const {
    return "(" + std::to_string(m1) + "," + std::to_string(m2) + "," +
           std::to_string(n1) + "," + std::to_string(n2) + ")";
  }
};

}  // namespace mimodof
