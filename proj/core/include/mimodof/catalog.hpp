#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mimodof/antenna.hpp"
#include "mimodof/dof_tuple.hpp"
#include "mimodof/region.hpp"

namespace mimodof {

// Named message-set presets the 2x2 network specializes to.
enum class CatalogName {
  X,
  ThreeMessageX,
  CognitiveX,
  IC,
  ICCM,
  CognitiveIC,
  GeneralizedCognitiveIC,
  BCPCR,
  Full,
};

inline constexpr std::array<CatalogName, 9> kAllCatalogNames = {
    CatalogName::X,           CatalogName::ThreeMessageX,
    CatalogName::CognitiveX,  CatalogName::IC,
    CatalogName::ICCM,        CatalogName::CognitiveIC,
    CatalogName::GeneralizedCognitiveIC,
    CatalogName::BCPCR,       CatalogName::Full,
};

std::string_view catalog_name(CatalogName name);
std::optional<CatalogName> catalog_from_name(std::string_view text);

MessageSet preset_message_set(CatalogName name);

// The published closed-form region for the preset, in its displayed shape
// (set-equal to the general region restricted to the preset's messages; the
// inequality lists differ). Full falls back to the general construction.
DofPolytope specialize_named(const AntennaConfig& cfg, CatalogName name);

// Max sum DoF of the four-private-message channel with symmetric (M,M,N,N)
// antennas: 2M, 4N/3, 4M/3 or 2N depending on M/N.
Rat closed_form_sumdof_x(int m, int n);

// Cognitive variant: 2M, 3N/2, M+N/2 or 2N depending on M/N.
Rat closed_form_sumdof_cogx(int m, int n);

// The fractional max-sum corner d_ij = min(M_j, N_i) - 2/3 that exists when
// M1+M2 = N1+N2 with a single-antenna node. Throws std::invalid_argument
// when the antenna condition does not hold.
DofTuple acs_corner_x(const AntennaConfig& cfg);

// The two displayed max-sum corners of the cognitive variant (they coincide
// when M1 >= N1), each summing to M1+M2 - 1/2. Same precondition.
std::pair<DofTuple, DofTuple> acs_corner_cogx(const AntennaConfig& cfg);

struct ConsistencyReport {
  struct Discrepancy {
    AntennaConfig cfg;
    std::string check;
    std::string detail;
  };
  std::vector<Discrepancy> discrepancies;
  int configs_checked = 0;
  int symmetric_checked = 0;
  // Observed vertex-denominator maxima over the sweep.
  long long max_denominator_x = 1;
  long long max_denominator_cogx = 1;
  long long max_denominator_three_message = 1;

  bool ok() const { return discrepancies.empty(); }
};

// Sweeps every antenna configuration with entries in 1..max_antennas and
// cross-validates the region machinery against the closed forms: symmetric
// sum-DoF formulas (exact), integrality of every three-private-message
// vertex, and the fractional corner on qualifying configurations.
ConsistencyReport check_catalog_consistency(int max_antennas);

}  // namespace mimodof
