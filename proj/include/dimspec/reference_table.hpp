#ifndef DIMSPEC_REFERENCE_TABLE_HPP
#define DIMSPEC_REFERENCE_TABLE_HPP

#include <array>
#include <optional>

#include "dimspec/signed_log.hpp"

namespace dimspec {

/// Published leading-order ground energies for the m = n scheme, in hartree.
struct ReferenceEntry {
  int D;
  int n;
  double energy;
};

inline constexpr std::array<ReferenceEntry, 10> kReferenceTable{{
    {3, 1, -0.11},
    {7, 3, -0.00041},
    {8, 3, -6.06e-6},
    {9, 3, -1.52e-8},
    {10, 3, -1.95e-13},
    {11, 3, -9.92e-28},
    {11, 5, -1.75e-7},
    {12, 5, -3.23e-9},
    {18, 5, -5.70e-47},
    {19, 5, -4.41e-97},
}};

/// Reference energy for (D, n) under m = n, if tabulated.
inline std::optional<SignedLogReal> reference_energy(int D, int n) {
  for (const auto& e : kReferenceTable) {
    if (e.D == D && e.n == n) return SignedLogReal::from_double(e.energy);
  }
  return std::nullopt;
}

}  // namespace dimspec

#endif  // DIMSPEC_REFERENCE_TABLE_HPP
