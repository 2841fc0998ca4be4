#ifndef DIMSPEC_FEASIBILITY_HPP
#define DIMSPEC_FEASIBILITY_HPP

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dimspec/error.hpp"
#include "dimspec/model.hpp"
#include "dimspec/parallel.hpp"
#include "dimspec/potential.hpp"
#include "dimspec/reference_table.hpp"
#include "dimspec/spectrum.hpp"

namespace dimspec {

/// Integer dimensions with a bound ground state for one n and scheme:
/// members of the open interval (d_min, d_max) that classify as bound.
struct FeasibilityWindow {
  int n = 1;
  CouplingScheme scheme = CouplingScheme::MEqualsN;
  int d_min = 0;
  int d_max = 0;
  std::vector<int> members;
  /// Members the published m = 1 list leaves out (only D = 4 at n = 3).
  std::vector<int> paper_omitted;
};

inline int poisson_power(int n, CouplingScheme scheme) {
  switch (scheme) {
    case CouplingScheme::MEqualsN: return n;
    case CouplingScheme::MEqualsOne: return 1;
    case CouplingScheme::Explicit: break;
  }
  throw Error(ErrorCode::InvalidArgument, "feasibility windows are defined for the mn and m1 schemes only");
}

/// Annotation for points where the inequality admits a dimension that the
/// published m = 1 list does not mention.
inline std::string_view paper_annotation(const SystemParams& p) {
  if (p.m == 1 && p.n == 3 && p.D == 4) return "paper-omitted";
  return {};
}

inline FeasibilityWindow bound_dims(int n, CouplingScheme scheme) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Laplacian power n must be >= 1");
  const int m = poisson_power(n, scheme);
  FeasibilityWindow w{n, scheme, 0, 0, {}, {}};
  if (scheme == CouplingScheme::MEqualsN) {
    w.d_min = 2 * n;
    w.d_max = 4 * n;
  } else {
    w.d_min = 2;
    w.d_max = 2 * (n + 1);
  }
  for (int D = w.d_min + 1; D < w.d_max; ++D) {
    if (classify_regime(D, n, m) != Regime::BoundEligible) continue;
    w.members.push_back(D);
    if (!paper_annotation(SystemParams{D, n, m, scheme}).empty()) w.paper_omitted.push_back(D);
  }
  return w;
}

struct VerifiedExclusion {
  std::vector<int> dims;
  int max_n_checked = 0;
};

/// Dimensions {4, 5, 6}, confirmed by enumeration to lie outside every m = n
/// window for n <= max_n.
inline VerifiedExclusion excluded_dims_universal(int max_n = 64) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "max_n must be >= 1");
  constexpr std::array<int, 3> kClaimed{4, 5, 6};
  for (int n = 1; n <= max_n; ++n) {
    const auto w = bound_dims(n, CouplingScheme::MEqualsN);
    for (int D : kClaimed) {
      if (std::find(w.members.begin(), w.members.end(), D) != w.members.end()) {
        throw Error(ErrorCode::NoConvergence,
                    "D = " + std::to_string(D) + " admits a bound state at n = " + std::to_string(n));
      }
    }
  }
  return VerifiedExclusion{{kClaimed.begin(), kClaimed.end()}, max_n};
}

/// Closed integer range [lo, hi].
struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
};

struct ScanLimits {
  int max_D = 64;
  int max_n = 16;
};

/// Record for one grid point: classification, alpha, and the general-formula
/// energy where bound. Reference energies are attached for tabulated m = n points.
inline ScanRecord evaluate_point(const SystemParams& p) {
  ScanRecord r;
  r.params = p;
  r.beta = p.beta();
  r.formula = Formula::General;
  if (r.beta >= 0) r.alpha = alpha_coefficient(p.D, p.m).alpha;
  if (classify_regime(p.D, p.n, p.m) == Regime::BoundEligible) {
    r.outcome = e0_general(EnergyQuery{r.alpha, r.beta, p.n, p.D});
  } else {
    r.outcome = classification_outcome(p.D, p.n, p.m);
  }
  if (p.m == p.n) r.paper_value = reference_energy(p.D, p.n);
  return r;
}

/// Evaluates every (D, n) in the grid. Output order is ascending n, then
/// ascending D, independent of the worker count.
inline std::vector<ScanRecord> scan(IntRange dims, IntRange powers, CouplingScheme scheme, unsigned threads = 1,
                                    int explicit_m = 0, ScanLimits limits = {}) {
  if (dims.empty() || powers.empty()) throw Error(ErrorCode::InvalidRange, "scan ranges must be non-empty");
  if (dims.lo < 2 || dims.hi > limits.max_D) {
    throw Error(ErrorCode::InvalidRange, "D range must lie in [2, " + std::to_string(limits.max_D) + "]");
  }
  if (powers.lo < 1 || powers.hi > limits.max_n) {
    throw Error(ErrorCode::InvalidRange, "n range must lie in [1, " + std::to_string(limits.max_n) + "]");
  }
  if (scheme == CouplingScheme::Explicit && explicit_m < 1) {
    throw Error(ErrorCode::InvalidArgument, "explicit scheme needs m >= 1");
  }

  const std::size_t per_n = static_cast<std::size_t>(dims.size());
  std::vector<ScanRecord> out(per_n * static_cast<std::size_t>(powers.size()));
  parallel_for_index(out.size(), threads, [&](std::size_t i) {
    const int n = powers.lo + static_cast<int>(i / per_n);
    const int D = dims.lo + static_cast<int>(i % per_n);
    out[i] = evaluate_point(SystemParams::make(D, n, scheme, explicit_m));
  });
  return out;
}

}  // namespace dimspec

#endif  // DIMSPEC_FEASIBILITY_HPP
