#ifndef DIMSPEC_SPECTRUM_HPP
#define DIMSPEC_SPECTRUM_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "dimspec/error.hpp"
#include "dimspec/model.hpp"
#include "dimspec/potential.hpp"
#include "dimspec/signed_log.hpp"

namespace dimspec {

/// Inputs of the leading-order ground-state formula: coupling alpha
/// (hartree bohr^beta), exponent beta, Laplacian power n, dimension D.
struct EnergyQuery {
  SignedLogReal alpha;
  int beta = 1;
  int n = 1;
  int D = 3;
};

/// Leading-order large-D ground-state energy
///
///   E0 = -alpha (2n - beta)/(2n) D^(-2n beta/(2n - beta)) (2n / (2^(2n) alpha beta))^(-beta/(2n - beta))
///
/// evaluated with every factor in log space. Only attractive couplings with
/// 0 < beta < 2n are bound; the rest map to classification tags.
inline EnergyOutcome e0_general(const EnergyQuery& q) {
  if (q.D < 2 || q.n < 1 || q.beta < 0) return EnergyOutcome::invalid(InvalidReason::MalformedParameters);
  if (q.beta == 0) return EnergyOutcome::from_regime(Regime::Logarithmic);
  if (!q.alpha.is_positive()) return EnergyOutcome::from_regime(Regime::Repulsive);
  const int two_n = 2 * q.n;
  if (q.beta == two_n) return EnergyOutcome::from_regime(Regime::Divergent);
  if (q.beta > two_n) return EnergyOutcome::from_regime(Regime::Singular);

  const int gap = two_n - q.beta;
  const SignedLogReal inner = slr(two_n) / (slr(2.0).pow(Rational(two_n)) * q.alpha * slr(q.beta));
  const SignedLogReal magnitude = q.alpha * (slr(gap) / slr(two_n)) *
                                  slr(q.D).pow(Rational(-two_n * q.beta, gap)) *
                                  inner.pow(Rational(-q.beta, gap));
  return EnergyOutcome::bound(-magnitude);
}

namespace detail {

// n (D/2)^(2n) / (D/2 - n), written as 2n (D/2)^(2n) / (D - 2n)
inline SignedLogReal scheme_bracket(int D, int n) {
  return slr(2.0 * n) * slr(0.5 * D).pow(Rational(2 * n)) / slr(D - 2 * n);
}

inline EnergyOutcome negative_or_undefined(const SignedLogReal& e) {
  if (!e.is_negative()) return EnergyOutcome::invalid(InvalidReason::PrintedFormUndefined);
  return EnergyOutcome::bound(e);
}

}  // namespace detail

/// m = n closed form with beta = D - 2n substituted, in its rewritten shape:
///
///   E0 = -[n (D/2)^(2n) / (D/2 - n)]^((D/2 - n)/(D/2 - 2n)) alpha(D,n)^(-n/(D/2 - 2n)) (2n - D/2)/n
inline EnergyOutcome e0_scheme_mn(int D, int n) {
  if (D < 2 || n < 1) return EnergyOutcome::invalid(InvalidReason::MalformedParameters);
  if (n % 2 == 0) return EnergyOutcome::invalid(InvalidReason::RepulsiveCoupling);
  if (classify_regime(D, n, n) != Regime::BoundEligible) return classification_outcome(D, n, n);

  const SignedLogReal alpha = alpha_coefficient(D, n).alpha;
  const int denom = D - 4 * n;
  const SignedLogReal e = -(detail::scheme_bracket(D, n).pow(Rational(D - 2 * n, denom)) *
                            alpha.pow(Rational(-2 * n, denom)) * (slr(4 * n - D) / slr(2 * n)));
  return detail::negative_or_undefined(e);
}

/// m = 1 counterpart exactly as commonly printed:
///
///   E0 = -[n (D/2)^(2n) / (D/2 - n)]^((D/2 - n)/(D/2 - n - 1)) alpha(D,1)^(-n/(D/2 - n - 1)) (2n - D/2)/n
///
/// For n > 1 this does not agree with e0_general at beta = D - 2, and the
/// bracket base is negative whenever D < 2n. Kept for cross-validation only;
/// see e0_scheme_m1_rederived.
inline EnergyOutcome e0_scheme_m1(int D, int n) {
  if (D < 2 || n < 1) return EnergyOutcome::invalid(InvalidReason::MalformedParameters);
  if (classify_regime(D, n, 1) != Regime::BoundEligible) return classification_outcome(D, n, 1);
  if (D <= 2 * n) return EnergyOutcome::invalid(InvalidReason::PrintedFormUndefined);

  const SignedLogReal alpha = alpha_m1_closed_form(D);
  const int denom = D - 2 * n - 2;
  const SignedLogReal e = -(detail::scheme_bracket(D, n).pow(Rational(D - 2 * n, denom)) *
                            alpha.pow(Rational(-2 * n, denom)) * (slr(4 * n - D) / slr(2 * n)));
  return detail::negative_or_undefined(e);
}

/// m = 1 energy from the general formula with alpha(D, 1) and beta = D - 2.
inline EnergyOutcome e0_scheme_m1_rederived(int D, int n) {
  if (D < 2 || n < 1) return EnergyOutcome::invalid(InvalidReason::MalformedParameters);
  if (classify_regime(D, n, 1) != Regime::BoundEligible) return classification_outcome(D, n, 1);
  return e0_general(EnergyQuery{alpha_coefficient(D, 1).alpha, D - 2, n, D});
}

/// Printed vs rederived m = 1 energy at one window point.
struct SchemeDiscrepancy {
  int D = 0;
  int n = 0;
  EnergyOutcome printed;
  EnergyOutcome rederived;
  std::optional<double> log10_ratio;  // log10(printed / rederived) when both are bound
};

/// Every point of the m = 1 windows for 2 <= n <= max_n, printed against rederived.
inline std::vector<SchemeDiscrepancy> m1_printed_discrepancies(int max_n) {
  std::vector<SchemeDiscrepancy> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int D = 3; D < 2 * (n + 1); ++D) {
      SchemeDiscrepancy row{D, n, e0_scheme_m1(D, n), e0_scheme_m1_rederived(D, n), std::nullopt};
      if (row.printed.is_bound() && row.rederived.is_bound()) {
        row.log10_ratio = (row.printed.energy().lnmag() - row.rederived.energy().lnmag()) / kLn10;
      }
      out.push_back(row);
    }
  }
  return out;
}

struct QuantumNumber {
  double k_star = 0.0;
  long nearest = 0;
};

/// Principal quantum number k of the 3-D hydrogen level -1/(2k^2) with energy E.
inline QuantumNumber effective_quantum_number(const SignedLogReal& energy) {
  if (!energy.is_negative()) throw Error(ErrorCode::InvalidArgument, "effective quantum number needs E < 0");
  const double k = std::exp(-0.5 * (kLn2 + energy.lnmag()));
  return QuantumNumber{k, std::lround(k)};
}

}  // namespace dimspec

#endif  // DIMSPEC_SPECTRUM_HPP
