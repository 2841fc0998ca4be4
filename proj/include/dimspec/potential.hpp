#ifndef DIMSPEC_POTENTIAL_HPP
#define DIMSPEC_POTENTIAL_HPP

#include <cmath>
#include <string>

#include "dimspec/error.hpp"
#include "dimspec/model.hpp"
#include "dimspec/signed_log.hpp"

namespace dimspec {

/// A point on the half-integer lattice, stored as twice its value.
class HalfInteger {
 public:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  static constexpr HalfInteger from_int(int k) { return HalfInteger(2 * k); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

 private:
  int twice_;
};

/// ln Gamma(x) on the positive half-integer lattice by exact recurrence:
/// Gamma(1) = 1, Gamma(1/2) = sqrt(pi), Gamma(x + 1) = x Gamma(x).
/// The log terms are summed with Kahan compensation.
inline double log_gamma_half(HalfInteger x) {
  if (x.twice() <= 0) {
    throw Error(ErrorCode::Pole, "Gamma has a pole at " + std::to_string(x.value()));
  }
  double sum = x.is_integer() ? 0.0 : 0.5 * kLnPi;
  double carry = 0.0;
  // start at 1 (integers) or 1/2 (half-integers), multiply up to x - 1
  for (int t = x.is_integer() ? 2 : 1; t < x.twice(); t += 2) {
    const double term = std::log(0.5 * t) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

/// Coefficient alpha(D, m) and exponent beta = D - 2m of the Green function
/// of the m-fold Laplacian with a unit point source:
///
///   alpha = (-1)^(m+1) Gamma(D/2 - m) / (4^(m-1) pi^(D/2-1) Gamma(m))
///
/// D = 2m is the logarithmic case and comes back classified, with alpha zero.
inline PotentialSpec alpha_coefficient(int D, int m) {
  if (D < 2 || m < 1) throw Error(ErrorCode::InvalidArgument, "alpha(D, m) needs D >= 2 and m >= 1");
  const int beta = D - 2 * m;
  if (beta < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "beta = D - 2m = " + std::to_string(beta) + " < 0: potential is not long-range");
  }
  if (beta == 0) return PotentialSpec{SignedLogReal::zero(), 0, Nature::Logarithmic};

  const double ln_mag = log_gamma_half(HalfInteger(D - 2 * m)) - (m - 1) * 2.0 * kLn2 -
                        0.5 * (D - 2) * kLnPi - log_gamma_half(HalfInteger::from_int(m));
  const int sign = (m % 2 == 1) ? 1 : -1;
  return PotentialSpec{SignedLogReal::from_log(sign, ln_mag), beta,
                       sign > 0 ? Nature::Attractive : Nature::Repulsive};
}

/// The m = 1 closed form 2 Gamma(D/2) / (pi^(D/2-1) (D - 2)), kept as a
/// separate route for cross-checking alpha_coefficient(D, 1).
inline SignedLogReal alpha_m1_closed_form(int D) {
  if (D < 3) throw Error(ErrorCode::InvalidArgument, "m = 1 closed form needs D >= 3");
  const double ln_mag = kLn2 + log_gamma_half(HalfInteger(D)) - 0.5 * (D - 2) * kLnPi - std::log(D - 2.0);
  return SignedLogReal::from_log(1, ln_mag);
}

}  // namespace dimspec

#endif  // DIMSPEC_POTENTIAL_HPP
