#ifndef DIMSPEC_SIGNED_LOG_HPP
#define DIMSPEC_SIGNED_LOG_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>

#include "dimspec/error.hpp"

namespace dimspec {

inline constexpr double kLn10 = 2.302585092994045684017991454684364208;
inline constexpr double kLnPi = 1.144729885849400174143427351353058712;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

/// Exact ratio of two integers, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  constexpr Rational operator-() const { return Rational(-num_, den_); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// A real number held as sign and natural log of its magnitude.
///
/// Covers magnitudes far outside the double range (energies down to 1e-160
/// and intermediates above 1e100 both occur). Zero is sign 0; lnmag is then 0
/// and carries no meaning.
class SignedLogReal {
 public:
  constexpr SignedLogReal() = default;

  static SignedLogReal zero() { return {}; }

  static SignedLogReal from_log(int sign, double lnmag) {
    if (sign == 0) return {};
    if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be -1, 0 or +1");
    if (!std::isfinite(lnmag)) throw Error(ErrorCode::InvalidArgument, "log-magnitude must be finite");
    SignedLogReal out;
    out.sign_ = sign;
    out.lnmag_ = lnmag;
    return out;
  }

  static SignedLogReal from_double(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot represent non-finite value");
    if (x == 0.0) return {};
    return from_log(x > 0 ? 1 : -1, std::log(std::abs(x)));
  }

  int sign() const { return sign_; }
  double lnmag() const { return lnmag_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_positive() const { return sign_ > 0; }
  bool is_negative() const { return sign_ < 0; }

  /// Saturates to +-inf or underflows to +-0 outside the double range.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(lnmag_);
  }

  double log10_abs() const {
    if (sign_ == 0) throw Error(ErrorCode::Pole, "log10 of zero");
    return lnmag_ / kLn10;
  }

  SignedLogReal abs() const { return sign_ == 0 ? SignedLogReal{} : from_log(1, lnmag_); }
  SignedLogReal operator-() const { return sign_ == 0 ? SignedLogReal{} : from_log(-sign_, lnmag_); }

  friend SignedLogReal operator*(const SignedLogReal& a, const SignedLogReal& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return {};
    return from_log(a.sign_ * b.sign_, a.lnmag_ + b.lnmag_);
  }

  friend SignedLogReal operator/(const SignedLogReal& a, const SignedLogReal& b) {
    if (b.sign_ == 0) throw Error(ErrorCode::Pole, "division by zero");
    if (a.sign_ == 0) return {};
    return from_log(a.sign_ * b.sign_, a.lnmag_ - b.lnmag_);
  }

  friend SignedLogReal operator+(const SignedLogReal& a, const SignedLogReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const bool a_larger = a.lnmag_ >= b.lnmag_;
    const SignedLogReal& big = a_larger ? a : b;
    const SignedLogReal& small = a_larger ? b : a;
    const double d = small.lnmag_ - big.lnmag_;  // <= 0
    if (a.sign_ == b.sign_) return from_log(big.sign_, big.lnmag_ + std::log1p(std::exp(d)));
    if (d == 0.0) return {};
    // log(1 - e^d), accurate for d near zero and for d very negative
    const double tail = d > -kLn2 ? std::log(-std::expm1(d)) : std::log1p(-std::exp(d));
    return from_log(big.sign_, big.lnmag_ + tail);
  }

  friend SignedLogReal operator-(const SignedLogReal& a, const SignedLogReal& b) { return a + (-b); }

  /// Raises to an exact rational power. Negative bases need an integer exponent.
  SignedLogReal pow(const Rational& p) const {
    if (sign_ == 0) {
      if (p.num() > 0) return {};
      throw Error(ErrorCode::Pole, "zero raised to a non-positive power");
    }
    int sign = 1;
    if (sign_ < 0) {
      if (!p.is_integer()) throw Error(ErrorCode::InvalidArgument, "negative base with fractional exponent");
      sign = (p.num() % 2 == 0) ? 1 : -1;
    }
    return from_log(sign, lnmag_ * static_cast<double>(p.num()) / static_cast<double>(p.den()));
  }

  SignedLogReal pow(double p) const {
    if (sign_ < 0) throw Error(ErrorCode::InvalidArgument, "negative base with real exponent");
    if (sign_ == 0) {
      if (p > 0) return {};
      throw Error(ErrorCode::Pole, "zero raised to a non-positive power");
    }
    return from_log(1, lnmag_ * p);
  }

  friend bool operator==(const SignedLogReal& a, const SignedLogReal& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.lnmag_ == b.lnmag_);
  }

  friend std::strong_ordering operator<=>(const SignedLogReal& a, const SignedLogReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ == 0 || a.lnmag_ == b.lnmag_) return std::strong_ordering::equal;
    const bool mag_less = a.lnmag_ < b.lnmag_;
    if (a.sign_ > 0) return mag_less ? std::strong_ordering::less : std::strong_ordering::greater;
    return mag_less ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  int sign_ = 0;
  double lnmag_ = 0.0;
};

inline SignedLogReal slr(double x) { return SignedLogReal::from_double(x); }

/// Relative difference of two nonzero values measured on their log-magnitudes.
inline double lnmag_relative_difference(const SignedLogReal& a, const SignedLogReal& b) {
  const double scale = std::max({std::abs(a.lnmag()), std::abs(b.lnmag()), 1.0});
  return std::abs(a.lnmag() - b.lnmag()) / scale;
}

/// Scientific notation with `significant` digits, e.g. "-4.41e-97".
///
/// Ties round half to even. Inside the double range this is the C library's
/// correctly rounded conversion; outside it the mantissa comes from lnmag.
inline std::string to_decimal_string(const SignedLogReal& x, int significant = 3) {
  if (x.is_zero()) return "0";
  const int decimals = std::max(significant - 1, 0);
  char buf[64];
  const double l10 = x.log10_abs();
  if (l10 > -300.0 && l10 < 300.0) {
    std::snprintf(buf, sizeof buf, "%.*e", decimals, x.to_double());
    return buf;
  }
  int exponent = static_cast<int>(std::floor(l10));
  const double unit = std::pow(10.0, decimals);
  double digits = std::nearbyint(std::pow(10.0, l10 - exponent) * unit);
  if (digits >= 10.0 * unit) {
    digits /= 10.0;
    ++exponent;
  }
  std::snprintf(buf, sizeof buf, "%s%.*fe%c%02d", x.is_negative() ? "-" : "", decimals, digits / unit,
                exponent < 0 ? '-' : '+', std::abs(exponent));
  return buf;
}

}  // namespace dimspec

#endif  // DIMSPEC_SIGNED_LOG_HPP
