#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dimspec/potential.hpp"

using namespace dimspec;

namespace {

// Gamma(k/2) by plain floating-point product, then one log at the end.
double product_log_gamma_half(int twice) {
  double g = (twice % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (int t = (twice % 2 == 0) ? 2 : 1; t < twice; t += 2) g *= 0.5 * t;
  return std::log(g);
}

void expect_close(double got, double want, double tol) {
  if (std::abs(want) < 1e-3) {
    EXPECT_NEAR(got, want, tol);
  } else {
    EXPECT_LE(std::abs(got - want) / std::abs(want), tol) << got << " vs " << want;
  }
}

}  // namespace

TEST(LogGammaHalf, DocumentedExamples) {
  EXPECT_NEAR(log_gamma_half(HalfInteger(1)), 0.5723649429247001, 1e-15);
  EXPECT_NEAR(log_gamma_half(HalfInteger::from_int(3)), std::log(2.0), 1e-15);
  EXPECT_NEAR(log_gamma_half(HalfInteger(7)), std::log(3.3233509704478426), 1e-15);
  EXPECT_EQ(log_gamma_half(HalfInteger::from_int(1)), 0.0);
  EXPECT_EQ(log_gamma_half(HalfInteger::from_int(2)), 0.0);
}

TEST(LogGammaHalf, MatchesProductRecurrenceOnLattice) {
  for (int twice = 1; twice <= 100; ++twice) {
    SCOPED_TRACE(twice);
    expect_close(log_gamma_half(HalfInteger(twice)), product_log_gamma_half(twice), 1e-13);
  }
}

TEST(LogGammaHalf, MatchesLibmUpTo200) {
  for (int twice = 1; twice <= 400; ++twice) {
    SCOPED_TRACE(twice);
    expect_close(log_gamma_half(HalfInteger(twice)), std::lgamma(0.5 * twice), 1e-13);
  }
}

TEST(LogGammaHalf, PolesThrow) {
  EXPECT_THROW(log_gamma_half(HalfInteger(0)), Error);
  EXPECT_THROW(log_gamma_half(HalfInteger(-2)), Error);
  try {
    log_gamma_half(HalfInteger(-4));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Pole);
  }
}

TEST(AlphaCoefficient, DocumentedExamples) {
  const auto a31 = alpha_coefficient(3, 1);
  EXPECT_NEAR(a31.alpha.to_double(), 1.0, 1e-14);
  EXPECT_EQ(a31.beta, 1);
  EXPECT_EQ(a31.nature, Nature::Attractive);

  const auto a51 = alpha_coefficient(5, 1);
  EXPECT_NEAR(a51.alpha.to_double(), 1.0 / (2.0 * std::numbers::pi), 1e-15);
  EXPECT_EQ(a51.beta, 3);

  const auto a73 = alpha_coefficient(7, 3);
  EXPECT_NEAR(a73.alpha.to_double(), 1.0 / (32.0 * std::numbers::pi * std::numbers::pi), 1e-17);
  EXPECT_NEAR(a73.alpha.to_double(), 3.16628698882306e-3, 1e-16);
  EXPECT_EQ(a73.beta, 1);

  const auto a72 = alpha_coefficient(7, 2);
  EXPECT_EQ(a72.alpha.sign(), -1);
  EXPECT_EQ(a72.nature, Nature::Repulsive);
}

TEST(AlphaCoefficient, EqualPowersBoundaryIsLogarithmic) {
  const auto p = alpha_coefficient(6, 3);
  EXPECT_EQ(p.nature, Nature::Logarithmic);
  EXPECT_EQ(p.beta, 0);
  EXPECT_TRUE(p.alpha.is_zero());
}

TEST(AlphaCoefficient, ShortRangeIsRejected) {
  EXPECT_THROW(alpha_coefficient(5, 3), Error);
  EXPECT_THROW(alpha_coefficient(1, 1), Error);
  EXPECT_THROW(alpha_coefficient(4, 0), Error);
}

TEST(AlphaCoefficient, UnitPoissonPowerMatchesClosedForm) {
  for (int D = 3; D <= 40; ++D) {
    const auto general = alpha_coefficient(D, 1).alpha;
    const auto closed = alpha_m1_closed_form(D);
    EXPECT_LE(std::abs(general.lnmag() - closed.lnmag()), 1e-12 * std::max(1.0, std::abs(closed.lnmag()))) << D;
    EXPECT_LE(std::abs(std::expm1(general.lnmag() - closed.lnmag())), 1e-12) << D;
  }
  EXPECT_THROW(alpha_m1_closed_form(2), Error);
}

TEST(AlphaCoefficient, SignAlternatesWithPoissonPower) {
  for (int m = 1; m <= 20; ++m) {
    for (int D = 2 * m + 1; D <= 2 * m + 40; ++D) {
      EXPECT_EQ(alpha_coefficient(D, m).alpha.sign(), m % 2 == 1 ? 1 : -1) << D << "," << m;
    }
  }
}
