#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dimspec/feasibility.hpp"
#include "dimspec/oracle.hpp"

using namespace dimspec;

namespace {

EnergyQuery query_for(const SystemParams& p) { return EnergyQuery{alpha_coefficient(p.D, p.m).alpha, p.beta(), p.n, p.D}; }

std::vector<SystemParams> bound_grid(int max_n, int max_D) {
  std::vector<SystemParams> out;
  for (auto scheme : {CouplingScheme::MEqualsN, CouplingScheme::MEqualsOne}) {
    for (int n = 1; n <= max_n; ++n) {
      for (int D : bound_dims(n, scheme).members) {
        if (D <= max_D) out.push_back(SystemParams::make(D, n, scheme));
      }
    }
  }
  return out;
}

}  // namespace

TEST(MinimizeVeff, DocumentedExamples) {
  const auto h = minimize_v_eff(EnergyQuery{slr(1.0), 1, 1, 3});
  EXPECT_NEAR(h.r_star, 4.5, 4.5e-11);
  EXPECT_NEAR(h.energy.to_double(), -1.0 / 9.0, 1e-15);

  const auto d7 = minimize_v_eff(EnergyQuery{slr(1.0 / (32.0 * std::numbers::pi * std::numbers::pi)), 1, 3, 7});
  EXPECT_NEAR(d7.r_star / 20.3423839941952, 1.0, 1e-10);
  EXPECT_NEAR(d7.energy.to_double() / -1.29708125234427e-4, 1.0, 1e-12);

  try {
    minimize_v_eff(EnergyQuery{slr(1.0), 2, 1, 4});
    FAIL() << "expected NoMinimum";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoMinimum);
  }
}

TEST(MinimizeVeff, RejectsProfilesWithoutInteriorMinimum) {
  EXPECT_THROW(minimize_v_eff(EnergyQuery{slr(1.0), 3, 1, 5}), Error);
  EXPECT_THROW(minimize_v_eff(EnergyQuery{slr(-1.0), 1, 1, 3}), Error);
  EXPECT_THROW(minimize_v_eff(EnergyQuery{slr(1.0), 0, 1, 3}), Error);
  EXPECT_THROW(minimize_v_eff(EnergyQuery{slr(1.0), 1, 0, 3}), Error);
}

TEST(EffectivePotential, CompareAgreesWithDirectEvaluation) {
  const auto v = EffectivePotential::from_query(EnergyQuery{alpha_coefficient(9, 3).alpha, 3, 3, 9});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> x(0.0, 8.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = x(rng);
    const double b = x(rng);
    const auto va = v.at(a);
    const auto vb = v.at(b);
    // skip pairs whose values are too close for the direct route to resolve
    if (lnmag_relative_difference(va, vb) < 1e-10 && va.sign() == vb.sign()) continue;
    const int direct = va < vb ? -1 : (vb < va ? 1 : 0);
    ASSERT_EQ(v.compare(a, b), direct) << a << " " << b;
  }
  EXPECT_EQ(v.compare(1.0, 1.0), 0);
}

TEST(MinimizeVeff, EqualsClosedFormOnBoundGrid) {
  const auto grid = bound_grid(6, 24);
  ASSERT_GE(grid.size(), 40u);
  for (const auto& p : grid) {
    SCOPED_TRACE(testing::Message() << "D=" << p.D << " n=" << p.n << " m=" << p.m);
    const auto q = query_for(p);
    const auto found = minimize_v_eff(q);
    const auto closed = e0_general(q);
    ASSERT_TRUE(closed.is_bound());
    EXPECT_LE(std::abs(found.energy.lnmag() - closed.energy().lnmag()), 1e-8);
    EXPECT_LE(lnmag_relative_difference(found.energy, closed.energy()), 1e-8);
    EXPECT_LE(std::abs(std::expm1(found.ln_r_star - found.stationary_ln_r)), 1e-9);
  }
}

TEST(MinimizeVeff, FirstOrderConditionHoldsAtMinimizer) {
  for (const auto& p : bound_grid(6, 24)) {
    const auto q = query_for(p);
    const auto found = minimize_v_eff(q);
    const auto v = EffectivePotential::from_query(q);
    // 2n A r^-2n = alpha beta r^-beta
    const double lhs = std::log(2.0 * q.n) + v.amplitude.lnmag() - 2.0 * q.n * found.ln_r_star;
    const double rhs = q.alpha.lnmag() + std::log(static_cast<double>(q.beta)) - q.beta * found.ln_r_star;
    EXPECT_LE(std::abs(std::expm1(lhs - rhs)), 1e-9) << p.D << "," << p.n;
  }
}

TEST(RadialGroundState, FullLaplacianHydrogen) {
  const auto s = radial_ground_state(3, 1.0, 1, KineticConvention::FullLaplacian, 0);
  EXPECT_NEAR(s.energy, -0.25, 1e-6);
  EXPECT_EQ(s.nodes, 0);
  EXPECT_EQ(s.convention, KineticConvention::FullLaplacian);
}

TEST(RadialGroundState, HalfLaplacianHydrogenAndFirstExcitation) {
  const auto g = radial_ground_state(3, 1.0, 1, KineticConvention::HalfLaplacian, 0);
  EXPECT_NEAR(g.energy, -0.5, 1e-6);
  const auto e = radial_ground_state(3, 1.0, 1, KineticConvention::HalfLaplacian, 1);
  EXPECT_NEAR(e.energy, -0.125, 1e-6);
  EXPECT_EQ(e.nodes, 1);
}

TEST(RadialGroundState, KineticScaleHalvesTheCoupling) {
  // -k u'' - alpha/r u: E = -alpha^2 / (4k), so halving k doubles E
  const auto full = radial_ground_state(3, 0.5, 1, KineticConvention::FullLaplacian, 0);
  const auto half = radial_ground_state(3, 0.5, 1, KineticConvention::HalfLaplacian, 0);
  EXPECT_NEAR(full.energy, -0.0625, 1e-6);
  EXPECT_NEAR(half.energy, 2.0 * full.energy, 2e-6);
}

TEST(RadialGroundState, WavefunctionIsNormalizedAndVanishesAtEnds) {
  const auto s = radial_ground_state(3, 1.0, 1, KineticConvention::HalfLaplacian, 0);
  ASSERT_EQ(s.grid.size(), s.u.size());
  EXPECT_EQ(s.grid.front(), 0.0);
  EXPECT_EQ(s.u.front(), 0.0);
  double norm = 0.0;
  double peak = 0.0;
  for (std::size_t i = 1; i < s.u.size(); ++i) {
    norm += 0.5 * (s.u[i] * s.u[i] + s.u[i - 1] * s.u[i - 1]) * (s.grid[i] - s.grid[i - 1]);
    peak = std::max(peak, std::abs(s.u[i]));
  }
  EXPECT_NEAR(norm, 1.0, 1e-9);
  EXPECT_LT(std::abs(s.u.back()), 1e-3 * peak);
  // analytic ground state u = 2 r e^-r peaks at r = 1 with u = 2/e
  EXPECT_NEAR(peak, 2.0 / std::numbers::e, 1e-4);
}

TEST(RadialGroundState, TwoDimensionalCoulombLevel) {
  // D = 2 with -u''/2 - u/r - u/(8 r^2): E = -1/(2 (k + 1/2)^2), ground -2
  const auto s = radial_ground_state(2, 1.0, 1, KineticConvention::HalfLaplacian, 0);
  EXPECT_NEAR(s.energy, -2.0, 1e-5);
}

TEST(RadialGroundState, RejectsUnsupportedParameters) {
  try {
    radial_ground_state(5, alpha_coefficient(5, 1).alpha.to_double(), 3, KineticConvention::FullLaplacian);
    FAIL() << "expected Singular";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  EXPECT_THROW(radial_ground_state(3, -1.0, 1, KineticConvention::FullLaplacian), Error);
  EXPECT_THROW(radial_ground_state(3, 1.0, 0, KineticConvention::FullLaplacian), Error);
  EXPECT_THROW(radial_ground_state(1, 1.0, 1, KineticConvention::FullLaplacian), Error);
  EXPECT_THROW(radial_ground_state(3, 1.0, 1, KineticConvention::FullLaplacian, -1), Error);
}

TEST(RadialGroundState, UnreachableLevelReportsNoConvergence) {
  try {
    radial_ground_state(3, 1.0, 1, KineticConvention::HalfLaplacian, 50);
    FAIL() << "expected NoConvergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
  }
}
