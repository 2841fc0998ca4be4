#ifndef DIMSPEC_ORACLE_HPP
#define DIMSPEC_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dimspec/error.hpp"
#include "dimspec/signed_log.hpp"
#include "dimspec/spectrum.hpp"

namespace dimspec {

/// Leading-order large-D effective potential
///
///   V_eff(r) = A r^(-2n) - alpha r^(-beta),   A = (D/2)^(2n)
///
/// Positions are handled as x = ln r.
struct EffectivePotential {
  SignedLogReal amplitude;
  SignedLogReal alpha;
  int beta = 1;
  int n = 1;

  static EffectivePotential from_query(const EnergyQuery& q) {
    return EffectivePotential{slr(0.5 * q.D).pow(Rational(2 * q.n)), q.alpha, q.beta, q.n};
  }

  SignedLogReal at(double ln_r) const {
    const auto centrifugal = SignedLogReal::from_log(1, amplitude.lnmag() - 2.0 * n * ln_r);
    const auto attraction = SignedLogReal::from_log(alpha.sign(), alpha.lnmag() - beta * ln_r);
    return centrifugal - attraction;
  }

  /// Sign of V(x1) - V(x2).
  ///
  /// Uses V(x1) - V(x2) = A e^(-2n x2) expm1(-2n h) - alpha e^(-beta x2) expm1(-beta h)
  /// with h = x1 - x2. Both expm1 factors share the sign of -h, so only the
  /// log-magnitudes of the two terms need comparing; the result stays exact
  /// for points far closer together than sqrt(machine epsilon).
  int compare(double x1, double x2) const {
    const double h = x1 - x2;
    if (h == 0.0) return 0;
    const double p = amplitude.lnmag() - 2.0 * n * x2 + std::log(std::abs(std::expm1(-2.0 * n * h)));
    const double q = alpha.lnmag() - beta * x2 + std::log(std::abs(std::expm1(-beta * h)));
    const int factor_sign = h > 0 ? -1 : 1;
    if (p == q) return 0;
    return factor_sign * (p > q ? 1 : -1);
  }
};

struct VeffMinimum {
  double ln_r_star = 0.0;
  double r_star = 0.0;
  SignedLogReal energy;
  /// r* from the first-order condition r^(2n - beta) = 2n A / (alpha beta).
  double stationary_ln_r = 0.0;
  double stationary_r = 0.0;
  int iterations = 0;
};

struct MinimizeOptions {
  double ln_r_tolerance = 1e-12;  // relative, on the bracket width in ln r
  double stationarity_tolerance = 1e-10;
  int max_bracket_steps = 200;
  int max_iterations = 500;
};

/// Minimizes V_eff by downhill bracketing and golden-section search in ln r.
/// Throws NoMinimum unless alpha > 0 and 0 < beta < 2n, and NoConvergence if
/// the search and the first-order condition disagree on r*.
inline VeffMinimum minimize_v_eff(const EnergyQuery& q, MinimizeOptions opts = {}) {
  if (q.D < 2 || q.n < 1) throw Error(ErrorCode::InvalidArgument, "effective potential needs D >= 2 and n >= 1");
  if (!q.alpha.is_positive() || q.beta <= 0 || q.beta >= 2 * q.n) {
    throw Error(ErrorCode::NoMinimum, "V_eff has no interior minimum unless alpha > 0 and 0 < beta < 2n");
  }
  const auto v = EffectivePotential::from_query(q);
  const double gap = 2.0 * q.n - q.beta;

  // Seed at the zero crossing A r^-2n = alpha r^-beta; V_eff < 0 just outside it.
  const double crossing = (v.amplitude.lnmag() - v.alpha.lnmag()) / gap;
  double step = 1.0 / gap;
  double a = crossing - step;
  double b = crossing + step;
  int steps = 0;
  while (v.compare(a, b) <= 0) {  // walk left until a is uphill of b
    if (++steps > opts.max_bracket_steps) throw Error(ErrorCode::NoMinimum, "left bracket expansion failed");
    step *= 1.618;
    a = b - step;
  }
  step = 1.0 / gap;
  double c = b + step;
  while (v.compare(c, b) <= 0) {  // walk right, keeping the lowest point in the middle
    if (++steps > opts.max_bracket_steps) throw Error(ErrorCode::NoMinimum, "right bracket expansion failed");
    a = b;
    b = c;
    step *= 1.618;
    c = b + step;
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a;
  double hi = c;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  int iterations = 0;
  while (hi - lo > opts.ln_r_tolerance * std::max(1.0, std::abs(0.5 * (lo + hi)))) {
    if (++iterations > opts.max_iterations) throw Error(ErrorCode::NoConvergence, "golden-section search stalled");
    if (v.compare(x1, x2) < 0) {
      hi = x2;
      x2 = x1;
      x1 = hi - inv_phi * (hi - lo);
    } else {
      lo = x1;
      x1 = x2;
      x2 = lo + inv_phi * (hi - lo);
    }
  }

  VeffMinimum out;
  out.ln_r_star = 0.5 * (lo + hi);
  out.r_star = std::exp(out.ln_r_star);
  out.energy = v.at(out.ln_r_star);
  out.iterations = iterations;
  out.stationary_ln_r =
      (std::log(2.0 * q.n) + v.amplitude.lnmag() - v.alpha.lnmag() - std::log(static_cast<double>(q.beta))) / gap;
  out.stationary_r = std::exp(out.stationary_ln_r);
  if (std::abs(std::expm1(out.ln_r_star - out.stationary_ln_r)) > opts.stationarity_tolerance) {
    throw Error(ErrorCode::NoConvergence, "search minimizer disagrees with the stationarity condition");
  }
  return out;
}

enum class KineticConvention { FullLaplacian, HalfLaplacian };

constexpr std::string_view to_string(KineticConvention k) {
  return k == KineticConvention::FullLaplacian ? "full" : "half";
}

/// s-wave reduced radial function u(r) = r^((D-1)/2) R(r) on a uniform mesh
/// starting at r = 0, normalized to unit integral of u^2.
struct RadialSolution {
  std::vector<double> grid;
  std::vector<double> u;
  double energy = 0.0;
  int nodes = 0;
  KineticConvention convention = KineticConvention::FullLaplacian;
  double r_max = 0.0;
};

struct RadialOptions {
  double step = 1e-3;
  double r_max_initial = 20.0;
  double r_max_limit = 1280.0;
  double r_max_shift_tolerance = 1e-8;
  double energy_tolerance = 1e-11;
  int max_bisections = 200;
};

namespace detail {

// Outward Numerov integration of u'' = g(r) u with
// g = c / r^2 + kappa (-alpha r^-beta - E), c = (D-1)(D-3)/4.
class RadialShooter {
 public:
  RadialShooter(int D, double alpha, int beta, KineticConvention conv, double step)
      : alpha_(alpha), beta_(beta), kappa_(conv == KineticConvention::HalfLaplacian ? 2.0 : 1.0), h_(step) {
    s_ = 0.5 * (D - 1);
    c_ = s_ * (s_ - 1.0);
  }

  /// Sign changes of u on (0, r_max]; the diverging tail counts.
  int count_nodes(double energy, double r_max, std::vector<double>* store = nullptr) const {
    const auto steps = static_cast<std::size_t>(std::llround(r_max / h_));
    const double h2 = h_ * h_ / 12.0;
    const auto seed = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(kSeriesRadius / h_)), 2, steps);
    if (store) {
      store->assign(1, 0.0);
      store->reserve(steps + 1);
    }
    int nodes = 0;
    double u_prev = 0.0;
    double u_cur = 0.0;
    for (std::size_t i = 1; i <= seed; ++i) {
      const double u = regular(static_cast<double>(i) * h_, energy);
      if (i > 1 && (u < 0.0) != (u_cur < 0.0) && u != 0.0) ++nodes;
      u_prev = u_cur;
      u_cur = u;
      if (store) store->push_back(u);
    }
    double g_prev = g(static_cast<double>(seed - 1) * h_, energy);
    double g_cur = g(static_cast<double>(seed) * h_, energy);
    for (std::size_t i = seed + 1; i <= steps; ++i) {
      const double r_next = static_cast<double>(i) * h_;
      const double g_next = g(r_next, energy);
      const double u_next =
          (2.0 * (1.0 + 5.0 * h2 * g_cur) * u_cur - (1.0 - h2 * g_prev) * u_prev) / (1.0 - h2 * g_next);
      if ((u_next < 0.0) != (u_cur < 0.0) && u_next != 0.0) ++nodes;
      u_prev = u_cur;
      u_cur = u_next;
      g_prev = g_cur;
      g_cur = g_next;
      if (store) store->push_back(u_next);
      if (std::abs(u_cur) > 1e150) {
        u_prev *= 1e-150;
        u_cur *= 1e-150;
        if (store) {
          for (double& x : *store) x *= 1e-150;
        }
      }
    }
    return nodes;
  }

  double step() const { return h_; }

 private:
  double g(double r, double energy) const {
    return c_ / (r * r) + kappa_ * (-alpha_ * std::pow(r, -beta_) - energy);
  }
  // Frobenius series r^s sum a_k r^k of the Coulomb problem, a_k k (2s + k - 1) = -kappa (alpha a_(k-1) + E a_(k-2))
  double regular(double r, double energy) const {
    double a_km2 = 0.0;
    double a_km1 = 1.0;
    double sum = 1.0;
    double power = 1.0;
    for (int k = 1; k <= kSeriesTerms; ++k) {
      const double a_k = -kappa_ * (alpha_ * a_km1 + energy * a_km2) / (k * (2.0 * s_ + k - 1.0));
      power *= r;
      const double term = a_k * power;
      sum += term;
      if (k > 2 && std::abs(term) <= 1e-17 * std::abs(sum) && std::abs(a_km1 * power / r) <= 1e-17 * std::abs(sum)) break;
      a_km2 = a_km1;
      a_km1 = a_k;
    }
    return std::pow(r, s_) * sum;
  }

  static constexpr double kSeriesRadius = 0.1;
  static constexpr int kSeriesTerms = 400;

  double alpha_;
  int beta_;
  double kappa_;
  double h_;
  double s_ = 1.0;
  double c_ = 0.0;
};

inline double bisect_level(const RadialShooter& shooter, int excitation, double lo, double hi, double r_max,
                           const RadialOptions& opts) {
  if (shooter.count_nodes(lo, r_max) > excitation || shooter.count_nodes(hi, r_max) <= excitation) {
    throw Error(ErrorCode::NoConvergence, "energy bracket does not straddle the requested level");
  }
  for (int i = 0; i < opts.max_bisections && hi - lo > opts.energy_tolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    (shooter.count_nodes(mid, r_max) > excitation ? hi : lo) = mid;
  }
  if (hi - lo > opts.energy_tolerance) throw Error(ErrorCode::NoConvergence, "bisection did not converge");
  return lo;
}

}  // namespace detail

/// Eigenvalue and eigenfunction of the n = 1 radial problem
///
///   -k u'' + k (D-1)(D-3)/(4 r^2) u - alpha r^-beta u = E u,   k = 1 (full) or 1/2 (half)
///
/// by Numerov shooting and bisection on E over the node count. r_max doubles
/// until the level moves by less than r_max_shift_tolerance.
inline RadialSolution radial_ground_state(int D, double alpha, int beta, KineticConvention convention,
                                          int excitation = 0, RadialOptions opts = {}) {
  if (D < 2) throw Error(ErrorCode::InvalidArgument, "dimension D must be >= 2");
  if (excitation < 0) throw Error(ErrorCode::InvalidArgument, "excitation index must be >= 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  if (beta <= 0) throw Error(ErrorCode::InvalidArgument, "beta must be positive");
  if (beta >= 2) {
    throw Error(ErrorCode::Singular, "beta = " + std::to_string(beta) + " >= 2: fall to the centre");
  }

  const auto guess = e0_general(EnergyQuery{slr(alpha), beta, 1, D});
  const double scale = guess.is_bound() ? std::abs(guess.energy().to_double()) : 1.0;
  const double lo = -2.0 * scale * 1e3;
  const double hi = -1e-8;

  const detail::RadialShooter shooter(D, alpha, beta, convention, opts.step);
  double r_max = opts.r_max_initial;
  double level = detail::bisect_level(shooter, excitation, lo, hi, r_max, opts);
  for (;;) {
    const double wider = 2.0 * r_max;
    if (wider > opts.r_max_limit) throw Error(ErrorCode::NoConvergence, "r_max limit reached before convergence");
    const double next = detail::bisect_level(shooter, excitation, lo, hi, wider, opts);
    r_max = wider;
    const bool settled = std::abs(next - level) < opts.r_max_shift_tolerance;
    level = next;
    if (settled) break;
  }

  std::vector<double> u;
  shooter.count_nodes(level, r_max, &u);

  // Cut the diverging tail at the smallest |u| past the outermost lobe.
  std::size_t last_node = 0;
  for (std::size_t i = 2; i < u.size(); ++i) {
    if ((u[i] < 0.0) != (u[i - 1] < 0.0) && u[i] != 0.0) last_node = i;
  }
  std::size_t peak = last_node;
  while (peak + 1 < u.size() && std::abs(u[peak + 1]) >= std::abs(u[peak])) ++peak;
  std::size_t cut = peak;
  for (std::size_t i = peak; i < u.size(); ++i) {
    if (std::abs(u[i]) < std::abs(u[cut])) cut = i;
  }
  u.resize(cut + 1);

  RadialSolution sol;
  sol.energy = level;
  sol.convention = convention;
  sol.r_max = r_max;
  sol.grid.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) sol.grid[i] = static_cast<double>(i) * opts.step;

  double norm = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) norm += 0.5 * (u[i] * u[i] + u[i - 1] * u[i - 1]) * opts.step;
  const double inv = 1.0 / std::sqrt(norm);
  for (double& x : u) x *= inv;
  for (std::size_t i = 2; i < u.size(); ++i) {
    if ((u[i] < 0.0) != (u[i - 1] < 0.0) && u[i] != 0.0) ++sol.nodes;
  }
  sol.u = std::move(u);
  if (sol.nodes != excitation) {
    throw Error(ErrorCode::NoConvergence, "eigenfunction has " + std::to_string(sol.nodes) + " nodes, expected " +
                                              std::to_string(excitation));
  }
  return sol;
}

}  // namespace dimspec

#endif  // DIMSPEC_ORACLE_HPP
