#pragma once

// High-temperature sudden-switch engine: coth(x) ~ 1/x and the squeezing
// factor ~ cosh(2r). Everything is expressed through
//
//   z   = omega1 / omega2          (compression ratio, 0 < z < 1)
//   tau = beta2 / beta1 = 1 - eta_C
//   r   = hot-bath squeezing
//
// The closed forms are templates over the real type so the numerical
// oracles can evaluate them in extended precision. They are written in
// terms of u = sech(2r), which underflows gracefully where cosh(2r) would
// overflow; tau * u = 1 - eta_C^gen is the only combination of tau and r
// that the efficiency bounds depend on.

#include <cmath>
#include <optional>
#include <string>

#include "otto/errors.hpp"
#include "otto/numerics.hpp"

namespace otto::engine {

// Above this beta*omega the high-temperature forms are flagged as advisory.
inline constexpr double kHighTemperatureThreshold = 0.3;

namespace detail {

template <typename Real>
void require_carnot(Real eta_c) {
  if (!(eta_c > Real(0) && eta_c < Real(1))) {
    throw DomainError("Carnot efficiency must lie in (0, 1)");
  }
}

template <typename Real>
void require_squeezing(Real r) {
  if (!(r >= Real(0))) throw DomainError("squeezing parameter must be >= 0");
}

}  // namespace detail

class EngineParams {
 public:
  // Throws DomainError unless 0 < z < 1, 0 < tau < 1, r >= 0, beta2 > 0.
  EngineParams(double z, double tau, double r, double beta2 = 1.0);

  double z() const noexcept { return z_; }
  double tau() const noexcept { return tau_; }
  double r() const noexcept { return r_; }
  double beta2() const noexcept { return beta2_; }

 private:
  double z_;
  double tau_;
  double r_;
  double beta2_;
};

struct EngineBoundsReport {
  double eta_c = 0.0;
  double eta_c_gen = 0.0;
  double eta_up = 0.0;
  double eta_mw = 0.0;
  double z_star = 0.0;
  bool pwc_satisfied = false;
};

// tau * sech(2r): the temperature ratio seen against the effective hot
// temperature T2 cosh(2r).
template <typename Real>
Real reduced_tau(Real tau, Real r) {
  return tau * sech(Real(2) * r);
}

// Extracted work per cycle, (1 - z^2)(z^2 cosh2r - tau) / (2 z^2 beta2).
template <typename Real>
Real work_ht(Real z, Real tau, Real r, Real beta2) {
  const Real u = sech(Real(2) * r);
  const Real x = z * z;
  return (Real(1) - x) * (x - tau * u) / (Real(2) * x * beta2 * u);
}

// (z^2 - 1)(z^2 cosh2r - tau) / (tau - z^2 (2 cosh2r - tau)).
template <typename Real>
Real efficiency_ht(Real z, Real tau, Real r) {
  const Real t = reduced_tau(tau, r);
  const Real x = z * z;
  const Real denominator = t - x * (Real(2) - t);
  if (denominator == Real(0)) {
    throw SingularityError("efficiency denominator vanishes at 2 z^2 cosh2r = tau (1 + z^2)");
  }
  return (x - Real(1)) * (x - t) / denominator;
}

// Positive-work condition z^2 cosh(2r) > tau (strict).
template <typename Real>
bool pwc_ht(Real z, Real tau, Real r) {
  return z * z > reduced_tau(tau, r);
}

template <typename Real>
struct RatioRoots {
  Real lower;
  Real upper;
};

// Both values of z^2 at which efficiency_ht equals eta. Efficiency is
// unimodal in z^2 on the working interval (tau sech2r, 1), so the roots sit
// on either side of the maximum and merge at eta = eta_up.
// Throws NoSolutionError when eta exceeds eta_up.
template <typename Real>
RatioRoots<Real> efficiency_ratio_roots(Real eta, Real eta_c, Real r) {
  using std::sqrt;
  detail::require_carnot(eta_c);
  detail::require_squeezing(r);
  if (!(eta >= Real(0) && eta < Real(0.5))) {
    throw DomainError("efficiency must lie in [0, 1/2)");
  }
  const Real t = reduced_tau(Real(1) - eta_c, r);
  // x^2 - b x + c = 0
  const Real b = t * (Real(1) + eta) + Real(1) - Real(2) * eta;
  const Real c = t * (Real(1) - eta);
  const Real discriminant = b * b - Real(4) * c;
  if (discriminant < Real(0)) {
    throw NoSolutionError("requested efficiency lies above the upper bound");
  }
  const Real root = sqrt(discriminant);
  const Real upper = (b + root) / Real(2);
  return {c / upper, upper};
}

// Compression ratio squared that yields efficiency eta: the root nearer
// the positive-work boundary.
template <typename Real>
Real z2_of_eta(Real eta, Real eta_c, Real r) {
  return efficiency_ratio_roots(eta, eta_c, r).lower;
}

// Upper bound on the efficiency over all compression ratios.
template <typename Real>
Real eta_up(Real eta_c, Real r) {
  using std::sqrt;
  detail::require_carnot(eta_c);
  detail::require_squeezing(r);
  // [tau - C][-tau - 2C + 2 sqrt(2 tau C)] / [tau - 2C]^2 with both
  // numerator and denominator divided by C^2.
  const Real t = reduced_tau(Real(1) - eta_c, r);
  const Real two_minus = t - Real(2);
  return (t - Real(1)) * (-t - Real(2) + Real(2) * sqrt(Real(2) * t)) / (two_minus * two_minus);
}

// Efficiency at the compression ratio that maximises work.
template <typename Real>
Real eta_mw(Real eta_c, Real r) {
  using std::sqrt;
  detail::require_carnot(eta_c);
  detail::require_squeezing(r);
  const Real s = sqrt(reduced_tau(Real(1) - eta_c, r));
  return (Real(1) - s) / (Real(2) + s);
}

// 1 - (1 - eta_c) / cosh(2r). Accepts eta_c = 0.
template <typename Real>
Real generalized_carnot(Real eta_c, Real r) {
  if (!(eta_c >= Real(0) && eta_c < Real(1))) {
    throw DomainError("Carnot efficiency must lie in [0, 1)");
  }
  detail::require_squeezing(r);
  return Real(1) - reduced_tau(Real(1) - eta_c, r);
}

// Unsqueezed bound, [3 - 2 sqrt(2(1 - eta_c)) - eta_c] eta_c / (1 + eta_c)^2.
template <typename Real>
Real eta_up_thermal(Real eta_c) {
  using std::sqrt;
  detail::require_carnot(eta_c);
  const Real one_plus = Real(1) + eta_c;
  return (Real(3) - Real(2) * sqrt(Real(2) * (Real(1) - eta_c)) - eta_c) * eta_c /
         (one_plus * one_plus);
}

// Unsqueezed efficiency at maximum work (Rezek-Kosloff).
template <typename Real>
Real eta_rk(Real eta_c) {
  using std::sqrt;
  detail::require_carnot(eta_c);
  const Real s = sqrt(Real(1) - eta_c);
  return (Real(1) - s) / (Real(2) + s);
}

// Argmax of work_ht over z: (tau sech2r)^{1/4}.
template <typename Real>
Real optimal_ratio(Real tau, Real r) {
  using std::sqrt;
  return sqrt(sqrt(reduced_tau(tau, r)));
}

double work_ht(const EngineParams& p);
double efficiency_ht(const EngineParams& p);
bool pwc_ht(const EngineParams& p);

// Bounds for a (eta_c, r) pair. The positive-work flag is evaluated at z
// when given, otherwise at the work-optimal ratio.
EngineBoundsReport engine_bounds(double eta_c, double r, std::optional<double> z = std::nullopt);

// True when beta*omega is small enough for the high-temperature forms.
bool high_temperature_regime(double beta_omega) noexcept;

}  // namespace otto::engine
