#pragma once

// Sudden-switch Otto refrigerator in the high-temperature regime with a
// squeezed cold bath. Variables: z = omega1/omega2, tau = beta2/beta1 =
// T1/T2, r = cold-bath squeezing. The squeezed cold bath behaves like a
// thermal bath at T1 cosh(2r), so most results depend on
// tau_c = tau cosh(2r) alone. Cooling is possible only for tau_c in (1/2, 1).

#include <cmath>
#include <optional>
#include <string>

#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "otto/numerics.hpp"

namespace otto::fridge {

class FridgeParams {
 public:
  // Throws DomainError unless 0 < z < 1, 0 < tau < 1 and r >= 0.
  FridgeParams(double z, double tau, double r);

  double z() const noexcept { return z_; }
  double tau() const noexcept { return tau_; }
  double r() const noexcept { return r_; }

 private:
  double z_;
  double tau_;
  double r_;
};

// Heats in units of the hot temperature T2 (i.e. beta2 * Q). Signed as
// absorbed by the working medium; w_in = -(q2 + q4).
template <typename Real>
struct FridgeHeats {
  Real q2;
  Real q4;
  Real w_in;
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_closed = false;

  bool contains(double x) const noexcept {
    return (lower_closed ? x >= lower : x > lower) && x < upper;
  }
};

struct FridgeBoundsReport {
  double zeta_c = 0.0;
  std::optional<double> zeta_up;
  std::string reason;  // why cooling is infeasible; empty when feasible
  Interval tau_window;
  Interval r_window;
  bool cooling_feasible = false;
};

// High-temperature heats from the corner energies
//   A = T1 cosh2r, B = lambda cosh2r T1 / z, C = T2, D = lambda z T2,
// with lambda z = (1 + z^2)/2. Q4 is written as
// (tau - 1/2) + 2 tau sinh^2 r - z^2/2 so that its zero is resolved near
// tau = 1/2, r -> 0.
template <typename Real>
FridgeHeats<Real> heats_ht(Real z, Real tau, Real r) {
  using std::sinh;
  const Real x = z * z;
  const Real s = sinh(r);
  const Real cosh2r = Real(1) + Real(2) * s * s;
  FridgeHeats<Real> h;
  h.q4 = (tau - Real(0.5)) + Real(2) * tau * s * s - x / Real(2);
  h.q2 = Real(1) - (Real(1) + x) * tau * cosh2r / (Real(2) * x);
  h.w_in = -(h.q2 + h.q4);
  return h;
}

// Coefficient of performance Q4 / W_in of the sudden-switch cycle.
// Throws ModeError when the cycle does not extract heat from the cold bath.
template <typename Real>
Real cop_ht(Real z, Real tau, Real r) {
  const FridgeHeats<Real> h = heats_ht(z, tau, r);
  if (!(h.q4 > Real(0))) {
    const auto mode = classify(static_cast<double>(h.q2), static_cast<double>(h.q4),
                               static_cast<double>(-h.w_in));
    throw ModeError("cycle is not cooling (Q4 <= 0); it runs as " + std::string(to_string(mode)),
                    std::string(to_string(mode)));
  }
  return h.q4 / h.w_in;
}

// Upper end of the cooling interval in z: sqrt(2 tau cosh2r - 1), capped at 1.
template <typename Real>
Real cooling_ratio_limit(Real tau, Real r) {
  using std::sqrt;
  const Real u = sech(Real(2) * r);
  const Real excess = (Real(2) * tau - u) / u;  // 2 tau_c - 1
  if (!(excess > Real(0))) return Real(0);
  if (excess >= Real(1)) return Real(1);
  return sqrt(excess);
}

// omega1 / (omega2 - omega1): the quasi-static COP of the same compression
// ratio. Not the quantity the sudden-switch bounds constrain.
double frequency_ratio_cop(double z);

// tau / (1 - tau); +inf at tau = 1.
double zeta_carnot(double tau);

// Unsqueezed bound 1 + 3 zeta_c - 2 sqrt(2 zeta_c (1 + zeta_c)), evaluated
// as (zeta_c - 1)^2 / (sqrt(2 zeta_c) + sqrt(1 + zeta_c))^2.
// Throws InfeasibleError for zeta_c <= 1.
template <typename Real>
Real zeta_up_thermal(Real zeta_c) {
  using std::sqrt;
  if (!(zeta_c > Real(1))) {
    throw InfeasibleError("Carnot COP must exceed 1: the cold bath cannot be cooled below T2/2");
  }
  const Real gap = zeta_c - Real(1);
  const Real denom = sqrt(Real(2) * zeta_c) + sqrt(Real(1) + zeta_c);
  return gap * gap / (denom * denom);
}

// Squeezed-cold-bath bound 3/(1 - tau_c) - 2 - 2 sqrt(2) sqrt(tau_c/(tau_c - 1)^2),
// evaluated as (2 tau_c - 1)^2 / ((1 + sqrt(2 tau_c))^2 (1 - tau_c)).
// Throws InfeasibleError naming the violated side of the window.
template <typename Real>
Real zeta_up(Real tau, Real r) {
  using std::sqrt;
  if (!(tau > Real(0) && tau < Real(1))) throw DomainError("tau must lie in (0, 1)");
  if (!(r >= Real(0))) throw DomainError("squeezing parameter must be >= 0");
  const Real u = sech(Real(2) * r);
  if (!(Real(2) * tau > u)) throw InfeasibleError("tau*cosh(2r) <= 1/2");
  if (!(tau < u)) throw InfeasibleError("tau*cosh(2r) >= 1");
  const Real tau_c = tau / u;
  const Real excess = (Real(2) * tau - u) / u;  // 2 tau_c - 1
  const Real deficit = (u - tau) / u;           // 1 - tau_c
  const Real root = Real(1) + sqrt(Real(2) * tau_c);
  return excess * excess / (root * root * deficit);
}

// Admissible tau at fixed r: (sech(2r)/2, sech(2r)).
Interval tau_window(double r);

// Admissible r at fixed tau. For tau < 1/2 the window is
// (acosh(1/(2 tau))/2, acosh(1/tau)/2); for tau >= 1/2 it starts at 0,
// closed when tau > 1/2 since r = 0 already cools there.
Interval r_window(double tau);

FridgeBoundsReport fridge_bounds(double tau, double r);

}  // namespace otto::fridge
