#include "otto/fridge.hpp"

#include <limits>

namespace otto::fridge {

FridgeParams::FridgeParams(double z, double tau, double r) : z_(z), tau_(tau), r_(r) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("compression ratio z must lie in (0, 1)");
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("temperature ratio tau must lie in (0, 1)");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeezing parameter must be finite and >= 0");
}

double frequency_ratio_cop(double z) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("compression ratio z must lie in (0, 1)");
  return z / (1.0 - z);
}

double zeta_carnot(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw DomainError("tau must lie in (0, 1]");
  if (tau == 1.0) return std::numeric_limits<double>::infinity();
  return tau / (1.0 - tau);
}

Interval tau_window(double r) {
  if (!(r >= 0.0)) throw DomainError("squeezing parameter must be >= 0");
  const double u = sech(2.0 * r);
  return {u / 2.0, u, false};
}

Interval r_window(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("tau must lie in (0, 1)");
  const double upper = std::acosh(1.0 / tau) / 2.0;
  if (tau < 0.5) return {std::acosh(1.0 / (2.0 * tau)) / 2.0, upper, false};
  return {0.0, upper, tau > 0.5};
}

FridgeBoundsReport fridge_bounds(double tau, double r) {
  FridgeBoundsReport report;
  report.zeta_c = zeta_carnot(tau);
  report.tau_window = tau_window(r);
  report.r_window = r_window(tau);
  try {
    report.zeta_up = zeta_up(tau, r);
    report.cooling_feasible = true;
  } catch (const InfeasibleError& e) {
    report.reason = e.what();
  }
  return report;
}

}  // namespace otto::fridge
