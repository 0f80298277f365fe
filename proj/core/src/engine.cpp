#include "otto/engine.hpp"

namespace otto::engine {

EngineParams::EngineParams(double z, double tau, double r, double beta2)
    : z_(z), tau_(tau), r_(r), beta2_(beta2) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("compression ratio z must lie in (0, 1)");
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("temperature ratio tau must lie in (0, 1)");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeezing parameter must be finite and >= 0");
  if (!(beta2 > 0.0) || !std::isfinite(beta2)) throw DomainError("beta2 must be positive");
}

double work_ht(const EngineParams& p) { return work_ht(p.z(), p.tau(), p.r(), p.beta2()); }

double efficiency_ht(const EngineParams& p) { return efficiency_ht(p.z(), p.tau(), p.r()); }

bool pwc_ht(const EngineParams& p) { return pwc_ht(p.z(), p.tau(), p.r()); }

EngineBoundsReport engine_bounds(double eta_c, double r, std::optional<double> z) {
  EngineBoundsReport report;
  report.eta_c = eta_c;
  report.eta_c_gen = generalized_carnot(eta_c, r);
  report.eta_up = eta_up(eta_c, r);
  report.eta_mw = eta_mw(eta_c, r);
  report.z_star = optimal_ratio(1.0 - eta_c, r);
  const double probe = z.value_or(report.z_star);
  if (!(probe > 0.0 && probe < 1.0)) throw DomainError("compression ratio z must lie in (0, 1)");
  report.pwc_satisfied = pwc_ht(probe, 1.0 - eta_c, r);
  return report;
}

bool high_temperature_regime(double beta_omega) noexcept {
  return beta_omega <= kHighTemperatureThreshold;
}

}  // namespace otto::engine
