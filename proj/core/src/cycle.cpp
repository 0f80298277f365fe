#include "otto/cycle.hpp"

#include <cmath>
#include <string>

#include "otto/errors.hpp"
#include "otto/numerics.hpp"

namespace otto {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

void require_squeezing(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("squeezing parameter must be finite and >= 0, got " + std::to_string(r));
  }
}

}  // namespace

BathSpec::BathSpec(double beta, double squeezing) : beta_(beta), squeezing_(squeezing) {
  require_positive(beta, "inverse temperature");
  require_squeezing(squeezing);
}

FrequencyPair::FrequencyPair(double low, double high) : low_(low), high_(high) {
  require_positive(low, "low frequency");
  require_positive(high, "high frequency");
  if (!(low < high)) {
    throw DomainError("frequencies must satisfy omega1 < omega2");
  }
}

AdiabaticityMode AdiabaticityMode::custom(double lambda) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    throw DomainError("adiabaticity parameter must be >= 1, got " + std::to_string(lambda));
  }
  return AdiabaticityMode(Kind::Custom, lambda);
}

double AdiabaticityMode::lambda(const FrequencyPair& freqs) const noexcept {
  switch (kind_) {
    case Kind::Adiabatic:
      return 1.0;
    case Kind::SuddenSwitch:
      return lambda_sudden(freqs);
    case Kind::Custom:
      break;
  }
  return lambda_;
}

CycleSpec::CycleSpec(BathSpec cold, BathSpec hot, FrequencyPair freqs, AdiabaticityMode mode,
                     SqueezePlacement placement)
    : cold_(cold), hot_(hot), freqs_(freqs), mode_(mode), placement_(placement) {
  if (!(cold_.beta() > hot_.beta())) {
    throw DomainError("cold bath must be colder than the hot bath (beta1 > beta2)");
  }
  if (placement_ == SqueezePlacement::HotBath && cold_.squeezing() != 0.0) {
    throw DomainError("hot-side squeezing requires an unsqueezed cold bath");
  }
  if (placement_ == SqueezePlacement::ColdBath && hot_.squeezing() != 0.0) {
    throw DomainError("cold-side squeezing requires an unsqueezed hot bath");
  }
}

double CycleSpec::squeezing() const noexcept {
  return placement_ == SqueezePlacement::HotBath ? hot_.squeezing() : cold_.squeezing();
}

std::string_view to_string(OperatingMode mode) noexcept {
  switch (mode) {
    case OperatingMode::Engine:
      return "engine";
    case OperatingMode::Refrigerator:
      return "refrigerator";
    case OperatingMode::Heater:
      return "heater";
    case OperatingMode::Accelerator:
      return "accelerator";
    case OperatingMode::Idle:
      break;
  }
  return "idle";
}

OperatingMode classify(double q2, double q4, double w_ext) noexcept {
  if (q2 > 0.0 && q4 < 0.0) {
    if (w_ext > 0.0) return OperatingMode::Engine;
    if (w_ext < 0.0) return OperatingMode::Accelerator;
    return OperatingMode::Idle;
  }
  if (q4 > 0.0 && q2 < 0.0 && w_ext < 0.0) return OperatingMode::Refrigerator;
  if (q2 < 0.0 && q4 < 0.0) return OperatingMode::Heater;
  return OperatingMode::Idle;
}

double thermal_occupation(double beta, double omega) {
  require_positive(beta, "inverse temperature");
  require_positive(omega, "frequency");
  return 1.0 / std::expm1(beta * omega);
}

double squeezed_occupation(double beta, double omega, double r) {
  require_squeezing(r);
  const double n = thermal_occupation(beta, omega);
  const double s = std::sinh(r);
  return n + (2.0 * n + 1.0) * s * s;
}

double delta_h(double beta, double omega, double r) {
  require_positive(beta, "inverse temperature");
  require_positive(omega, "frequency");
  require_squeezing(r);
  if (r == 0.0) return 1.0;
  const double s = std::sinh(r);
  // 1/n = e^{beta omega} - 1
  const double value = 1.0 + (2.0 + std::expm1(beta * omega)) * s * s;
  if (!std::isfinite(value)) {
    throw DomainError("squeezing factor overflows at beta*omega = " +
                      std::to_string(beta * omega));
  }
  return value;
}

double lambda_sudden(const FrequencyPair& freqs) noexcept {
  const double w1 = freqs.low();
  const double w2 = freqs.high();
  // 1 + (w2 - w1)^2 / (2 w1 w2): no cancellation as w1 -> w2.
  const double gap = w2 - w1;
  return 1.0 + gap * gap / (2.0 * w1 * w2);
}

CornerEnergies cycle_energies(const CycleSpec& spec) {
  const double w1 = spec.freqs().low();
  const double w2 = spec.freqs().high();
  const double b1 = spec.cold().beta();
  const double b2 = spec.hot().beta();
  const double lambda = spec.lambda();

  const double cold_coth = coth(b1 * w1 / 2.0);
  const double hot_coth = coth(b2 * w2 / 2.0);

  double cold_factor = 1.0;
  double hot_factor = 1.0;
  if (spec.placement() == SqueezePlacement::HotBath) {
    hot_factor = delta_h(b2, w2, spec.hot().squeezing());
  } else {
    cold_factor = delta_h(b1, w1, spec.cold().squeezing());
  }

  CornerEnergies e;
  e.a = w1 / 2.0 * cold_coth * cold_factor;
  e.b = w2 / 2.0 * lambda * cold_coth * cold_factor;
  e.c = w2 / 2.0 * hot_coth * hot_factor;
  e.d = w1 / 2.0 * lambda * hot_coth * hot_factor;
  return e;
}

CyclePerformance heats_work(const CycleSpec& spec) {
  CyclePerformance perf;
  perf.energies = cycle_energies(spec);
  perf.q2 = perf.energies.c - perf.energies.b;
  perf.q4 = perf.energies.a - perf.energies.d;
  perf.w_ext = perf.q2 + perf.q4;
  perf.mode = classify(perf.q2, perf.q4, perf.w_ext);
  if (perf.mode == OperatingMode::Engine) {
    perf.eta = perf.w_ext / perf.q2;
  } else if (perf.mode == OperatingMode::Refrigerator) {
    perf.cop = perf.q4 / perf.work_input();
  }
  return perf;
}

double efficiency(const CycleSpec& spec) {
  const CyclePerformance perf = heats_work(spec);
  if (perf.mode != OperatingMode::Engine) {
    throw ModeError("efficiency requires engine operation; cycle runs as " +
                        std::string(to_string(perf.mode)),
                    std::string(to_string(perf.mode)));
  }
  return *perf.eta;
}

double efficiency_bracket_form(const CycleSpec& spec) {
  if (spec.mode().kind() != AdiabaticityMode::Kind::SuddenSwitch) {
    throw DomainError("bracket form holds for sudden-switch strokes only");
  }
  if (spec.placement() != SqueezePlacement::HotBath) {
    throw DomainError("bracket form holds for hot-side squeezing only");
  }
  const CyclePerformance perf = heats_work(spec);
  if (perf.mode != OperatingMode::Engine) {
    throw ModeError("efficiency requires engine operation; cycle runs as " +
                        std::string(to_string(perf.mode)),
                    std::string(to_string(perf.mode)));
  }
  const double w1 = spec.freqs().low();
  const double w2 = spec.freqs().high();
  const double z = w1 / w2;
  const double b1 = spec.cold().beta();
  const double b2 = spec.hot().beta();
  const double dh = delta_h(b2, w2, spec.hot().squeezing());

  const double first = 2.0 / (1.0 - z * z);
  const double second = 1.0 / (z * dh * coth(b2 * w2 / 2.0) * tanh_stable(b1 * w1 / 2.0) - 1.0);
  return 1.0 / (first + second);
}

double effective_temperature(double beta, double omega, double r) {
  require_positive(beta, "inverse temperature");
  require_positive(omega, "frequency");
  require_squeezing(r);
  // Thermal bath: the relation inverts the Bose factor exactly.
  if (r == 0.0) return 1.0 / beta;
  const double n = squeezed_occupation(beta, omega, r);
  return omega / std::log1p(1.0 / n);
}

}  // namespace otto
