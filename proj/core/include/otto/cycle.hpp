#pragma once

// Exact finite-temperature bookkeeping of the four-stroke harmonic Otto
// cycle with one squeezed thermal reservoir. Units: hbar = k_B = 1, so
// frequencies are energies and beta is an inverse energy.
//
// Corners of the cycle: A (thermalised with the cold bath at omega1),
// B (after compression to omega2), C (thermalised with the hot bath at
// omega2), D (after expansion back to omega1). Heats are signed: positive
// when absorbed by the working medium.

#include <optional>
#include <string_view>

namespace otto {

class BathSpec {
 public:
  // Throws DomainError unless beta > 0 and squeezing >= 0.
  explicit BathSpec(double beta, double squeezing = 0.0);

  double beta() const noexcept { return beta_; }
  double squeezing() const noexcept { return squeezing_; }

 private:
  double beta_;
  double squeezing_;
};

// 0 < low < high. Equal frequencies are rejected: every work and
// efficiency expression divides by (high - low).
class FrequencyPair {
 public:
  FrequencyPair(double low, double high);

  double low() const noexcept { return low_; }
  double high() const noexcept { return high_; }
  double ratio() const noexcept { return low_ / high_; }

 private:
  double low_;
  double high_;
};

class AdiabaticityMode {
 public:
  enum class Kind { Adiabatic, SuddenSwitch, Custom };

  static AdiabaticityMode adiabatic() { return AdiabaticityMode(Kind::Adiabatic, 1.0); }
  static AdiabaticityMode sudden_switch() { return AdiabaticityMode(Kind::SuddenSwitch, 0.0); }
  // Throws DomainError unless lambda >= 1.
  static AdiabaticityMode custom(double lambda);

  Kind kind() const noexcept { return kind_; }
  // Adiabaticity parameter for the given stroke endpoints.
  double lambda(const FrequencyPair& freqs) const noexcept;

 private:
  AdiabaticityMode(Kind kind, double lambda) : kind_(kind), lambda_(lambda) {}
  Kind kind_;
  double lambda_;
};

enum class SqueezePlacement { HotBath, ColdBath };

class CycleSpec {
 public:
  // Throws DomainError unless cold.beta() > hot.beta() and the bath on the
  // non-squeezed side has zero squeezing.
  CycleSpec(BathSpec cold, BathSpec hot, FrequencyPair freqs,
            AdiabaticityMode mode = AdiabaticityMode::sudden_switch(),
            SqueezePlacement placement = SqueezePlacement::HotBath);

  const BathSpec& cold() const noexcept { return cold_; }
  const BathSpec& hot() const noexcept { return hot_; }
  const FrequencyPair& freqs() const noexcept { return freqs_; }
  const AdiabaticityMode& mode() const noexcept { return mode_; }
  SqueezePlacement placement() const noexcept { return placement_; }

  double lambda() const noexcept { return mode_.lambda(freqs_); }
  // Squeezing of whichever bath carries it.
  double squeezing() const noexcept;

 private:
  BathSpec cold_;
  BathSpec hot_;
  FrequencyPair freqs_;
  AdiabaticityMode mode_;
  SqueezePlacement placement_;
};

// Idle covers every sign pattern outside the four machine types, including
// all boundary ties where a heat or the work vanishes.
enum class OperatingMode { Engine, Refrigerator, Heater, Accelerator, Idle };

std::string_view to_string(OperatingMode mode) noexcept;
OperatingMode classify(double q2, double q4, double w_ext) noexcept;

struct CornerEnergies {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct CyclePerformance {
  CornerEnergies energies;
  double q2 = 0.0;     // hot isochore, C - B
  double q4 = 0.0;     // cold isochore, A - D
  double w_ext = 0.0;  // q2 + q4; negative when work is consumed
  std::optional<double> eta;  // engine mode only
  std::optional<double> cop;  // refrigerator mode only
  OperatingMode mode = OperatingMode::Idle;

  double work_input() const noexcept { return -w_ext; }
};

// 1/(e^{beta*omega} - 1).
double thermal_occupation(double beta, double omega);
// n + (2n + 1) sinh^2 r.
double squeezed_occupation(double beta, double omega, double r);
// Ratio of squeezed to thermal occupation, 1 + (2 + 1/n) sinh^2 r.
// Throws DomainError if it overflows (beta*omega beyond ~709 with r > 0).
double delta_h(double beta, double omega, double r);
// (omega1^2 + omega2^2) / (2 omega1 omega2).
double lambda_sudden(const FrequencyPair& freqs) noexcept;

// Hot placement follows the standard corner table with the squeezing factor
// on C and D. Cold placement puts delta_h(beta1, omega1, r) on A and B; the
// high-temperature refrigerator energies are the limit of this choice.
CornerEnergies cycle_energies(const CycleSpec& spec);

CyclePerformance heats_work(const CycleSpec& spec);

// w_ext / q2. Throws ModeError unless the cycle runs as an engine.
double efficiency(const CycleSpec& spec);

// Closed bracket form of the sudden-switch efficiency,
// [2/(1 - z^2) + 1/(z dH coth(b2 w2/2) tanh(b1 w1/2) - 1)]^{-1}.
// Requires sudden-switch strokes, hot-side squeezing and engine operation.
double efficiency_bracket_form(const CycleSpec& spec);

// Temperature a thermal bath needs to match the squeezed occupation at
// frequency omega: omega / ln(1 + 1/N).
double effective_temperature(double beta, double omega, double r);

}  // namespace otto
