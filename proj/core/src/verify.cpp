#include "otto/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "otto/cycle.hpp"
#include "otto/engine.hpp"
#include "otto/fridge.hpp"
#include "otto/oracle.hpp"
#include "otto/precision.hpp"

namespace otto::verify {

namespace {

using oracle::Axis;
using oracle::AxisSpacing;
using oracle::Point;

CheckResult below(std::string name, double observed, double limit, std::size_t evaluations,
                  std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.observed = observed;
  c.limit = limit;
  c.passed = observed < limit;
  c.max_violation = std::max(0.0, observed - limit);
  c.evaluations = evaluations;
  c.detail = std::move(detail);
  return c;
}

CheckResult at_least(std::string name, double observed, double limit, std::size_t evaluations,
                     std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.observed = observed;
  c.limit = limit;
  c.passed = observed >= limit;
  c.max_violation = std::max(0.0, limit - observed);
  c.evaluations = evaluations;
  c.detail = std::move(detail);
  return c;
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

std::string describe_point(const std::vector<double>& p) {
  std::ostringstream os;
  os.precision(6);
  os << "at (z, b1w1, b2w2, r) = (";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

// Engine efficiency of the exact sudden-switch cycle at
// (z, beta1*omega1, beta2*omega2, r) with omega2 = 1; NaN when the point is
// not a valid engine.
double exact_engine_efficiency(Point p) {
  const double z = p[0];
  const double beta1 = p[1] / z;
  const double beta2 = p[2];
  if (!(z < 1.0) || !(beta1 > beta2)) return std::numeric_limits<double>::quiet_NaN();
  const CycleSpec spec(BathSpec(beta1), BathSpec(beta2, p[3]), FrequencyPair(z, 1.0),
                       AdiabaticityMode::sudden_switch(), SqueezePlacement::HotBath);
  const CyclePerformance perf = heats_work(spec);
  return perf.eta.value_or(std::numeric_limits<double>::quiet_NaN());
}

std::vector<Axis> ceiling_box(std::size_t per_axis) {
  return {{1e-4, 10.0, per_axis, AxisSpacing::Log},
          {1e-4, 10.0, per_axis, AxisSpacing::Log},
          {1e-4, 10.0, per_axis, AxisSpacing::Log},
          {0.0, 10.0, per_axis, AxisSpacing::Linear}};
}

void run_ceiling(std::vector<CheckResult>& out, std::size_t budget, std::uint64_t seed) {
  const oracle::Objective objective = exact_engine_efficiency;
  const oracle::Predicate feasible = [](Point p) { return !std::isnan(exact_engine_efficiency(p)); };

  const auto random = oracle::sup_random(objective, ceiling_box(2), feasible, budget, seed);
  out.push_back(below("ceiling.random", random.best_value, 0.5, random.evaluations,
                      "seed " + std::to_string(seed) + ", " + describe_point(random.best_input)));

  oracle::GridOptions options;
  options.refine = true;
  const auto grid = oracle::sup_constrained_grid(objective, ceiling_box(40), feasible, options);
  out.push_back(below("ceiling.grid", grid.best_value, 0.5, grid.evaluations,
                      describe_point(grid.best_input)));
  out.push_back(at_least("ceiling.approach", grid.best_value, 0.45, grid.evaluations,
                         "supremum must come close to the ceiling"));
  out.push_back(at_least("ceiling.feasible_points", static_cast<double>(grid.evaluations), 1e6,
                         grid.evaluations, "feasible engine configurations in the grid search"));
}

void run_optimality(std::vector<CheckResult>& out) {
  double worst_z = 0.0;
  double worst_eta = 0.0;
  double worst_bound = 0.0;
  std::size_t evaluations = 0;
  for (double eta_c : linspace(0.05, 0.95, 20)) {
    for (double r : linspace(0.0, 5.0, 20)) {
      const double tau = 1.0 - eta_c;
      const Quad tau_q = tau;
      const Quad r_q = r;
      const Quad edge = sqrt(engine::reduced_tau(tau_q, r_q));

      const auto work = oracle::maximize_scalar<Quad>(
          {[&](Quad z) { return engine::work_ht(z, tau_q, r_q, Quad(1)); }, edge, Quad(1),
           Quad(1e-22)});
      const double z_num = static_cast<double>(work.best_input);
      worst_z = std::max(worst_z, std::abs(z_num - engine::optimal_ratio(tau, r)));
      worst_eta = std::max(worst_eta, std::abs(engine::efficiency_ht(z_num, tau, r) -
                                               engine::eta_mw(eta_c, r)));

      const auto eff = oracle::maximize_scalar<Quad>(
          {[&](Quad z) { return engine::efficiency_ht(z, tau_q, r_q); }, edge, Quad(1),
           Quad(1e-22)});
      worst_bound = std::max(worst_bound,
                             std::abs(static_cast<double>(eff.best_value) - engine::eta_up(eta_c, r)));
      evaluations += work.evaluations + eff.evaluations;
    }
  }
  out.push_back(below("optimality.work_argmax", worst_z, 1e-8, evaluations,
                      "max |z_num - (tau sech2r)^(1/4)| over 20x20 (eta_c, r) grid"));
  out.push_back(below("optimality.eta_at_max_work", worst_eta, 1e-10, evaluations,
                      "max |eta(z_num) - eta_mw|"));
  out.push_back(below("optimality.eta_up_is_max", worst_bound, 1e-10, evaluations,
                      "max |sup_z eta - eta_up|"));

  double worst_cop = 0.0;
  std::size_t cop_evaluations = 0;
  for (double tau : {0.2, 0.35, 0.5, 2.0 / 3.0, 0.85}) {
    const fridge::Interval window = fridge::r_window(tau);
    for (int k = 0; k < 5; ++k) {
      const double r = window.lower + (window.upper - window.lower) * (k + 0.5) / 5.0;
      const Quad tau_q = tau;
      const Quad r_q = r;
      const auto best = oracle::maximize_scalar<Quad>(
          {[&](Quad z) {
             const auto h = fridge::heats_ht(z, tau_q, r_q);
             return h.q4 > 0 ? Quad(h.q4 / h.w_in) : Quad(0);
           },
           Quad(0), fridge::cooling_ratio_limit(tau_q, r_q), Quad(1e-22)});
      worst_cop = std::max(worst_cop,
                           std::abs(static_cast<double>(best.best_value) - fridge::zeta_up(tau, r)));
      cop_evaluations += best.evaluations;
    }
  }
  out.push_back(below("optimality.fridge_cop", worst_cop, 1e-6, cop_evaluations,
                      "max |sup_z COP - zeta_up| over 25 feasible (tau, r)"));
}

void run_identities(std::vector<CheckResult>& out) {
  double worst_a = 0.0;
  double worst_b = 0.0;
  double worst_gap_mw = -1.0;   // eta_mw - eta_up, must stay <= 0
  double worst_gen = -1.0;      // eta_up - eta_c_gen, must stay < 0
  double worst_half = -1.0;     // eta_up - 1/2, must stay < 0
  std::size_t n = 0;
  for (double eta_c : linspace(0.05, 0.95, 20)) {
    for (double r : linspace(0.0, 5.0, 20)) {
      const double up = engine::eta_up(eta_c, r);
      const double mw = engine::eta_mw(eta_c, r);
      const double gen = engine::generalized_carnot(eta_c, r);
      worst_a = std::max(worst_a, relative_deviation(up, engine::eta_up_thermal(gen)));
      worst_b = std::max(worst_b, relative_deviation(mw, engine::eta_rk(gen)));
      worst_gap_mw = std::max(worst_gap_mw, mw - up);
      worst_gen = std::max(worst_gen, up - gen);
      worst_half = std::max(worst_half, up - 0.5);
      ++n;
    }
  }
  out.push_back(below("identities.eta_up_reduction", worst_a, 1e-12, n,
                      "eta_up(eta_c, r) vs eta_up_thermal(eta_c_gen), relative"));
  out.push_back(below("identities.eta_mw_reduction", worst_b, 1e-12, n,
                      "eta_mw(eta_c, r) vs eta_rk(eta_c_gen), relative"));

  double worst_zeta = 0.0;
  std::size_t m = 0;
  for (double tau : linspace(0.3, 0.95, 14)) {
    for (double tau_c : linspace(0.52, 0.98, 24)) {
      if (tau_c < tau) continue;
      const double r = std::acosh(tau_c / tau) / 2.0;
      const double effective = tau * std::cosh(2.0 * r);
      worst_zeta = std::max(worst_zeta, relative_deviation(fridge::zeta_up(tau, r),
                                                           fridge::zeta_up_thermal(
                                                               effective / (1.0 - effective))));
      ++m;
    }
  }
  out.push_back(below("identities.zeta_up_reduction", worst_zeta, 1e-12, m,
                      "zeta_up(tau, r) vs zeta_up_thermal(tau_c/(1-tau_c)), relative"));

  CheckResult ordering = below("identities.eta_mw_le_eta_up", worst_gap_mw, 0.0, n);
  ordering.passed = worst_gap_mw <= 0.0;
  out.push_back(ordering);
  out.push_back(below("identities.eta_up_lt_generalized_carnot", worst_gen, 0.0, n));
  out.push_back(below("identities.eta_up_lt_half", worst_half, 0.0, n));

  double worst_chain = -1.0;
  for (double x : linspace(0.01, 0.99, 99)) {
    const double rk = engine::eta_rk(x);
    const double th = engine::eta_up_thermal(x);
    worst_chain = std::max({worst_chain, rk - th, th - x / 2.0});
  }
  CheckResult chain = below("identities.thermal_chain", worst_chain, 0.0, 99,
                            "eta_rk <= eta_up_thermal <= eta_c/2");
  chain.passed = worst_chain <= 0.0;
  out.push_back(chain);
}

void run_windows(std::vector<CheckResult>& out) {
  std::size_t mismatches = 0;
  std::size_t n = 0;
  for (double tau : linspace(0.05, 0.95, 19)) {
    for (double r : linspace(0.0, 2.0, 41)) {
      const double u = sech(2.0 * r);
      const bool direct = 2.0 * tau > u && tau < u;
      const bool by_r = fridge::r_window(tau).contains(r);
      const bool by_tau = fridge::tau_window(r).contains(tau);
      if (direct != by_r || direct != by_tau) ++mismatches;
      ++n;
    }
  }
  out.push_back(below("windows.duality", static_cast<double>(mismatches), 0.5, n,
                      "points where r_window, tau_window and tau*cosh(2r) in (1/2, 1) disagree"));

  double worst = 0.0;
  std::size_t evaluations = 0;
  for (double tau : {0.25, 0.5, 0.75}) {
    const fridge::Interval window = fridge::r_window(tau);
    const double mid = (window.lower + window.upper) / 2.0;
    if (window.lower_closed) {
      // r = 0 is a domain boundary here; cooling must already be on.
      const double q4 = fridge::heats_ht(1e-10, tau, 0.0).q4;
      if (!(q4 > 0.0)) worst = std::max(worst, 1.0);
    } else {
      const double root = oracle::find_root_scalar<double>(
          [tau](double r) { return fridge::heats_ht(1e-10, tau, r).q4; }, 0.0, mid, 1e-13);
      worst = std::max(worst, std::abs(root - window.lower));
      ++evaluations;
    }
    const double root = oracle::find_root_scalar<double>(
        [tau](double r) { return fridge::heats_ht(1.0 - 1e-12, tau, r).q4; }, mid,
        window.upper + 0.5, 1e-13);
    worst = std::max(worst, std::abs(root - window.upper));
    ++evaluations;
  }
  out.push_back(below("windows.cooling_boundary", worst, 1e-9, evaluations,
                      "max |Q4 sign change - r_window endpoint|, tau in {0.25, 0.5, 0.75}"));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  if (name == "ceiling") return Suite::Ceiling;
  if (name == "optimality") return Suite::Optimality;
  if (name == "identities") return Suite::Identities;
  if (name == "windows") return Suite::Windows;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Ceiling:
      return "ceiling";
    case Suite::Optimality:
      return "optimality";
    case Suite::Identities:
      return "identities";
    case Suite::Windows:
      return "windows";
    case Suite::All:
      break;
  }
  return "all";
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run(Suite suite, std::size_t budget, std::uint64_t seed) {
  SuiteReport report;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Ceiling) run_ceiling(report.checks, budget, seed);
  if (all || suite == Suite::Optimality) run_optimality(report.checks);
  if (all || suite == Suite::Identities) run_identities(report.checks);
  if (all || suite == Suite::Windows) run_windows(report.checks);
  return report;
}

}  // namespace otto::verify
