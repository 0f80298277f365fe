#include "otto/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "otto/engine.hpp"
#include "otto/errors.hpp"
#include "otto/fridge.hpp"

namespace otto::cli {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

json interval_json(const fridge::Interval& interval) {
  return {{"lower", interval.lower},
          {"upper", interval.upper},
          {"lower_closed", interval.lower_closed},
          {"upper_closed", false}};
}

void require_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw UsageError(std::string(name) + " must lie in (0, 1), got " + format_number(value));
  }
}

}  // namespace

void SweepAxis::validate() const {
  if (name != "r" && name != "eta_c") throw UsageError("unknown sweep axis '" + name + "'");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw UsageError("sweep bounds must be finite");
  if (count == 1) {
    if (start != stop) throw UsageError("a single-point sweep needs start == stop");
    return;
  }
  if (count < 2) throw UsageError("sweep count must be >= 2");
  if (!(start < stop)) throw UsageError("empty sweep range: start must be < stop");
}

std::vector<double> SweepAxis::values() const {
  validate();
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = count == 1 ? start
                      : start + (stop - start) * static_cast<double>(i) /
                                    static_cast<double>(count - 1);
  }
  if (count > 1) v.back() = stop;
  return v;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

json to_json(const RunReport& report) {
  json rows = json::array();
  for (const auto& row : report.table.rows) {
    json record = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) record[report.table.columns[i]] = row[i];
    rows.push_back(std::move(record));
  }
  return {{"tool_version", report.tool_version},
          {"input", report.input},
          {"columns", report.table.columns},
          {"rows", std::move(rows)},
          {"warnings", report.warnings}};
}

RunReport fig2(const SweepSpec& spec) {
  if (spec.axis.name != "r") throw UsageError("fig2 sweeps the 'r' axis");
  const std::vector<double> rs = spec.axis.values();
  if (rs.front() < 0.0) throw UsageError("squeezing parameter must be >= 0");
  const auto it = spec.fixed.find("eta_c");
  if (it == spec.fixed.end() || it->second.empty()) throw UsageError("fig2 needs at least one eta_c");
  for (double eta_c : it->second) require_open_unit(eta_c, "eta_c");

  RunReport report;
  report.input = {{"command", "fig2"},
                  {"eta_c", it->second},
                  {"r", {{"start", spec.axis.start}, {"stop", spec.axis.stop}, {"count", spec.axis.count}}}};
  report.table.columns = {"r", "eta_c", "eta_up", "eta_mw", "eta_c_gen"};
  report.table.rows.reserve(rs.size() * it->second.size());
  for (double eta_c : it->second) {
    for (double r : rs) {
      report.table.rows.push_back({r, eta_c, engine::eta_up(eta_c, r), engine::eta_mw(eta_c, r),
                                   engine::generalized_carnot(eta_c, r)});
    }
  }
  return report;
}

RunReport fig3(const SweepSpec& spec) {
  if (spec.axis.name != "eta_c") throw UsageError("fig3 sweeps the 'eta_c' axis");
  const std::vector<double> xs = spec.axis.values();
  require_open_unit(xs.front(), "eta_c");
  require_open_unit(xs.back(), "eta_c");

  RunReport report;
  report.input = {{"command", "fig3"},
                  {"eta_c", {{"start", spec.axis.start}, {"stop", spec.axis.stop}, {"count", spec.axis.count}}}};
  report.table.columns = {"eta_c", "eta_up_th", "eta_rk", "half_eta_c"};
  report.table.rows.reserve(xs.size());
  for (double x : xs) {
    report.table.rows.push_back({x, engine::eta_up_thermal(x), engine::eta_rk(x), x / 2.0});
  }
  return report;
}

json eval_json(const CycleSpec& spec) {
  const CyclePerformance perf = heats_work(spec);
  const double w1 = spec.freqs().low();
  const double w2 = spec.freqs().high();
  const double b1 = spec.cold().beta();
  const double b2 = spec.hot().beta();

  json warnings = json::array();
  json high_t = nullptr;
  if (spec.placement() == SqueezePlacement::HotBath &&
      spec.mode().kind() == AdiabaticityMode::Kind::SuddenSwitch) {
    const double beta_omega = std::max(b1 * w1, b2 * w2);
    if (!engine::high_temperature_regime(beta_omega)) {
      warnings.push_back("high-temperature forms are approximate: max beta*omega = " +
                         format_number(beta_omega) + " exceeds " +
                         format_number(engine::kHighTemperatureThreshold));
    }
    try {
      high_t = {{"eta", engine::efficiency_ht(w1 / w2, b2 / b1, spec.hot().squeezing())},
                {"pwc", engine::pwc_ht(w1 / w2, b2 / b1, spec.hot().squeezing())}};
    } catch (const SingularityError&) {
      high_t = {{"eta", nullptr}, {"pwc", engine::pwc_ht(w1 / w2, b2 / b1, spec.hot().squeezing())}};
    }
  }

  const char* mode_name = "custom";
  if (spec.mode().kind() == AdiabaticityMode::Kind::Adiabatic) mode_name = "adiabatic";
  if (spec.mode().kind() == AdiabaticityMode::Kind::SuddenSwitch) mode_name = "sudden";

  return {{"tool_version", kToolVersion},
          {"input",
           {{"w1", w1},
            {"w2", w2},
            {"b1", b1},
            {"b2", b2},
            {"r", spec.squeezing()},
            {"mode", mode_name},
            {"placement", spec.placement() == SqueezePlacement::HotBath ? "hot" : "cold"}}},
          {"lambda", spec.lambda()},
          {"h_a", perf.energies.a},
          {"h_b", perf.energies.b},
          {"h_c", perf.energies.c},
          {"h_d", perf.energies.d},
          {"q2", perf.q2},
          {"q4", perf.q4},
          {"w_ext", perf.w_ext},
          {"w_in", perf.work_input()},
          {"eta", optional_number(perf.eta)},
          {"cop", optional_number(perf.cop)},
          {"mode", std::string(to_string(perf.mode))},
          {"high_temperature", high_t},
          {"warnings", warnings}};
}

json fridge_json(double tau, double r) {
  const fridge::FridgeBoundsReport report = fridge::fridge_bounds(tau, r);
  return {{"tool_version", kToolVersion},
          {"input", {{"tau", tau}, {"r", r}}},
          {"zeta_c", report.zeta_c},
          {"zeta_up", optional_number(report.zeta_up)},
          {"cooling_feasible", report.cooling_feasible},
          {"reason", report.reason.empty() ? json(nullptr) : json(report.reason)},
          {"tau_window", interval_json(report.tau_window)},
          {"r_window", interval_json(report.r_window)}};
}

json verify_json(const verify::SuiteReport& report, verify::Suite suite, std::size_t budget,
                 std::uint64_t seed) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"observed", c.observed},
                      {"limit", c.limit},
                      {"max_violation", c.max_violation},
                      {"evaluations", c.evaluations},
                      {"detail", c.detail}});
  }
  return {{"tool_version", kToolVersion},
          {"suite", std::string(verify::to_string(suite))},
          {"budget", budget},
          {"seed", seed},
          {"passed", report.passed()},
          {"checks", std::move(checks)}};
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

namespace {

// Destination chosen by --out; stdout when empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw otto::DomainError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void write_report(const RunReport& report, Format format, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  if (format == Format::Csv) {
    sink.stream() << to_csv(report.table);
  } else {
    sink.stream() << to_json(report).dump(2) << '\n';
  }
}

void write_json(const json& value, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  sink.stream() << value.dump(2) << '\n';
}

const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sudden-switch quantum harmonic Otto cycle with squeezed reservoirs", "otto"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string out_path;
  Format format = Format::Json;

  // eval
  auto* eval = app.add_subcommand("eval", "Exact four-stroke bookkeeping of one cycle");
  double w1 = 0.0, w2 = 0.0, b1 = 0.0, b2 = 0.0, r = 0.0, lambda = 1.0;
  std::string mode = "sudden";
  std::string placement = "hot";
  eval->add_option("--w1", w1, "Low frequency omega1")->required()->check(CLI::PositiveNumber);
  eval->add_option("--w2", w2, "High frequency omega2")->required()->check(CLI::PositiveNumber);
  eval->add_option("--b1", b1, "Cold-bath inverse temperature beta1")->required()->check(CLI::PositiveNumber);
  eval->add_option("--b2", b2, "Hot-bath inverse temperature beta2")->required()->check(CLI::PositiveNumber);
  eval->add_option("--r", r, "Squeezing parameter of the squeezed bath")->check(CLI::NonNegativeNumber);
  eval->add_option("--mode", mode, "Stroke type")->check(CLI::IsMember({"adiabatic", "sudden", "custom"}));
  eval->add_option("--lambda", lambda, "Adiabaticity parameter for --mode custom");
  eval->add_option("--placement", placement, "Squeezed bath")->check(CLI::IsMember({"hot", "cold"}));
  eval->add_option("--out", out_path, "Output path (default stdout)");
  eval->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats));

  // fig2
  auto* f2 = app.add_subcommand("fig2", "eta_up, eta_mw and generalized Carnot versus squeezing");
  std::vector<double> eta_cs{0.2, 0.4, 0.8};
  SweepAxis r_axis{"r", 0.0, 6.0, 121};
  Format f2_format = Format::Csv;
  f2->add_option("--eta-c", eta_cs, "Carnot efficiencies (one curve each)")->delimiter(',');
  f2->add_option("--r-start", r_axis.start, "First squeezing value");
  f2->add_option("--r-stop", r_axis.stop, "Last squeezing value");
  f2->add_option("--count", r_axis.count, "Number of squeezing values");
  f2->add_option("--out", out_path, "Output path (default stdout)");
  f2->add_option("--format", f2_format, "Output format")->transform(CLI::CheckedTransformer(kFormats));

  // fig3
  auto* f3 = app.add_subcommand("fig3", "Unsqueezed bound and Rezek-Kosloff efficiency versus eta_c");
  SweepAxis eta_axis{"eta_c", 0.01, 0.99, 99};
  Format f3_format = Format::Csv;
  f3->add_option("--start", eta_axis.start, "First Carnot efficiency");
  f3->add_option("--stop", eta_axis.stop, "Last Carnot efficiency");
  f3->add_option("--count", eta_axis.count, "Number of points");
  f3->add_option("--out", out_path, "Output path (default stdout)");
  f3->add_option("--format", f3_format, "Output format")->transform(CLI::CheckedTransformer(kFormats));

  // fridge
  auto* fr = app.add_subcommand("fridge", "Refrigerator bounds and cooling windows");
  double tau = 0.0, fridge_r = 0.0;
  fr->add_option("--tau", tau, "Temperature ratio T1/T2")->required();
  fr->add_option("--r", fridge_r, "Cold-bath squeezing")->check(CLI::NonNegativeNumber);
  fr->add_option("--out", out_path, "Output path (default stdout)");
  fr->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats));

  // verify
  auto* ver = app.add_subcommand("verify", "Check closed forms against numerical oracles");
  std::string suite_name = "all";
  std::size_t budget = verify::kDefaultBudget;
  std::uint64_t seed = verify::kDefaultSeed;
  ver->add_option("--suite", suite_name, "ceiling | optimality | identities | windows | all");
  ver->add_option("--budget", budget, "Random samples in the ceiling search");
  ver->add_option("--seed", seed, "Seed of the random ceiling search");
  ver->add_option("--out", out_path, "Output path (default stdout)");
  ver->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kToolVersion) + "\n"
                                                          : app.help());
      return kSuccess;
    }
    err << "otto: " << e.what() << '\n';
    out << error_json("usage", e.what()).dump() << '\n';
    return kUsageError;
  }

  try {
    if (eval->parsed()) {
      if (format != Format::Json) throw UsageError("eval supports --format json only");
      std::optional<CycleSpec> spec;
      try {
        AdiabaticityMode stroke = mode == "adiabatic" ? AdiabaticityMode::adiabatic()
                                  : mode == "custom"  ? AdiabaticityMode::custom(lambda)
                                                      : AdiabaticityMode::sudden_switch();
        const bool hot = placement == "hot";
        spec.emplace(BathSpec(b1, hot ? 0.0 : r), BathSpec(b2, hot ? r : 0.0), FrequencyPair(w1, w2),
                     stroke, hot ? SqueezePlacement::HotBath : SqueezePlacement::ColdBath);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      write_json(eval_json(*spec), out_path, out);
    } else if (f2->parsed()) {
      write_report(fig2({r_axis, {{"eta_c", eta_cs}}}), f2_format, out_path, out);
    } else if (f3->parsed()) {
      write_report(fig3({eta_axis, {}}), f3_format, out_path, out);
    } else if (fr->parsed()) {
      if (format != Format::Json) throw UsageError("fridge supports --format json only");
      require_open_unit(tau, "tau");
      write_json(fridge_json(tau, fridge_r), out_path, out);
    } else if (ver->parsed()) {
      if (format != Format::Json) throw UsageError("verify supports --format json only");
      const auto suite = verify::parse_suite(suite_name);
      if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
      const verify::SuiteReport report = verify::run(*suite, budget, seed);
      write_json(verify_json(report, *suite, budget, seed), out_path, out);
      return report.passed() ? kSuccess : kDomainFailure;
    }
  } catch (const UsageError& e) {
    err << "otto: " << e.what() << '\n';
    out << error_json("usage", e.what()).dump() << '\n';
    return kUsageError;
  } catch (const otto::Error& e) {
    err << "otto: " << e.what() << '\n';
    out << error_json(e.kind(), e.what()).dump() << '\n';
    return kDomainFailure;
  }
  return kSuccess;
}

}  // namespace otto::cli
