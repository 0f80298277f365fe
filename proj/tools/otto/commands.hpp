#pragma once

// Subcommands of the `otto` tool. Each command is callable in-process so the
// tests can drive the exact code path the binary runs.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "otto/cycle.hpp"
#include "otto/verify.hpp"

namespace otto::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kDomainFailure = 1, kUsageError = 2 };

// Flags that parse but do not describe a valid request.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

// Evenly spaced values of one named parameter. count == 1 with
// start == stop denotes a single point.
struct SweepAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;

  // Throws UsageError on an unknown name or an empty range.
  void validate() const;
  std::vector<double> values() const;
};

struct SweepSpec {
  SweepAxis axis;
  std::map<std::string, std::vector<double>> fixed;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct RunReport {
  std::string tool_version = kToolVersion;
  nlohmann::json input;
  Table table;
  std::vector<std::string> warnings;
};

// 12 significant digits, C locale.
std::string format_number(double value);

std::string to_csv(const Table& table);
nlohmann::json to_json(const RunReport& report);

// Rows ordered by eta_c (outer, as given) then r (inner, ascending).
RunReport fig2(const SweepSpec& spec);
RunReport fig3(const SweepSpec& spec);

nlohmann::json eval_json(const CycleSpec& spec);
nlohmann::json fridge_json(double tau, double r);
nlohmann::json verify_json(const verify::SuiteReport& report, verify::Suite suite,
                           std::size_t budget, std::uint64_t seed);

nlohmann::json error_json(const std::string& kind, const std::string& message);

// Full command line. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
