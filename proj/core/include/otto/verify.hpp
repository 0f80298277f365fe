#pragma once

// Self-check suites that compare every closed form against the numerical
// oracles. Backs the `otto verify` subcommand.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otto::verify {

enum class Suite { Ceiling, Optimality, Identities, Windows, All };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view to_string(Suite suite) noexcept;

inline constexpr std::uint64_t kDefaultSeed = 20190923;
inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;       // worst value seen (deviation or supremum)
  double limit = 0.0;          // threshold the observation is held to
  double max_violation = 0.0;  // max(0, observed - limit) for upper limits
  std::size_t evaluations = 0;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

// budget: number of random samples in the ceiling search.
SuiteReport run(Suite suite, std::size_t budget = kDefaultBudget,
                std::uint64_t seed = kDefaultSeed);

}  // namespace otto::verify
