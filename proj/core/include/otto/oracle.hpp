#pragma once

// Brute-force numerical machinery used to check the closed forms:
// golden-section maximisation and bisection in one variable (templated on
// the real type), and grid / random suprema over boxes of up to five
// variables (double precision).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "otto/errors.hpp"

namespace otto::oracle {

enum class SearchMethod { GoldenSection, Bisection, Grid, GridRefine, Random };

std::string_view to_string(SearchMethod method) noexcept;

template <typename Real>
struct ScalarObjective {
  std::function<Real(Real)> evaluate;
  Real lower;
  Real upper;
  Real tolerance;
};

template <typename Real>
struct ScalarMaximum {
  Real best_input;
  Real best_value;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  SearchMethod method = SearchMethod::GoldenSection;
};

// Number of golden-section reductions needed to shrink width below tol:
// ceil(log(width/tol) / log(1/0.618...)).
std::size_t golden_section_iterations(double width, double tolerance);

namespace detail {

template <typename Real>
Real checked(const std::function<Real(Real)>& f, Real x) {
  using std::isfinite;
  const Real value = f(x);
  if (!isfinite(value)) throw EvaluationError("objective returned a non-finite value");
  return value;
}

}  // namespace detail

// Golden-section search for the maximum of a unimodal objective. The
// reported point is the best one evaluated, which lies in the final
// bracket of width <= tolerance.
template <typename Real>
ScalarMaximum<Real> maximize_scalar(const ScalarObjective<Real>& obj) {
  using std::sqrt;
  if (!(obj.lower < obj.upper)) throw DomainError("objective interval must be nonempty");
  if (!(obj.tolerance > Real(0))) throw DomainError("tolerance must be positive");

  const Real inv_phi = (sqrt(Real(5)) - Real(1)) / Real(2);
  const std::size_t iterations = golden_section_iterations(
      static_cast<double>(obj.upper - obj.lower), static_cast<double>(obj.tolerance));

  Real a = obj.lower;
  Real b = obj.upper;
  Real c = b - inv_phi * (b - a);
  Real d = a + inv_phi * (b - a);
  Real fc = detail::checked(obj.evaluate, c);
  Real fd = detail::checked(obj.evaluate, d);
  std::size_t evaluations = 2;

  for (std::size_t i = 0; i < iterations; ++i) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = detail::checked(obj.evaluate, d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = detail::checked(obj.evaluate, c);
    }
    ++evaluations;
  }

  ScalarMaximum<Real> result{fc >= fd ? c : d, fc >= fd ? fc : fd, evaluations, iterations,
                             SearchMethod::GoldenSection};
  return result;
}

// Bisection root of g on [lower, upper]. Throws BracketError when g does
// not change sign on the bracket.
template <typename Real>
Real find_root_scalar(const std::function<Real(Real)>& g, Real lower, Real upper, Real tolerance) {
  if (!(lower < upper)) throw DomainError("bracket must be nonempty");
  if (!(tolerance > Real(0))) throw DomainError("tolerance must be positive");
  Real g_lower = detail::checked(g, lower);
  const Real g_upper = detail::checked(g, upper);
  if (g_lower == Real(0)) return lower;
  if (g_upper == Real(0)) return upper;
  if ((g_lower < Real(0)) == (g_upper < Real(0))) {
    throw BracketError("no sign change on the bracket");
  }
  while (upper - lower > tolerance) {
    const Real mid = lower + (upper - lower) / Real(2);
    if (mid <= lower || mid >= upper) break;
    const Real g_mid = detail::checked(g, mid);
    if (g_mid == Real(0)) return mid;
    if ((g_mid < Real(0)) == (g_lower < Real(0))) {
      lower = mid;
      g_lower = g_mid;
    } else {
      upper = mid;
    }
  }
  return lower + (upper - lower) / Real(2);
}

enum class AxisSpacing { Linear, Log };

struct Axis {
  double lower = 0.0;
  double upper = 1.0;
  std::size_t count = 2;
  AxisSpacing spacing = AxisSpacing::Linear;

  double at(std::size_t i) const noexcept;
};

using Point = std::span<const double>;
using Objective = std::function<double(Point)>;
using Predicate = std::function<bool(Point)>;

struct SupremumReport {
  std::vector<double> best_input;  // empty when no feasible point exists
  double best_value = -std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;  // objective calls (feasible points)
  std::size_t visited = 0;      // points tested against the predicate
  SearchMethod method = SearchMethod::Grid;
  std::optional<std::uint64_t> seed;

  bool empty() const noexcept { return best_input.empty(); }
};

struct GridOptions {
  bool refine = false;
  // One level of local refinement: each axis of the cell pair around the
  // best coarse point is resampled refine_factor times finer.
  std::size_t refine_factor = 10;
  // 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

// Supremum of objective over the feasible points of a tensor grid. The
// objective and predicate are called concurrently and must be pure. Ties
// resolve to the lexicographically smallest grid point, so the report does
// not depend on the thread count.
SupremumReport sup_constrained_grid(const Objective& objective, const std::vector<Axis>& box,
                                    const Predicate& feasible, const GridOptions& options = {});

// Supremum over uniformly drawn points (log-uniform on log axes). Only the
// axis bounds and spacing are used; counts are ignored.
SupremumReport sup_random(const Objective& objective, const std::vector<Axis>& box,
                          const Predicate& feasible, std::size_t samples, std::uint64_t seed);

}  // namespace otto::oracle
