#include "otto/oracle.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

namespace otto::oracle {

std::string_view to_string(SearchMethod method) noexcept {
  switch (method) {
    case SearchMethod::GoldenSection:
      return "golden-section";
    case SearchMethod::Bisection:
      return "bisection";
    case SearchMethod::Grid:
      return "grid";
    case SearchMethod::GridRefine:
      return "grid+refine";
    case SearchMethod::Random:
      break;
  }
  return "random";
}

std::size_t golden_section_iterations(double width, double tolerance) {
  if (!(width > 0.0) || !(tolerance > 0.0)) throw DomainError("width and tolerance must be positive");
  if (width <= tolerance) return 0;
  const double shrink = 2.0 / (std::sqrt(5.0) - 1.0);
  return static_cast<std::size_t>(std::ceil(std::log(width / tolerance) / std::log(shrink)));
}

double Axis::at(std::size_t i) const noexcept {
  if (count <= 1 || i == 0) return lower;
  if (i + 1 >= count) return upper;
  const double steps = static_cast<double>(count - 1);
  if (spacing == AxisSpacing::Log) {
    const double lo = std::log(lower);
    const double hi = std::log(upper);
    return std::exp(lo + (hi - lo) * static_cast<double>(i) / steps);
  }
  return lower + (upper - lower) * static_cast<double>(i) / steps;
}

namespace {

void validate_box(const std::vector<Axis>& box, bool need_counts) {
  if (box.empty() || box.size() > 5) throw DomainError("box must have between 1 and 5 axes");
  for (const Axis& axis : box) {
    if (!(axis.lower < axis.upper)) throw DomainError("axis bounds must satisfy lower < upper");
    if (axis.spacing == AxisSpacing::Log && !(axis.lower > 0.0)) {
      throw DomainError("log-spaced axis needs a positive lower bound");
    }
    if (need_counts && axis.count < 2) throw DomainError("grid resolution must be >= 2 per axis");
  }
}

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  bool found = false;
  std::size_t evaluations = 0;
};

void decode(std::size_t flat, const std::vector<Axis>& box, std::vector<std::size_t>& idx) {
  for (std::size_t k = box.size(); k-- > 0;) {
    idx[k] = flat % box[k].count;
    flat /= box[k].count;
  }
}

Best scan(const Objective& objective, const std::vector<Axis>& box, const Predicate& feasible,
          std::size_t begin, std::size_t end) {
  Best best;
  std::vector<std::size_t> idx(box.size());
  std::vector<double> point(box.size());
  for (std::size_t flat = begin; flat < end; ++flat) {
    decode(flat, box, idx);
    for (std::size_t k = 0; k < box.size(); ++k) point[k] = box[k].at(idx[k]);
    if (!feasible(point)) continue;
    const double value = objective(point);
    ++best.evaluations;
    if (std::isnan(value)) throw EvaluationError("objective returned NaN");
    if (!best.found || value > best.value) {
      best.value = value;
      best.index = flat;
      best.found = true;
    }
  }
  return best;
}

struct GridResult {
  Best best;
  std::size_t visited = 0;
};

GridResult run_grid(const Objective& objective, const std::vector<Axis>& box,
                    const Predicate& feasible, std::size_t threads) {
  std::size_t total = 1;
  for (const Axis& axis : box) total *= axis.count;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, total);

  std::vector<Best> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (total + threads - 1) / threads;
  auto work = [&](std::size_t t) {
    try {
      const std::size_t begin = t * chunk;
      partial[t] = scan(objective, box, feasible, begin, std::min(total, begin + chunk));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Chunks are in index order; strict '>' keeps the lowest index on ties.
  GridResult result;
  result.visited = total;
  for (const Best& b : partial) {
    result.best.evaluations += b.evaluations;
    if (b.found && (!result.best.found || b.value > result.best.value)) {
      result.best.value = b.value;
      result.best.index = b.index;
      result.best.found = true;
    }
  }
  return result;
}

std::vector<double> point_of(std::size_t flat, const std::vector<Axis>& box) {
  std::vector<std::size_t> idx(box.size());
  decode(flat, box, idx);
  std::vector<double> point(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) point[k] = box[k].at(idx[k]);
  return point;
}

}  // namespace

SupremumReport sup_constrained_grid(const Objective& objective, const std::vector<Axis>& box,
                                    const Predicate& feasible, const GridOptions& options) {
  validate_box(box, true);
  SupremumReport report;
  report.method = options.refine ? SearchMethod::GridRefine : SearchMethod::Grid;

  const GridResult coarse = run_grid(objective, box, feasible, options.threads);
  report.evaluations = coarse.best.evaluations;
  report.visited = coarse.visited;
  if (!coarse.best.found) return report;

  report.best_value = coarse.best.value;
  report.best_input = point_of(coarse.best.index, box);
  if (!options.refine || options.refine_factor < 2) return report;

  std::vector<std::size_t> idx(box.size());
  decode(coarse.best.index, box, idx);
  std::vector<Axis> local(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) {
    const std::size_t lo = idx[k] == 0 ? 0 : idx[k] - 1;
    const std::size_t hi = std::min(idx[k] + 1, box[k].count - 1);
    local[k].lower = box[k].at(lo);
    local[k].upper = box[k].at(hi);
    local[k].count = (hi - lo) * options.refine_factor + 1;
    local[k].spacing = box[k].spacing;
  }
  const GridResult fine = run_grid(objective, local, feasible, options.threads);
  report.evaluations += fine.best.evaluations;
  report.visited += fine.visited;
  if (fine.best.found && fine.best.value > report.best_value) {
    report.best_value = fine.best.value;
    report.best_input = point_of(fine.best.index, local);
  }
  return report;
}

SupremumReport sup_random(const Objective& objective, const std::vector<Axis>& box,
                          const Predicate& feasible, std::size_t samples, std::uint64_t seed) {
  validate_box(box, false);
  SupremumReport report;
  report.method = SearchMethod::Random;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::vector<double> point(box.size());
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < box.size(); ++k) {
      const Axis& axis = box[k];
      const double u = std::generate_canonical<double, 53>(rng);
      if (axis.spacing == AxisSpacing::Log) {
        const double lo = std::log(axis.lower);
        const double hi = std::log(axis.upper);
        point[k] = std::exp(lo + (hi - lo) * u);
      } else {
        point[k] = axis.lower + (axis.upper - axis.lower) * u;
      }
    }
    ++report.visited;
    if (!feasible(point)) continue;
    const double value = objective(point);
    ++report.evaluations;
    if (std::isnan(value)) throw EvaluationError("objective returned NaN");
    if (report.best_input.empty() || value > report.best_value) {
      report.best_value = value;
      report.best_input = point;
    }
  }
  return report;
}

}  // namespace otto::oracle
