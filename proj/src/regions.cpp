#include "trapcc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace trapcc::regions {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

std::string describe(std::string_view what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " = " << value;
  return os.str();
}

}  // namespace

ApproxCoefficients approx_coefficients(double beta) {
  const double b2 = beta * beta;
  const double b4 = b2 * b2;
  const double b6 = b4 * b2;
  const double s = std::sqrt(b2 + 0.25);
  const double h0 = -2.0 * b6 - 1.5 * b4 + 2.0 * s * s * s - 0.38 * b2 - 0.03;
  const double h1 = -1.5 * b4 - 0.75 * b2 / s + 0.1;
  const double h2 = (-0.375 * b6 - 0.09 * b4 + (-0.19 * s - 0.023) * b2 -
                     0.031 * s + 0.047 * b4 / s - 0.006) /
                    ((b2 + 0.25) * (b2 + 0.25));
  return {h0, h1, h2};
}

double f1_approx(double alpha, double beta) {
  const double b2 = beta * beta;
  const double b4 = b2 * b2;
  const double b6 = b4 * b2;
  const double s = std::sqrt(b2 + 0.25);
  const double quadratic = -1.5 * b4 + 0.75 * b2 / s + 0.375 / s + 0.09375;
  const double constant = -2.0 * b6 - 1.5 * b4 + 2.0 * s * b2 - 0.375 * b2 +
                          0.5 * s - 0.03125;
  return alpha * alpha * quadratic + constant;
}

double f3_approx(double alpha, double beta) {
  const auto [h0, h1, h2] = approx_coefficients(beta);
  const double a2 = alpha * alpha;
  return (h2 * a2 + h1) * a2 + h0;
}

std::string_view to_string(DomainErrorKind kind) {
  switch (kind) {
    case DomainErrorKind::negative_radicand:
      return "NegativeRadicand";
    case DomainErrorKind::negative_discriminant:
      return "NegativeDiscriminant";
    case DomainErrorKind::vanishing_leading_coefficient:
      return "VanishingLeadingCoefficient";
  }
  return "Unknown";
}

NegativeRadicand::NegativeRadicand(std::string where, double value)
    : Error(describe("negative " + where + " radicand", value)),
      where_(std::move(where)),
      value_(value) {}

NegativeDiscriminant::NegativeDiscriminant(double value)
    : Error(describe("negative discriminant h1^2 - 4 h0 h2", value)),
      value_(value) {}

PublishedValue evaluate_g1_published(double beta) {
  const double b2 = beta * beta;
  const double b4 = b2 * b2;
  const double b6 = b4 * b2;
  const double s = std::sqrt(b2 + 0.25);
  const double numerator =
      -2.0 * b6 - 1.5 * b4 + 2.0 * s * s * s - 0.375 * b2 - 0.03125;
  const double denominator =
      1.5 * b4 + (-0.75 * b2 - 0.375) / s - 0.09375;
  if (numerator < 0.0) {
    return FormulaDomainError{DomainErrorKind::negative_radicand, "numerator",
                              numerator};
  }
  if (denominator <= 0.0) {
    return FormulaDomainError{DomainErrorKind::negative_radicand,
                              "denominator", denominator};
  }
  return std::sqrt(numerator) / std::sqrt(denominator);
}

PublishedValue evaluate_g3_published(double beta) {
  const auto [h0, h1, h2] = approx_coefficients(beta);
  if (h2 == 0.0) {
    return FormulaDomainError{DomainErrorKind::vanishing_leading_coefficient,
                              "h2", h2};
  }
  const double discriminant = h1 * h1 - 4.0 * h0 * h2;
  if (discriminant < 0.0) {
    return FormulaDomainError{DomainErrorKind::negative_discriminant,
                              "discriminant", discriminant};
  }
  const double outer =
      -std::sqrt(discriminant) / (2.0 * h2) - h1 / (2.0 * h2);
  if (outer < 0.0) {
    return FormulaDomainError{DomainErrorKind::negative_radicand, "outer",
                              outer};
  }
  return std::sqrt(outer);
}

namespace {

double unwrap(const PublishedValue& value) {
  if (const double* alpha = std::get_if<double>(&value)) return *alpha;
  const auto& error = std::get<FormulaDomainError>(value);
  if (error.kind == DomainErrorKind::negative_discriminant) {
    throw NegativeDiscriminant(error.value);
  }
  if (error.kind == DomainErrorKind::negative_radicand) {
    throw NegativeRadicand(error.where, error.value);
  }
  throw Error(describe("vanishing leading coefficient h2", error.value));
}

void check_open_unit(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidParameter("published boundaries are stated for 0 < beta < 1");
  }
}

template <typename Defined>
std::vector<Interval> defined_intervals(Defined defined, std::size_t samples) {
  auto refine = [&](double inside, double outside) {
    for (int i = 0; i < 60 && std::abs(inside - outside) > 1e-12; ++i) {
      const double mid = 0.5 * (inside + outside);
      (defined(mid) ? inside : outside) = mid;
    }
    return inside;
  };
  std::vector<Interval> result;
  const auto beta_at = [&](std::size_t i) {
    return (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
  };
  bool open = false;
  double start = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const bool here = defined(beta_at(i));
    if (here && !open) {
      start = i == 0 ? 0.0 : refine(beta_at(i), beta_at(i - 1));
      open = true;
    } else if (!here && open) {
      result.push_back({start, refine(beta_at(i - 1), beta_at(i))});
      open = false;
    }
  }
  if (open) result.push_back({start, 1.0});
  return result;
}

}  // namespace

double g1_published(double beta) {
  check_open_unit(beta);
  return unwrap(evaluate_g1_published(beta));
}

double g3_published(double beta) {
  check_open_unit(beta);
  return unwrap(evaluate_g3_published(beta));
}

PublishedDomainAudit audit_published_formulas(std::size_t samples) {
  if (samples == 0) throw InvalidParameter("audit needs at least one sample");
  auto real = [](auto evaluate) {
    return [evaluate](double beta) {
      return std::holds_alternative<double>(evaluate(beta));
    };
  };
  return {samples, defined_intervals(real(evaluate_g1_published), samples),
          defined_intervals(real(evaluate_g3_published), samples)};
}

std::string_view to_string(SignFunction which) {
  return which == SignFunction::f1 ? "f1" : "f3";
}

std::string_view to_string(Axis axis) {
  return axis == Axis::alpha ? "alpha" : "beta";
}

double exact_sign_function(SignFunction which, double alpha, double beta) {
  const auto cubes = geometry::distance_cubes_unchecked(alpha, beta);
  const auto signs = masses::sign_functions(cubes, alpha);
  return which == SignFunction::f1 ? signs.f1 : signs.f3;
}

BoundaryResult exact_boundary(SignFunction which, Axis fixed_axis,
                              double fixed_value, double lo, double hi,
                              double tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidParameter("search interval must satisfy lo < hi");
  }
  if (!std::isfinite(fixed_value) || !(tol > 0.0)) {
    throw InvalidParameter("fixed value must be finite and tol positive");
  }
  if (fixed_axis == Axis::alpha) {
    if (fixed_value < 0.0 || fixed_value > 1.0 || lo < 0.0) {
      throw InvalidParameter("need alpha in [0, 1] and beta >= 0");
    }
  } else if (fixed_value < 0.0 || lo < 0.0 || hi > 1.0) {
    throw InvalidParameter("need beta >= 0 and an alpha interval in [0, 1]");
  }

  auto f = [&](double x) {
    return fixed_axis == Axis::alpha
               ? exact_sign_function(which, fixed_value, x)
               : exact_sign_function(which, x, fixed_value);
  };
  BoundaryResult result{false, kNaN, kNaN, f(lo), f(hi), 0};
  if (result.f_lo == 0.0 || result.f_hi == 0.0) {
    result.found = true;
    result.root = result.f_lo == 0.0 ? lo : hi;
    result.f_root = 0.0;
    return result;
  }
  if (sign_of(result.f_lo) == sign_of(result.f_hi)) return result;

  double left = lo;
  double right = hi;
  double f_left = result.f_lo;
  while (right - left > tol && result.iterations < 200) {
    const double mid = 0.5 * (left + right);
    const double f_mid = f(mid);
    ++result.iterations;
    if (f_mid == 0.0) {
      left = right = mid;
      break;
    }
    if (sign_of(f_mid) == sign_of(f_left)) {
      left = mid;
      f_left = f_mid;
    } else {
      right = mid;
    }
  }
  result.found = true;
  result.root = 0.5 * (left + right);
  result.f_root = f(result.root);
  return result;
}

int sign_changes_along_beta(SignFunction which, double alpha, double lo,
                            double hi, std::size_t samples) {
  if (samples == 0 || !(lo < hi)) {
    throw InvalidParameter("need samples > 0 and lo < hi");
  }
  int changes = 0;
  int previous = 0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const double beta =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples);
    const int s = sign_of(exact_sign_function(which, alpha, beta));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

std::vector<int> RasterGrid::f1_sign() const {
  std::vector<int> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) out.push_back(sign_of(cell.f1));
  return out;
}

std::vector<int> RasterGrid::f3_sign() const {
  std::vector<int> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) out.push_back(sign_of(cell.f3));
  return out;
}

std::vector<RegionLabel> RasterGrid::labels() const {
  std::vector<RegionLabel> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) out.push_back(cell.label);
  return out;
}

std::vector<double> cell_centers(Range range, std::size_t n) {
  if (n == 0) throw InvalidParameter("resolution must be positive");
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) ||
      range.lo > range.hi || (range.lo == range.hi && n != 1)) {
    throw InvalidParameter("range must satisfy lo < hi (or lo == hi with resolution 1)");
  }
  std::vector<double> centers(n);
  const double step = (range.hi - range.lo) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    centers[i] = range.lo + (static_cast<double>(i) + 0.5) * step;
  }
  return centers;
}

unsigned default_worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TRAPCC_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) {
      workers = std::min(workers, static_cast<unsigned>(cap));
    }
  }
  return workers;
}

RasterGrid raster(Range alpha_range, Range beta_range, std::size_t n_alpha,
                  std::size_t n_beta, unsigned workers, double beta_max) {
  RasterGrid grid;
  grid.alpha_axis = cell_centers(alpha_range, n_alpha);
  grid.beta_axis = cell_centers(beta_range, n_beta);
  // Validates every sample against the parameter domain up front.
  for (double alpha : grid.alpha_axis) {
    geometry::TrapezoidParams(alpha, grid.beta_axis.front(), beta_max);
  }
  for (double beta : grid.beta_axis) {
    geometry::TrapezoidParams(grid.alpha_axis.front(), beta, beta_max);
  }
  grid.cells.resize(n_alpha * n_beta);

  auto fill_row = [&](std::size_t row) {
    const double beta = grid.beta_axis[row];
    for (std::size_t col = 0; col < n_alpha; ++col) {
      const double alpha = grid.alpha_axis[col];
      const geometry::TrapezoidParams params(alpha, beta, beta_max);
      RasterCell cell{alpha, beta, kNaN, kNaN, kNaN, kNaN,
                      masses::classify(params)};
      const auto signs = masses::sign_functions(
          geometry::compute_distance_cubes(params), alpha);
      cell.f1 = signs.f1;
      cell.f3 = signs.f3;
      if (cell.label != RegionLabel::degenerate) {
        const auto solution = masses::solve_masses(params);
        cell.m = solution.m;
        cell.M = solution.M;
      }
      grid.cells[row * n_alpha + col] = cell;
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, n_beta));
  if (workers == 1) {
    for (std::size_t row = 0; row < n_beta; ++row) fill_row(row);
    return grid;
  }
  // Rows are striped across workers; every cell has a fixed slot, so the
  // result does not depend on scheduling.
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t row = w; row < n_beta; row += workers) fill_row(row);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return grid;
}

ApproxReport compare_exact_vs_approx(const RasterGrid& grid) {
  auto summarize = [&](auto exact_of, auto approx_of) {
    ApproxFunctionReport report{0.0, 0.0, 0.0, {}};
    std::size_t agree = 0;
    double total = 0.0;
    for (const auto& cell : grid.cells) {
      const double exact = exact_of(cell);
      const double approx = approx_of(cell);
      const double deviation = std::abs(approx - exact);
      report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
      total += deviation;
      if (sign_of(exact) == sign_of(approx)) {
        ++agree;
      } else {
        report.disagreements.push_back({cell.alpha, cell.beta, exact, approx});
      }
    }
    if (!grid.cells.empty()) {
      const auto n = static_cast<double>(grid.cells.size());
      report.sign_agreement = static_cast<double>(agree) / n;
      report.mean_abs_deviation = total / n;
    }
    return report;
  };
  return {grid.cells.size(),
          summarize([](const RasterCell& c) { return c.f1; },
                    [](const RasterCell& c) { return f1_approx(c.alpha, c.beta); }),
          summarize([](const RasterCell& c) { return c.f3; },
                    [](const RasterCell& c) { return f3_approx(c.alpha, c.beta); })};
}

}  // namespace trapcc::regions
