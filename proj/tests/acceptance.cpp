// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria, exit 1 if any fails
//   acceptance --only N   run criterion N alone

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "trapcc/cc_oracle.hpp"
#include "trapcc/dynamics.hpp"
#include "trapcc/errors.hpp"
#include "trapcc/mass_solver.hpp"
#include "trapcc/regions.hpp"

namespace {

using namespace trapcc;
using geometry::TrapezoidParams;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... values) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, values...);
  return buffer;
}

double relative_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

bool degenerate(const TrapezoidParams& p) {
  const auto c = geometry::compute_distance_cubes(p);
  return std::abs(masses::sign_functions(c, p.alpha()).f3) <
         masses::kDegeneracyTolerance * (c.a + c.b);
}

// 100 x 100 over (0, 1] x (0, 2].
void for_each_grid_point(const std::function<void(const TrapezoidParams&)>& visit) {
  for (int i = 1; i <= 100; ++i) {
    for (int j = 1; j <= 100; ++j) {
      const TrapezoidParams p(i / 100.0, j / 50.0);
      if (!degenerate(p)) visit(p);
    }
  }
}

oracle::PlanarSystem trapezoid_system(const TrapezoidParams& p, double m, double M) {
  const auto config =
      geometry::build_configuration(p, m, M, geometry::MassCheck::relaxed);
  const auto& r = config.positions;
  return oracle::PlanarSystem({{M, r[0]}, {m, r[1]}, {m, r[2]}, {M, r[3]}});
}

Outcome closed_form_vs_linear() {
  double worst = 0.0;
  int points = 0;
  for_each_grid_point([&](const TrapezoidParams& p) {
    const auto s = masses::solve_masses(p);
    const auto lin = masses::solve_masses_linear(p);
    worst = std::max({worst, relative_gap(s.m, lin.m), relative_gap(s.M, lin.M)});
    ++points;
  });
  return {worst <= 1e-12, fmt("%d points, max relative gap %.3e (tol 1e-12)", points, worst)};
}

Outcome cc_equations_hold() {
  double worst = 0.0;
  double worst_alpha = 0.0, worst_beta = 0.0;
  int points = 0, failing = 0;
  for_each_grid_point([&](const TrapezoidParams& p) {
    const auto s = masses::solve_masses(p);
    const auto report = oracle::cc_residual(trapezoid_system(p, s.m, s.M), 1.0);
    ++points;
    if (report.relative_residual > 1e-10) ++failing;
    if (report.relative_residual > worst) {
      worst = report.relative_residual;
      worst_alpha = p.alpha();
      worst_beta = p.beta();
    }
  });
  return {failing == 0,
          fmt("%d/%d points above 1e-10; worst relative residual %.3e at "
              "(%.2f, %.2f)",
              failing, points, worst, worst_alpha, worst_beta)};
}

// Deviations relative to the summed magnitudes of each equation's terms.
Outcome normalization_identities() {
  double worst = 0.0, worst_plain = 0.0;
  int points = 0;
  for_each_grid_point([&](const TrapezoidParams& p) {
    const auto s = masses::solve_masses(p);
    const auto [a, b] = s.cubes;
    const double alpha = p.alpha();
    const double pair_sum = (s.m + s.M) * (1.0 / a + 1.0 / b);
    const double pair_scale = (std::abs(s.m) + std::abs(s.M)) * (1.0 / a + 1.0 / b);
    const double t1 = 2.0 * s.M;
    const double t2 = -s.m * (alpha - 1.0) / a;
    const double t3 = s.m * (alpha + 1.0) / b;
    const double bottom = t1 + t2 + t3;
    const double bottom_scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
    worst = std::max({worst, std::abs(pair_sum - 1.0) / pair_scale,
                      std::abs(bottom - 1.0) / bottom_scale});
    worst_plain =
        std::max({worst_plain, std::abs(pair_sum - 1.0), std::abs(bottom - 1.0)});
    ++points;
  });
  return {worst <= 1e-12,
          fmt("%d points, max relative deviation %.3e (tol 1e-12), max plain "
              "deviation %.3e",
              points, worst, worst_plain)};
}

Outcome known_points() {
  const auto mid = masses::solve_masses_linear({0.5, 1.0});
  const bool mid_ok = masses::classify({0.5, 1.0}) == masses::RegionLabel::both_positive &&
                      std::abs(mid.m - 0.5202495) <= 1e-6 &&
                      std::abs(mid.M - 0.1814672) <= 1e-6;
  const auto low = masses::solve_masses({0.5, 0.5});
  const bool low_ok = low.M < 0.0;
  const auto square = masses::solve_masses({1.0, 1.0});
  const double reference = static_cast<double>(testing::square_mass());
  const bool square_ok = std::abs(square.m - reference) <= 1e-9 &&
                         std::abs(square.M - reference) <= 1e-9;
  return {mid_ok && low_ok && square_ok,
          fmt("(0.5,1): m=%.9f M=%.9f; (0.5,0.5): M=%.6f; (1,1): m=%.9f M=%.9f ref %.9f",
              mid.m, mid.M, low.M, square.m, square.M, reference)};
}

Outcome region_set_identity() {
  const auto grid = regions::raster({0.0, 1.0}, {0.0, 1.0}, 400, 400,
                                    regions::default_worker_count());
  std::size_t region_mismatch = 0, m_mismatch = 0, degenerate_cells = 0;
  for (const auto& c : grid.cells) {
    if (c.label == masses::RegionLabel::degenerate) {
      ++degenerate_cells;
      continue;
    }
    const bool in_region = c.label == masses::RegionLabel::both_positive;
    if (in_region != (c.f1 < 0.0 && c.f3 < 0.0)) ++region_mismatch;
    if ((c.m > 0.0) != (c.f1 * c.f3 > 0.0)) ++m_mismatch;
  }
  return {region_mismatch == 0 && m_mismatch == 0,
          fmt("%zu cells, %zu region mismatches, %zu m-sign mismatches, %zu degenerate",
              grid.cells.size(), region_mismatch, m_mismatch, degenerate_cells)};
}

Outcome f2_negative() {
  std::size_t samples = 0, violations = 0;
  double largest = -HUGE_VAL;
  for (int i = 1; i <= 400; ++i) {
    for (int j = 1; j <= 400; ++j) {
      const double alpha = i / 400.0;
      const auto c = geometry::compute_distance_cubes({alpha, j / 200.0});
      const double f2 = masses::sign_functions(c, alpha).f2;
      largest = std::max(largest, f2);
      if (!(f2 < 0.0)) ++violations;
      ++samples;
    }
  }
  return {violations == 0,
          fmt("%zu samples, %zu non-negative, max f2 %.3e", samples, violations, largest)};
}

Outcome exact_f1_boundary() {
  const auto r = regions::exact_boundary(regions::SignFunction::f1,
                                         regions::Axis::alpha, 0.5, 0.5, 1.0);
  const bool pass = r.found && std::abs(r.f_root) <= 1e-10 && r.root >= 0.86 &&
                    r.root <= 0.88 && r.f_lo * r.f_hi < 0.0;
  return {pass, fmt("beta* = %.14f, f1 = %.3e, %d iterations", r.root, r.f_root,
                    r.iterations)};
}

Outcome published_audit() {
  bool raised = false;
  double radicand = 0.0;
  try {
    regions::g1_published(0.5);
  } catch (const regions::NegativeRadicand& e) {
    raised = true;
    radicand = e.value();
  }
  const auto audit = regions::audit_published_formulas();
  std::ostringstream list;
  auto describe = [&](const char* name, const std::vector<regions::Interval>& v) {
    list << name << " real on";
    if (v.empty()) list << " nothing";
    for (const auto& i : v) list << fmt(" [%.6f, %.6f]", i.lo, i.hi);
  };
  describe("g1", audit.g1_defined);
  list << "; ";
  describe("g3", audit.g3_defined);
  return {raised, fmt("g1(0.5) radicand %.6f; ", radicand) + list.str()};
}

Outcome dynamical_rigidity() {
  const auto initial = dynamics::init_relative_equilibrium({0.5, 1.0});
  const auto trajectory = dynamics::integrate(initial, 1e-3, 2.0 * std::numbers::pi);
  const auto r = dynamics::rigidity_metrics(trajectory);
  const bool pass = !trajectory.collided && r.max_distance_deviation <= 1e-5 &&
                    r.final_displacement <= 1e-5 && r.max_energy_drift <= 1e-8 &&
                    r.max_angular_momentum_drift <= 1e-8;
  return {pass, fmt("distance dev %.3e, displacement %.3e, energy drift %.3e, "
                    "angular momentum drift %.3e",
                    r.max_distance_deviation, r.final_displacement, r.max_energy_drift,
                    r.max_angular_momentum_drift)};
}

Outcome negative_control() {
  const TrapezoidParams p(0.5, 1.0);
  const auto s = masses::solve_masses(p);
  const double m = 1.1 * s.m;
  const auto report = oracle::cc_residual(trapezoid_system(p, m, s.M), 1.0);

  auto initial = dynamics::init_relative_equilibrium(p);
  initial.masses[1] = m;
  initial.masses[2] = m;
  const auto r = dynamics::rigidity_metrics(
      dynamics::integrate(initial, 1e-3, 2.0 * std::numbers::pi));
  return {report.relative_residual > 1e-3 && r.max_distance_deviation > 1e-3,
          fmt("relative residual %.3e, distance deviation %.3e (both must exceed 1e-3)",
              report.relative_residual, r.max_distance_deviation)};
}

struct Criterion {
  const char* name;
  Outcome (*check)();
};

const Criterion kCriteria[] = {
    {"closed form matches linear solve", closed_form_vs_linear},
    {"solved masses satisfy the CC equations", cc_equations_hold},
    {"normalization identities", normalization_identities},
    {"known-point masses and labels", known_points},
    {"region sets match sign sets", region_set_identity},
    {"f2 negative", f2_negative},
    {"exact f1 boundary at alpha = 0.5", exact_f1_boundary},
    {"published formula audit", published_audit},
    {"relative equilibrium stays rigid", dynamical_rigidity},
    {"perturbed masses negative control", negative_control},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) {
    only = std::atoi(argv[2]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "criterion must be 1..10\n");
      return 64;
    }
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--only N]\n");
    return 64;
  }

  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = kCriteria[k - 1].check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] C%d %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", k,
                kCriteria[k - 1].name, outcome.detail.c_str(), seconds);
    if (!outcome.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
