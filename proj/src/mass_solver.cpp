#include "trapcc/mass_solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trapcc/errors.hpp"

namespace trapcc::masses {

SignTriple sign_functions(const geometry::DistanceCubes& cubes, double alpha) {
  const double a = cubes.a;
  const double b = cubes.b;
  // a + b - 2ab and a + b - 2ab + alpha (a - b), regrouped around b - 1 so
  // that no O(1) terms cancel where a is small and b is close to 1.
  const double spread = b - a;
  const double lift = 2.0 * a * (b - 1.0);
  return {spread - lift, -spread, (1.0 - alpha) * spread - lift};
}

namespace {

bool is_degenerate(const SignTriple& signs, const geometry::DistanceCubes& c,
                   double tolerance) {
  return std::abs(signs.f3) < tolerance * (c.a + c.b);
}

}  // namespace

MassSolution solve_masses(const geometry::TrapezoidParams& params,
                          double tolerance) {
  const auto cubes = geometry::compute_distance_cubes(params);
  const auto signs = sign_functions(cubes, params.alpha());
  if (is_degenerate(signs, cubes, tolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << "f3 = " << signs.f3 << " vanishes at alpha = " << params.alpha()
       << ", beta = " << params.beta() << "; masses are unbounded";
    throw DegenerateConfiguration(os.str(), signs.f3);
  }
  const double a = cubes.a;
  const double b = cubes.b;
  const double scale = a * b / ((a + b) * signs.f3);
  return {scale * signs.f1, scale * params.alpha() * signs.f2, 1.0, signs,
          cubes};
}

LinearMasses solve_masses_linear(const geometry::TrapezoidParams& params,
                                 double tolerance) {
  const auto cubes = geometry::compute_distance_cubes(params);
  // Extended precision: the small mass is a difference of nearly equal
  // coefficients when the other one dominates.
  using real = long double;
  const real a = cubes.a;
  const real b = cubes.b;
  const real alpha = params.alpha();
  constexpr real lambda = 1.0L;

  // [ c11 c12 ] [m]   [lambda]
  // [ c21 c22 ] [M] = [lambda]
  const real c11 = -(alpha - 1.0L) / a + (alpha + 1.0L) / b;
  const real c12 = 2.0L;
  const real c21 = 1.0L / a + 1.0L / b;
  const real c22 = c21;

  const real det = c11 * c22 - c12 * c21;
  if (std::abs(det) < tolerance * c21 * c21) {
    throw SingularSystem("reduced CC system is singular", static_cast<double>(det));
  }
  return {static_cast<double>((lambda * c22 - c12 * lambda) / det),
          static_cast<double>((c11 * lambda - c21 * lambda) / det)};
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::both_positive:
      return "BothPositive";
    case RegionLabel::lower_only:
      return "OnlyMLowerPositive";
    case RegionLabel::upper_only:
      return "OnlyMUpperPositive";
    case RegionLabel::none_positive:
      return "NonePositive";
    case RegionLabel::degenerate:
      return "Degenerate";
  }
  return "Unknown";
}

RegionLabel label_from_masses(double m, double M) {
  if (m > 0.0 && M > 0.0) return RegionLabel::both_positive;
  if (M > 0.0) return RegionLabel::lower_only;
  if (m > 0.0) return RegionLabel::upper_only;
  return RegionLabel::none_positive;
}

RegionLabel label_from_signs(const SignTriple& signs) {
  // m > 0 iff f1 and f3 share a strict sign; M > 0 iff f3 < 0 (f2 < 0).
  const bool upper = (signs.f1 > 0.0 && signs.f3 > 0.0) ||
                     (signs.f1 < 0.0 && signs.f3 < 0.0);
  const bool lower = signs.f2 < 0.0 ? signs.f3 < 0.0
                                    : (signs.f2 > 0.0 && signs.f3 > 0.0);
  if (upper && lower) return RegionLabel::both_positive;
  if (lower) return RegionLabel::lower_only;
  if (upper) return RegionLabel::upper_only;
  return RegionLabel::none_positive;
}

RegionLabel classify(const geometry::TrapezoidParams& params,
                     double tolerance) {
  MassSolution solution;
  try {
    solution = solve_masses(params, tolerance);
  } catch (const DegenerateConfiguration&) {
    return RegionLabel::degenerate;
  }
  const auto label = label_from_masses(solution.m, solution.M);
  if (label != label_from_signs(solution.signs)) {
    throw std::logic_error("mass-sign and f-sign classifications disagree");
  }
  return label;
}

}  // namespace trapcc::masses
