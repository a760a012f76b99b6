#pragma once

#include <string_view>
#include <utility>

#include "trapcc/geometry.hpp"

namespace trapcc::masses {

// |f3| < kDegeneracyTolerance * (a + b) marks the singular curve f3 = 0.
inline constexpr double kDegeneracyTolerance = 1e-12;

// f1 = a + b - 2ab, f2 = a - b, f3 = f1 + alpha * f2.
struct SignTriple {
  double f1;
  double f2;
  double f3;
};

SignTriple sign_functions(const geometry::DistanceCubes& cubes, double alpha);

struct MassSolution {
  double m;  // bodies 2 and 3 (upper pair)
  double M;  // bodies 1 and 4 (lower pair)
  // Multiplier the closed forms correspond to; identically 1.
  double lambda;
  SignTriple signs;
  geometry::DistanceCubes cubes;
};

// Closed-form masses
//   m = ab f1 / ((a+b) f3),  M = ab alpha f2 / ((a+b) f3).
// Negative masses are returned as-is. Throws DegenerateConfiguration when
// |f3| is below tolerance.
MassSolution solve_masses(const geometry::TrapezoidParams& params,
                          double tolerance = kDegeneracyTolerance);

struct LinearMasses {
  double m;
  double M;
};

// Solves the two reduced CC equations
//   2M - m(alpha-1)/a + m(alpha+1)/b = 1
//   (m + M)(1/a + 1/b)               = 1
// as a 2x2 linear system, without the closed forms. Throws SingularSystem
// when |det| < tolerance * (1/a + 1/b)^2, which is the same set as the
// DegenerateConfiguration test of solve_masses.
LinearMasses solve_masses_linear(const geometry::TrapezoidParams& params,
                                 double tolerance = kDegeneracyTolerance);

enum class RegionLabel {
  both_positive,
  lower_only,  // M > 0, m <= 0
  upper_only,  // m > 0, M <= 0
  none_positive,
  degenerate,
};

std::string_view to_string(RegionLabel label);

RegionLabel label_from_masses(double m, double M);

// Label predicted by the signs of f1 and f3 alone, using f2 < 0.
RegionLabel label_from_signs(const SignTriple& signs);

// Labels a point from the signs of its closed-form masses. Throws
// std::logic_error if that disagrees with the f-sign prediction.
RegionLabel classify(const geometry::TrapezoidParams& params,
                     double tolerance = kDegeneracyTolerance);

}  // namespace trapcc::masses
