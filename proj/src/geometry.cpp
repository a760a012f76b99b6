#include "trapcc/geometry.hpp"

#include <cmath>
#include <sstream>

#include "trapcc/errors.hpp"

namespace trapcc::geometry {

double dot(PlanarPoint p, PlanarPoint q) { return p.x * q.x + p.y * q.y; }

double norm(PlanarPoint p) { return std::hypot(p.x, p.y); }

TrapezoidParams::TrapezoidParams(double alpha, double beta, double beta_max)
    : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidParameter("alpha and beta must be finite");
  }
  if (alpha <= 0.0) {
    throw InvalidParameter("alpha must be positive (alpha = 0 collides bodies 2 and 3)");
  }
  if (alpha > 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha must not exceed 1; the same trapezoid upside down is alpha = "
       << 1.0 / alpha << ", beta = " << beta / alpha;
    throw InvalidParameter(os.str());
  }
  if (beta <= 0.0) {
    throw InvalidParameter("beta must be positive (beta = 0 is collinear)");
  }
  if (beta > beta_max) {
    std::ostringstream os;
    os << "beta must not exceed " << beta_max;
    throw InvalidParameter(os.str());
  }
}

DistanceCubes distance_cubes_unchecked(double alpha, double beta) {
  const double beta2 = beta * beta;
  const double lateral = 0.5 - 0.5 * alpha;
  const double diagonal = 0.5 + 0.5 * alpha;
  const double lateral2 = lateral * lateral + beta2;
  const double diagonal2 = diagonal * diagonal + beta2;
  return {lateral2 * std::sqrt(lateral2), diagonal2 * std::sqrt(diagonal2)};
}

DistanceCubes compute_distance_cubes(const TrapezoidParams& params) {
  return distance_cubes_unchecked(params.alpha(), params.beta());
}

TrapezoidConfiguration build_configuration(const TrapezoidParams& params,
                                           double m, double M,
                                           MassCheck check) {
  if (!std::isfinite(m) || !std::isfinite(M)) {
    throw DegenerateMasses("masses must be finite");
  }
  if (check == MassCheck::strict && (m <= 0.0 || M <= 0.0)) {
    throw DegenerateMasses("masses must be positive");
  }
  if (m + M == 0.0) {
    throw DegenerateMasses("m + M vanishes");
  }
  const double beta = params.beta();
  const double half_top = 0.5 * params.alpha();
  const double r_A = M * beta / (m + M);
  const double r_B = m * beta / (m + M);
  return {{{{-0.5, -r_B}, {-half_top, r_A}, {half_top, r_A}, {0.5, -r_B}}},
          r_A,
          r_B};
}

std::array<PlanarPoint, 4> lemma1_reconstruct(PlanarPoint r, PlanarPoint r41,
                                              double alpha, double m,
                                              double M) {
  if (!(m + M > 0.0)) {
    throw DegenerateMasses("pair decomposition needs m + M > 0");
  }
  const double lower = m / (M + m);
  const double upper = M / (m + M);
  return {-lower * r + 0.5 * r41, upper * r + (0.5 * alpha) * r41,
          upper * r - (0.5 * alpha) * r41, -lower * r - 0.5 * r41};
}

}  // namespace trapcc::geometry
