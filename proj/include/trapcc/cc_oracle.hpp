#pragma once

#include <span>
#include <vector>

#include "trapcc/geometry.hpp"

namespace trapcc::oracle {

using geometry::PlanarPoint;

inline constexpr double kMinSeparation = 1e-9;

struct Body {
  double mass;  // signed; negative masses are allowed
  PlanarPoint position;
};

// A planar point-mass system with G = 1. Construction checks for at least
// two bodies, pairwise separation above kMinSeparation, finite data and a
// nonzero total mass.
class PlanarSystem {
 public:
  explicit PlanarSystem(std::vector<Body> bodies);

  std::span<const Body> bodies() const { return bodies_; }
  std::size_t size() const { return bodies_.size(); }
  double total_mass() const { return total_mass_; }

  PlanarSystem translated(PlanarPoint offset) const;
  PlanarSystem scaled(double factor) const;

 private:
  std::vector<Body> bodies_;
  double total_mass_;
};

PlanarPoint center_of_mass(const PlanarSystem& system);

struct PotentialAndMoment {
  double U;  // sum over pairs of m_i m_j / r_ij
  double I;  // 1/2 sum m_i |r_i|^2 about the origin
};

PotentialAndMoment potential_and_moment(const PlanarSystem& system);

// Gravitational attraction sum_j m_j (r_j - r_k) / |r_j - r_k|^3 per body.
std::vector<PlanarPoint> attractions(const PlanarSystem& system);

struct ResidualReport {
  // Least-squares fit of A_k = -lambda_k (r_k - c); NaN for a body at c.
  std::vector<double> lambda_per_body;
  // U / (2 I) with I taken about the center of mass.
  double lambda_energy;
  double U;
  double I;
  // Defect vectors A_k + lambda (r_k - c) for the lambda under test.
  std::vector<PlanarPoint> defects;
  double max_residual;
  // Mean |A_k|; max_residual / attraction_scale is dimensionless.
  double attraction_scale;
  double relative_residual;
  PlanarPoint com;
  double lambda;  // multiplier the defects were evaluated with
};

ResidualReport cc_residual(const PlanarSystem& system, double lambda);

struct CentralConfigurationCheck {
  bool is_central;
  ResidualReport report;
};

// Recenters on the center of mass, infers lambda = U / (2I) and accepts
// when relative_residual <= tol.
CentralConfigurationCheck is_central_configuration(const PlanarSystem& system,
                                                   double tol);

}  // namespace trapcc::oracle
