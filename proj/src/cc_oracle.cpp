#include "trapcc/cc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trapcc/errors.hpp"

namespace trapcc::oracle {

using geometry::dot;
using geometry::norm;

PlanarSystem::PlanarSystem(std::vector<Body> bodies)
    : bodies_(std::move(bodies)), total_mass_(0.0) {
  if (bodies_.size() < 2) {
    throw InvalidParameter("a planar system needs at least two bodies");
  }
  for (const auto& body : bodies_) {
    if (!std::isfinite(body.mass) || !std::isfinite(body.position.x) ||
        !std::isfinite(body.position.y)) {
      throw InvalidParameter("body data must be finite");
    }
    total_mass_ += body.mass;
  }
  if (total_mass_ == 0.0) {
    throw ZeroTotalMass("total mass vanishes");
  }
  for (std::size_t i = 0; i < bodies_.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies_.size(); ++j) {
      if (norm(bodies_[i].position - bodies_[j].position) <= kMinSeparation) {
        throw CoincidentBodies("bodies " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " coincide");
      }
    }
  }
}

PlanarSystem PlanarSystem::translated(PlanarPoint offset) const {
  auto moved = bodies_;
  for (auto& body : moved) body.position = body.position + offset;
  return PlanarSystem(std::move(moved));
}

PlanarSystem PlanarSystem::scaled(double factor) const {
  auto moved = bodies_;
  for (auto& body : moved) body.position = factor * body.position;
  return PlanarSystem(std::move(moved));
}

PlanarPoint center_of_mass(const PlanarSystem& system) {
  PlanarPoint weighted;
  for (const auto& body : system.bodies()) {
    weighted = weighted + body.mass * body.position;
  }
  return (1.0 / system.total_mass()) * weighted;
}

PotentialAndMoment potential_and_moment(const PlanarSystem& system) {
  const auto bodies = system.bodies();
  double U = 0.0;
  double I = 0.0;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    I += bodies[i].mass * dot(bodies[i].position, bodies[i].position);
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      U += bodies[i].mass * bodies[j].mass /
           norm(bodies[i].position - bodies[j].position);
    }
  }
  return {U, 0.5 * I};
}

std::vector<PlanarPoint> attractions(const PlanarSystem& system) {
  const auto bodies = system.bodies();
  std::vector<PlanarPoint> result(bodies.size());
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    for (std::size_t j = 0; j < bodies.size(); ++j) {
      if (j == k) continue;
      const PlanarPoint d = bodies[j].position - bodies[k].position;
      const double r = norm(d);
      result[k] = result[k] + (bodies[j].mass / (r * r * r)) * d;
    }
  }
  return result;
}

ResidualReport cc_residual(const PlanarSystem& system, double lambda) {
  const auto bodies = system.bodies();
  const PlanarPoint com = center_of_mass(system);
  const auto pull = attractions(system);
  const auto centered = system.translated(-1.0 * com);
  const auto [U, I] = potential_and_moment(centered);

  ResidualReport report;
  report.com = com;
  report.lambda = lambda;
  report.U = U;
  report.I = I;
  report.lambda_energy = U / (2.0 * I);
  report.max_residual = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    const PlanarPoint offset = bodies[k].position - com;
    const double offset2 = dot(offset, offset);
    report.lambda_per_body.push_back(
        offset2 > 0.0 ? -dot(pull[k], offset) / offset2
                      : std::numeric_limits<double>::quiet_NaN());
    const PlanarPoint defect = pull[k] + lambda * offset;
    report.defects.push_back(defect);
    report.max_residual = std::max(report.max_residual, norm(defect));
    scale += norm(pull[k]);
  }
  report.attraction_scale = scale / static_cast<double>(bodies.size());
  report.relative_residual = report.attraction_scale > 0.0
                                 ? report.max_residual / report.attraction_scale
                                 : report.max_residual;
  return report;
}

CentralConfigurationCheck is_central_configuration(const PlanarSystem& system,
                                                   double tol) {
  const PlanarPoint com = center_of_mass(system);
  const auto centered = system.translated(-1.0 * com);
  const auto [U, I] = potential_and_moment(centered);
  auto report = cc_residual(centered, U / (2.0 * I));
  report.com = com;
  const bool ok = report.relative_residual <= tol;
  return {ok, std::move(report)};
}

}  // namespace trapcc::oracle
