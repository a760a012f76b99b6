#include "trapcc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "trapcc/errors.hpp"
#include "trapcc/mass_solver.hpp"

namespace trapcc::dynamics {

using geometry::norm;

namespace {

void check_shape(const SystemState& state) {
  if (state.masses.size() != state.bodies.size() || state.bodies.size() < 2) {
    throw InvalidParameter("state needs one mass per body and at least two bodies");
  }
}

double relative_change(double value, double reference) {
  const double scale = std::abs(reference);
  return scale > 0.0 ? std::abs(value - reference) / scale
                     : std::abs(value - reference);
}

// Closest distance to the origin along the segment from p to q.
double segment_clearance(PlanarPoint p, PlanarPoint q) {
  const PlanarPoint d = q - p;
  const double length2 = geometry::dot(d, d);
  const double t =
      length2 > 0.0 ? std::clamp(-geometry::dot(p, d) / length2, 0.0, 1.0) : 0.0;
  return norm(p + t * d);
}

// A fixed step can carry two bodies through each other without either
// endpoint being close, so each pair's relative motion over the step is
// checked as a straight segment.
void check_passage(const SystemState& before, const SystemState& after) {
  const auto n = before.bodies.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PlanarPoint p = before.bodies[j].position - before.bodies[i].position;
      const PlanarPoint q = after.bodies[j].position - after.bodies[i].position;
      if (segment_clearance(p, q) < kCollisionTolerance) {
        std::ostringstream os;
        os << "bodies " << i + 1 << " and " << j + 1 << " met between t = "
           << before.time << " and t = " << after.time;
        throw CollisionError(os.str());
      }
    }
  }
}

}  // namespace

std::vector<PlanarPoint> accelerations(const SystemState& state) {
  check_shape(state);
  const auto& bodies = state.bodies;
  std::vector<PlanarPoint> result(bodies.size());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      const PlanarPoint d = bodies[j].position - bodies[i].position;
      const double r = norm(d);
      if (r < kCollisionTolerance) {
        std::ostringstream os;
        os << "bodies " << i + 1 << " and " << j + 1 << " collided at t = "
           << state.time;
        throw CollisionError(os.str());
      }
      const double inv_r3 = 1.0 / (r * r * r);
      result[i] = result[i] + (state.masses[j] * inv_r3) * d;
      result[j] = result[j] - (state.masses[i] * inv_r3) * d;
    }
  }
  return result;
}

std::array<PlanarPoint, 4> trapezoid_accelerations(
    const geometry::TrapezoidParams& params,
    const geometry::TrapezoidConfiguration& config, double m, double M) {
  const auto [a, b] = geometry::compute_distance_cubes(params);
  const double alpha3 = params.alpha() * params.alpha() * params.alpha();
  const auto& r = config.positions;
  // r_ij points from body i to body j.
  auto rel = [&](int i, int j) { return r[j - 1] - r[i - 1]; };
  return {
      (m / a) * rel(1, 2) + (m / b) * rel(1, 3) + M * rel(1, 4),
      (M / a) * rel(2, 1) + (m / alpha3) * rel(2, 3) + (M / b) * rel(2, 4),
      (M / b) * rel(3, 1) + (m / alpha3) * rel(3, 2) + (M / a) * rel(3, 4),
      (m / b) * rel(4, 2) + M * rel(4, 1) + (m / a) * rel(4, 3),
  };
}

double kinetic_energy(const SystemState& state) {
  check_shape(state);
  double T = 0.0;
  for (std::size_t i = 0; i < state.bodies.size(); ++i) {
    const auto& v = state.bodies[i].velocity;
    T += 0.5 * state.masses[i] * geometry::dot(v, v);
  }
  return T;
}

double potential_energy(const SystemState& state) {
  check_shape(state);
  double V = 0.0;
  for (std::size_t i = 0; i < state.bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < state.bodies.size(); ++j) {
      V -= state.masses[i] * state.masses[j] /
           norm(state.bodies[j].position - state.bodies[i].position);
    }
  }
  return V;
}

double total_energy(const SystemState& state) {
  return kinetic_energy(state) + potential_energy(state);
}

double angular_momentum(const SystemState& state) {
  check_shape(state);
  double L = 0.0;
  for (std::size_t i = 0; i < state.bodies.size(); ++i) {
    const auto& [r, v] = state.bodies[i];
    L += state.masses[i] * (r.x * v.y - r.y * v.x);
  }
  return L;
}

PlanarPoint linear_momentum(const SystemState& state) {
  check_shape(state);
  PlanarPoint p;
  for (std::size_t i = 0; i < state.bodies.size(); ++i) {
    p = p + state.masses[i] * state.bodies[i].velocity;
  }
  return p;
}

SystemState init_relative_equilibrium(const geometry::TrapezoidParams& params,
                                      bool force) {
  const auto solution = masses::solve_masses(params);
  const auto label = masses::label_from_masses(solution.m, solution.M);
  if (label != masses::RegionLabel::both_positive && !force) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha = " << params.alpha() << ", beta = " << params.beta()
       << " gives m = " << solution.m << ", M = " << solution.M
       << "; refusing to integrate without two positive masses";
    throw UnphysicalParameters(os.str());
  }
  const auto config = geometry::build_configuration(
      params, solution.m, solution.M, geometry::MassCheck::relaxed);
  // Angular velocity sqrt(lambda) with lambda = 1.
  const double omega = std::sqrt(solution.lambda);
  SystemState state;
  state.masses = {solution.M, solution.m, solution.m, solution.M};
  for (const auto& p : config.positions) {
    state.bodies.push_back({p, {-omega * p.y, omega * p.x}});
  }
  return state;
}

namespace {

struct Derivative {
  std::vector<PlanarPoint> dr;
  std::vector<PlanarPoint> dv;
};

Derivative derivative(const SystemState& state) {
  Derivative d;
  d.dv = accelerations(state);
  d.dr.reserve(state.bodies.size());
  for (const auto& body : state.bodies) d.dr.push_back(body.velocity);
  return d;
}

SystemState advanced(const SystemState& state, const Derivative& d, double h) {
  SystemState next = state;
  for (std::size_t i = 0; i < next.bodies.size(); ++i) {
    next.bodies[i].position = next.bodies[i].position + h * d.dr[i];
    next.bodies[i].velocity = next.bodies[i].velocity + h * d.dv[i];
  }
  next.time += h;
  return next;
}

SystemState rk4_step(const SystemState& state, double h) {
  const Derivative k1 = derivative(state);
  const Derivative k2 = derivative(advanced(state, k1, 0.5 * h));
  const Derivative k3 = derivative(advanced(state, k2, 0.5 * h));
  const Derivative k4 = derivative(advanced(state, k3, h));
  SystemState next = state;
  for (std::size_t i = 0; i < next.bodies.size(); ++i) {
    next.bodies[i].position =
        next.bodies[i].position +
        (h / 6.0) * (k1.dr[i] + 2.0 * k2.dr[i] + 2.0 * k3.dr[i] + k4.dr[i]);
    next.bodies[i].velocity =
        next.bodies[i].velocity +
        (h / 6.0) * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
  }
  next.time = state.time + h;
  return next;
}

}  // namespace

Trajectory integrate(const SystemState& initial, double dt, double t_end,
                     std::size_t stride) {
  check_shape(initial);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidParameter("step size must be positive");
  }
  if (!(t_end > initial.time) || !std::isfinite(t_end)) {
    throw InvalidParameter("horizon must lie after the initial time");
  }
  if (stride == 0) throw InvalidParameter("output stride must be positive");

  Trajectory trajectory;
  auto record = [&](const SystemState& state) {
    trajectory.samples.push_back(state);
    trajectory.energy_series.push_back(total_energy(state));
    trajectory.angular_momentum_series.push_back(angular_momentum(state));
  };

  // Rejects colliding initial data before anything is recorded.
  accelerations(initial);
  record(initial);

  const double span = t_end - initial.time;
  const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
  SystemState state = initial;
  for (std::size_t n = 1; n <= steps; ++n) {
    const double target =
        n == steps ? t_end : initial.time + static_cast<double>(n) * dt;
    try {
      SystemState next = rk4_step(state, target - state.time);
      check_passage(state, next);
      accelerations(next);
      state = std::move(next);
    } catch (const CollisionError&) {
      trajectory.collided = true;
      trajectory.collision_time = state.time;
      if (trajectory.samples.back().time != state.time) record(state);
      return trajectory;
    }
    state.time = target;
    if (n % stride == 0 || n == steps) record(state);
  }
  return trajectory;
}

RigidityReport rigidity_metrics(const Trajectory& trajectory) {
  if (trajectory.samples.empty()) {
    throw InvalidParameter("rigidity metrics need a nonempty trajectory");
  }
  const auto& first = trajectory.samples.front();
  const auto& last = trajectory.samples.back();
  const std::size_t n = first.bodies.size();
  RigidityReport report{0.0, 0.0, 0.0, 0.0};

  std::vector<double> initial_distances;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      initial_distances.push_back(
          norm(first.bodies[j].position - first.bodies[i].position));
    }
  }
  for (std::size_t s = 0; s < trajectory.samples.size(); ++s) {
    const auto& state = trajectory.samples[s];
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++pair) {
        const double d =
            norm(state.bodies[j].position - state.bodies[i].position);
        report.max_distance_deviation =
            std::max(report.max_distance_deviation,
                     relative_change(d, initial_distances[pair]));
      }
    }
    report.max_energy_drift =
        std::max(report.max_energy_drift,
                 relative_change(trajectory.energy_series[s],
                                 trajectory.energy_series.front()));
    report.max_angular_momentum_drift =
        std::max(report.max_angular_momentum_drift,
                 relative_change(trajectory.angular_momentum_series[s],
                                 trajectory.angular_momentum_series.front()));
  }
  for (std::size_t k = 0; k < n; ++k) {
    report.final_displacement =
        std::max(report.final_displacement,
                 norm(last.bodies[k].position - first.bodies[k].position));
  }
  return report;
}

}  // namespace trapcc::dynamics
