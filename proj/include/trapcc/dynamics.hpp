#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "trapcc/geometry.hpp"

namespace trapcc::dynamics {

using geometry::PlanarPoint;

inline constexpr double kCollisionTolerance = 1e-6;
inline constexpr double kDefaultStep = 1e-3;
inline constexpr std::size_t kDefaultStride = 100;

struct BodyState {
  PlanarPoint position;
  PlanarPoint velocity;
};

struct SystemState {
  std::vector<double> masses;
  std::vector<BodyState> bodies;
  double time = 0.0;
};

// Newtonian accelerations with G = 1. Throws CollisionError when two bodies
// are closer than kCollisionTolerance.
std::vector<PlanarPoint> accelerations(const SystemState& state);

// The four trapezoid equations of motion written out term by term, with a,
// b and the unit bottom side substituted for the distances. Only valid for
// the symmetric configuration produced by build_configuration.
std::array<PlanarPoint, 4> trapezoid_accelerations(
    const geometry::TrapezoidParams& params,
    const geometry::TrapezoidConfiguration& config, double m, double M);

double kinetic_energy(const SystemState& state);
double potential_energy(const SystemState& state);  // -sum m_i m_j / r_ij
double total_energy(const SystemState& state);
double angular_momentum(const SystemState& state);
PlanarPoint linear_momentum(const SystemState& state);

// Rigid rotation of the trapezoid CC with angular velocity 1 about its
// center of mass. Refuses parameters without two positive masses unless
// `force` is set; degenerate parameters always throw.
SystemState init_relative_equilibrium(const geometry::TrapezoidParams& params,
                                      bool force = false);

struct Trajectory {
  std::vector<SystemState> samples;
  std::vector<double> energy_series;
  std::vector<double> angular_momentum_series;
  // Set when a close encounter stopped the run early; samples end at the
  // last state before the encounter.
  bool collided = false;
  double collision_time = 0.0;
};

// Classical fixed-step RK4 from `initial` to t_end. A sample is recorded at
// the start, after every `stride` steps and at t_end. The last step is
// shortened so the run ends exactly at t_end.
Trajectory integrate(const SystemState& initial, double dt, double t_end,
                     std::size_t stride = kDefaultStride);

struct RigidityReport {
  double max_distance_deviation;  // max |d_ij(t) - d_ij(0)| / d_ij(0)
  double max_energy_drift;        // relative to |E(0)|
  double max_angular_momentum_drift;
  double final_displacement;      // max_k |r_k(t_end) - r_k(0)|
};

RigidityReport rigidity_metrics(const Trajectory& trajectory);

}  // namespace trapcc::dynamics
