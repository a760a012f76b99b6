#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "trapcc/cc_oracle.hpp"
#include "trapcc/dynamics.hpp"
#include "trapcc/errors.hpp"
#include "trapcc/geometry.hpp"
#include "trapcc/mass_solver.hpp"
#include "trapcc/regions.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using trapcc::geometry::PlanarPoint;
using trapcc::geometry::TrapezoidParams;

using Pair = std::pair<double, double>;

Pair to_pair(PlanarPoint p) { return {p.x, p.y}; }

std::vector<Pair> to_pairs(const std::vector<PlanarPoint>& points) {
  std::vector<Pair> out;
  for (const auto& p : points) out.push_back(to_pair(p));
  return out;
}

trapcc::oracle::PlanarSystem make_system(const std::vector<double>& masses,
                                         const std::vector<Pair>& positions) {
  if (masses.size() != positions.size()) {
    throw trapcc::InvalidParameter("need one position per mass");
  }
  std::vector<trapcc::oracle::Body> bodies;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    bodies.push_back({masses[i], {positions[i].first, positions[i].second}});
  }
  return trapcc::oracle::PlanarSystem(std::move(bodies));
}

trapcc::regions::SignFunction parse_function(const std::string& which) {
  if (which == "f1") return trapcc::regions::SignFunction::f1;
  if (which == "f3") return trapcc::regions::SignFunction::f3;
  throw trapcc::InvalidParameter("which must be 'f1' or 'f3'");
}

trapcc::regions::Axis parse_axis(const std::string& axis) {
  if (axis == "alpha") return trapcc::regions::Axis::alpha;
  if (axis == "beta") return trapcc::regions::Axis::beta;
  throw trapcc::InvalidParameter("axis must be 'alpha' or 'beta'");
}

py::array_t<double> grid_array(const trapcc::regions::RasterGrid& grid,
                               double trapcc::regions::RasterCell::*field) {
  py::array_t<double> out({grid.n_beta(), grid.n_alpha()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t j = 0; j < grid.n_beta(); ++j) {
    for (std::size_t i = 0; i < grid.n_alpha(); ++i) {
      view(j, i) = grid.at(i, j).*field;
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Central configurations of the isosceles-trapezoid four-body problem";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<trapcc::Error>(m, "TrapccError", PyExc_ValueError);
  py::register_exception<trapcc::InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<trapcc::DegenerateMasses>(m, "DegenerateMasses", base.ptr());
  py::register_exception<trapcc::DegenerateConfiguration>(m, "DegenerateConfiguration",
                                                          base.ptr());
  py::register_exception<trapcc::SingularSystem>(m, "SingularSystem", base.ptr());
  py::register_exception<trapcc::CoincidentBodies>(m, "CoincidentBodies", base.ptr());
  py::register_exception<trapcc::UnphysicalParameters>(m, "UnphysicalParameters",
                                                       base.ptr());
  py::register_exception<trapcc::CollisionError>(m, "CollisionError", base.ptr());
  py::register_exception<trapcc::regions::NegativeRadicand>(m, "NegativeRadicand",
                                                            base.ptr());
  py::register_exception<trapcc::regions::NegativeDiscriminant>(m, "NegativeDiscriminant",
                                                                base.ptr());

  // geometry -----------------------------------------------------------------
  py::class_<trapcc::geometry::DistanceCubes>(m, "DistanceCubes")
      .def_readonly("a", &trapcc::geometry::DistanceCubes::a)
      .def_readonly("b", &trapcc::geometry::DistanceCubes::b);

  py::class_<trapcc::geometry::TrapezoidConfiguration>(m, "TrapezoidConfiguration")
      .def_property_readonly("positions",
                             [](const trapcc::geometry::TrapezoidConfiguration& c) {
                               std::vector<Pair> out;
                               for (const auto& p : c.positions) out.push_back(to_pair(p));
                               return out;
                             })
      .def_readonly("r_A", &trapcc::geometry::TrapezoidConfiguration::r_A)
      .def_readonly("r_B", &trapcc::geometry::TrapezoidConfiguration::r_B);

  m.def("compute_distance_cubes",
        [](double alpha, double beta) {
          return trapcc::geometry::compute_distance_cubes(TrapezoidParams(alpha, beta));
        },
        "alpha"_a, "beta"_a);

  m.def("build_configuration",
        [](double alpha, double beta, double m_upper, double m_lower, bool strict) {
          return trapcc::geometry::build_configuration(
              TrapezoidParams(alpha, beta), m_upper, m_lower,
              strict ? trapcc::geometry::MassCheck::strict
                     : trapcc::geometry::MassCheck::relaxed);
        },
        "alpha"_a, "beta"_a, "m"_a, "M"_a, "strict"_a = true);

  // mass_solver --------------------------------------------------------------
  py::class_<trapcc::masses::SignTriple>(m, "SignTriple")
      .def_readonly("f1", &trapcc::masses::SignTriple::f1)
      .def_readonly("f2", &trapcc::masses::SignTriple::f2)
      .def_readonly("f3", &trapcc::masses::SignTriple::f3);

  py::class_<trapcc::masses::MassSolution>(m, "MassSolution")
      .def_readonly("m", &trapcc::masses::MassSolution::m)
      .def_readonly("M", &trapcc::masses::MassSolution::M)
      .def_readonly("lam", &trapcc::masses::MassSolution::lambda)
      .def_readonly("signs", &trapcc::masses::MassSolution::signs)
      .def_readonly("cubes", &trapcc::masses::MassSolution::cubes);

  py::enum_<trapcc::masses::RegionLabel>(m, "RegionLabel")
      .value("BothPositive", trapcc::masses::RegionLabel::both_positive)
      .value("OnlyMLowerPositive", trapcc::masses::RegionLabel::lower_only)
      .value("OnlyMUpperPositive", trapcc::masses::RegionLabel::upper_only)
      .value("NonePositive", trapcc::masses::RegionLabel::none_positive)
      .value("Degenerate", trapcc::masses::RegionLabel::degenerate);

  m.def("sign_functions",
        [](double alpha, double beta) {
          const TrapezoidParams params(alpha, beta);
          return trapcc::masses::sign_functions(
              trapcc::geometry::compute_distance_cubes(params), alpha);
        },
        "alpha"_a, "beta"_a);
  m.def("solve_masses",
        [](double alpha, double beta) {
          return trapcc::masses::solve_masses(TrapezoidParams(alpha, beta));
        },
        "alpha"_a, "beta"_a);
  m.def("solve_masses_linear",
        [](double alpha, double beta) {
          const auto s = trapcc::masses::solve_masses_linear(TrapezoidParams(alpha, beta));
          return Pair{s.m, s.M};
        },
        "alpha"_a, "beta"_a, "Returns (m, M) from the reduced 2x2 linear system.");
  m.def("classify",
        [](double alpha, double beta) {
          return trapcc::masses::classify(TrapezoidParams(alpha, beta));
        },
        "alpha"_a, "beta"_a);

  // cc_oracle ----------------------------------------------------------------
  py::class_<trapcc::oracle::ResidualReport>(m, "ResidualReport")
      .def_readonly("lambda_per_body", &trapcc::oracle::ResidualReport::lambda_per_body)
      .def_readonly("lambda_energy", &trapcc::oracle::ResidualReport::lambda_energy)
      .def_readonly("U", &trapcc::oracle::ResidualReport::U)
      .def_readonly("I", &trapcc::oracle::ResidualReport::I)
      .def_property_readonly("defects",
                             [](const trapcc::oracle::ResidualReport& r) {
                               return to_pairs(r.defects);
                             })
      .def_readonly("max_residual", &trapcc::oracle::ResidualReport::max_residual)
      .def_readonly("attraction_scale", &trapcc::oracle::ResidualReport::attraction_scale)
      .def_readonly("relative_residual", &trapcc::oracle::ResidualReport::relative_residual)
      .def_property_readonly("com",
                             [](const trapcc::oracle::ResidualReport& r) {
                               return to_pair(r.com);
                             })
      .def_readonly("lam", &trapcc::oracle::ResidualReport::lambda);

  m.def("cc_residual",
        [](const std::vector<double>& masses, const std::vector<Pair>& positions,
           double lam) {
          return trapcc::oracle::cc_residual(make_system(masses, positions), lam);
        },
        "masses"_a, "positions"_a, "lam"_a);
  m.def("is_central_configuration",
        [](const std::vector<double>& masses, const std::vector<Pair>& positions,
           double tol) {
          auto check =
              trapcc::oracle::is_central_configuration(make_system(masses, positions), tol);
          return py::make_tuple(check.is_central, std::move(check.report));
        },
        "masses"_a, "positions"_a, "tol"_a = 1e-10);

  // regions ------------------------------------------------------------------
  m.def("f1_approx", &trapcc::regions::f1_approx, "alpha"_a, "beta"_a);
  m.def("f3_approx", &trapcc::regions::f3_approx, "alpha"_a, "beta"_a);
  m.def("g1_published", &trapcc::regions::g1_published, "beta"_a);
  m.def("g3_published", &trapcc::regions::g3_published, "beta"_a);
  m.def("audit_published_formulas",
        [](std::size_t samples) {
          const auto audit = trapcc::regions::audit_published_formulas(samples);
          auto intervals = [](const std::vector<trapcc::regions::Interval>& list) {
            std::vector<Pair> out;
            for (const auto& i : list) out.emplace_back(i.lo, i.hi);
            return out;
          };
          py::dict d;
          d["samples"] = audit.samples;
          d["g1_real_on"] = intervals(audit.g1_defined);
          d["g3_real_on"] = intervals(audit.g3_defined);
          return d;
        },
        "samples"_a = 10000);

  py::class_<trapcc::regions::BoundaryResult>(m, "BoundaryResult")
      .def_readonly("found", &trapcc::regions::BoundaryResult::found)
      .def_readonly("root", &trapcc::regions::BoundaryResult::root)
      .def_readonly("f_root", &trapcc::regions::BoundaryResult::f_root)
      .def_readonly("f_lo", &trapcc::regions::BoundaryResult::f_lo)
      .def_readonly("f_hi", &trapcc::regions::BoundaryResult::f_hi)
      .def_readonly("iterations", &trapcc::regions::BoundaryResult::iterations);

  m.def("exact_boundary",
        [](const std::string& which, const std::string& fixed_axis, double fixed_value,
           double lo, double hi, double tol) {
          return trapcc::regions::exact_boundary(parse_function(which),
                                                 parse_axis(fixed_axis), fixed_value,
                                                 lo, hi, tol);
        },
        "which"_a, "fixed_axis"_a, "fixed_value"_a, "lo"_a, "hi"_a, "tol"_a = 1e-12);

  m.def("raster",
        [](Pair alpha_range, Pair beta_range, std::size_t n_alpha, std::size_t n_beta) {
          const auto grid = trapcc::regions::raster(
              {alpha_range.first, alpha_range.second},
              {beta_range.first, beta_range.second}, n_alpha, n_beta,
              trapcc::regions::default_worker_count());
          py::array_t<int> labels({grid.n_beta(), grid.n_alpha()});
          auto view = labels.mutable_unchecked<2>();
          for (std::size_t j = 0; j < grid.n_beta(); ++j) {
            for (std::size_t i = 0; i < grid.n_alpha(); ++i) {
              view(j, i) = static_cast<int>(grid.at(i, j).label);
            }
          }
          py::dict d;
          d["alpha"] = grid.alpha_axis;
          d["beta"] = grid.beta_axis;
          d["f1"] = grid_array(grid, &trapcc::regions::RasterCell::f1);
          d["f3"] = grid_array(grid, &trapcc::regions::RasterCell::f3);
          d["m"] = grid_array(grid, &trapcc::regions::RasterCell::m);
          d["M"] = grid_array(grid, &trapcc::regions::RasterCell::M);
          d["label"] = labels;
          return d;
        },
        "alpha_range"_a, "beta_range"_a, "n_alpha"_a, "n_beta"_a,
        "Arrays are indexed [beta, alpha]; label holds RegionLabel values.");

  m.def("compare_exact_vs_approx",
        [](Pair alpha_range, Pair beta_range, std::size_t resolution) {
          const auto grid = trapcc::regions::raster(
              {alpha_range.first, alpha_range.second},
              {beta_range.first, beta_range.second}, resolution, resolution,
              trapcc::regions::default_worker_count());
          const auto report = trapcc::regions::compare_exact_vs_approx(grid);
          auto summary = [](const trapcc::regions::ApproxFunctionReport& r) {
            py::dict d;
            d["sign_agreement"] = r.sign_agreement;
            d["max_abs_deviation"] = r.max_abs_deviation;
            d["mean_abs_deviation"] = r.mean_abs_deviation;
            d["disagreement_count"] = r.disagreements.size();
            return d;
          };
          py::dict d;
          d["cells"] = report.cells;
          d["f1"] = summary(report.f1);
          d["f3"] = summary(report.f3);
          return d;
        },
        "alpha_range"_a = Pair{0.0, 1.0}, "beta_range"_a = Pair{0.0, 1.0},
        "resolution"_a = 100);

  // dynamics -----------------------------------------------------------------
  py::class_<trapcc::dynamics::SystemState>(m, "SystemState")
      .def_readonly("masses", &trapcc::dynamics::SystemState::masses)
      .def_readonly("time", &trapcc::dynamics::SystemState::time)
      .def_property_readonly("positions",
                             [](const trapcc::dynamics::SystemState& s) {
                               std::vector<Pair> out;
                               for (const auto& b : s.bodies) out.push_back(to_pair(b.position));
                               return out;
                             })
      .def_property_readonly("velocities", [](const trapcc::dynamics::SystemState& s) {
        std::vector<Pair> out;
        for (const auto& b : s.bodies) out.push_back(to_pair(b.velocity));
        return out;
      });

  py::class_<trapcc::dynamics::Trajectory>(m, "Trajectory")
      .def_property_readonly("times",
                             [](const trapcc::dynamics::Trajectory& t) {
                               std::vector<double> out;
                               for (const auto& s : t.samples) out.push_back(s.time);
                               return out;
                             })
      .def_property_readonly(
          "positions",
          [](const trapcc::dynamics::Trajectory& t) {
            const std::size_t n = t.samples.empty() ? 0 : t.samples.front().bodies.size();
            py::array_t<double> out({t.samples.size(), n, std::size_t{2}});
            auto view = out.mutable_unchecked<3>();
            for (std::size_t s = 0; s < t.samples.size(); ++s) {
              for (std::size_t k = 0; k < n; ++k) {
                view(s, k, 0) = t.samples[s].bodies[k].position.x;
                view(s, k, 1) = t.samples[s].bodies[k].position.y;
              }
            }
            return out;
          },
          "Array of shape (samples, bodies, 2).")
      .def_readonly("energy", &trapcc::dynamics::Trajectory::energy_series)
      .def_readonly("angular_momentum", &trapcc::dynamics::Trajectory::angular_momentum_series)
      .def_readonly("collided", &trapcc::dynamics::Trajectory::collided);

  py::class_<trapcc::dynamics::RigidityReport>(m, "RigidityReport")
      .def_readonly("max_distance_deviation",
                    &trapcc::dynamics::RigidityReport::max_distance_deviation)
      .def_readonly("max_energy_drift", &trapcc::dynamics::RigidityReport::max_energy_drift)
      .def_readonly("max_angular_momentum_drift",
                    &trapcc::dynamics::RigidityReport::max_angular_momentum_drift)
      .def_readonly("final_displacement",
                    &trapcc::dynamics::RigidityReport::final_displacement);

  m.def("init_relative_equilibrium",
        [](double alpha, double beta, bool force) {
          return trapcc::dynamics::init_relative_equilibrium(TrapezoidParams(alpha, beta),
                                                             force);
        },
        "alpha"_a, "beta"_a, "force"_a = false);
  m.def("integrate",
        [](const trapcc::dynamics::SystemState& initial, double t_end, double dt,
           std::size_t stride) {
          return trapcc::dynamics::integrate(initial, dt, t_end, stride);
        },
        "initial"_a, "t_end"_a, "dt"_a = trapcc::dynamics::kDefaultStep,
        "stride"_a = trapcc::dynamics::kDefaultStride);
  m.def("rigidity_metrics", &trapcc::dynamics::rigidity_metrics, "trajectory"_a);
}
