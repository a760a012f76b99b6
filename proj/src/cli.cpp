#include "trapcc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "trapcc/cc_oracle.hpp"
#include "trapcc/dynamics.hpp"
#include "trapcc/errors.hpp"
#include "trapcc/geometry.hpp"
#include "trapcc/mass_solver.hpp"
#include "trapcc/regions.hpp"

namespace trapcc::cli {

using nlohmann::ordered_json;

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

namespace {

constexpr double kSimulateRigidityTolerance = 1e-5;

// Thrown for inputs CLI11 accepts syntactically but the command rejects.
struct UsageError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

regions::Range parse_range(const std::string& text) {
  const auto split = text.find_first_of(":,");
  if (split == std::string::npos) {
    throw UsageError("range '" + text + "' must look like lo:hi");
  }
  auto number = [&](std::string_view part) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError("range '" + text + "' must look like lo:hi");
    }
    return value;
  };
  const std::string_view view(text);
  return {number(view.substr(0, split)), number(view.substr(split + 1))};
}

ordered_json point_json(geometry::PlanarPoint p) { return {p.x, p.y}; }

ordered_json envelope(const std::string& command,
                      const std::vector<std::string>& args,
                      ordered_json parameters) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = command;
  j["argv"] = args;
  j["parameters"] = std::move(parameters);
  j["payload"] = ordered_json::object();
  j["warnings"] = ordered_json::array();
  return j;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing: " +
                  std::strerror(errno));
  }
  return file;
}

void finish_output(std::ofstream& file, const std::string& path) {
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void write_json_file(const std::string& path, const ordered_json& j) {
  auto file = open_output(path);
  file << j.dump(2) << '\n';
  finish_output(file, path);
}

ordered_json signs_json(const masses::SignTriple& s) {
  return {{"f1", s.f1}, {"f2", s.f2}, {"f3", s.f3}};
}

ordered_json report_json(const oracle::ResidualReport& r) {
  ordered_json defects = ordered_json::array();
  for (const auto& d : r.defects) defects.push_back(point_json(d));
  return {{"lambda", r.lambda},
          {"lambda_per_body", r.lambda_per_body},
          {"lambda_energy", r.lambda_energy},
          {"U", r.U},
          {"I", r.I},
          {"defects", defects},
          {"max_residual", r.max_residual},
          {"attraction_scale", r.attraction_scale},
          {"relative_residual", r.relative_residual},
          {"com", point_json(r.com)}};
}

// ---------------------------------------------------------------------------

struct MassesOptions {
  double alpha = 0.0;
  double beta = 0.0;
  double beta_max = geometry::kDefaultBetaMax;
  std::string format = "json";
};

int cmd_masses(const MassesOptions& o, const std::vector<std::string>& args,
               std::ostream& out, std::ostream& err) {
  const geometry::TrapezoidParams params(o.alpha, o.beta, o.beta_max);
  masses::MassSolution s;
  try {
    s = masses::solve_masses(params);
  } catch (const DegenerateConfiguration& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  }
  const auto label = masses::classify(params);
  const auto config = geometry::build_configuration(
      params, s.m, s.M, geometry::MassCheck::relaxed);

  if (o.format == "csv") {
    out << "alpha,beta,m,M,lambda,f1,f2,f3,a,b,r_A,r_B,label\n";
    for (double v : {o.alpha, o.beta, s.m, s.M, s.lambda, s.signs.f1,
                     s.signs.f2, s.signs.f3, s.cubes.a, s.cubes.b, config.r_A,
                     config.r_B}) {
      out << format_double(v) << ',';
    }
    out << masses::to_string(label) << '\n';
    return kSuccess;
  }
  auto j = envelope("masses", args,
                    {{"alpha", o.alpha}, {"beta", o.beta},
                     {"beta_max", o.beta_max}, {"format", o.format}});
  j["payload"] = {{"m", s.m},
                  {"M", s.M},
                  {"lambda", s.lambda},
                  {"signs", signs_json(s.signs)},
                  {"a", s.cubes.a},
                  {"b", s.cubes.b},
                  {"r_A", config.r_A},
                  {"r_B", config.r_B},
                  {"label", masses::to_string(label)}};
  if (label != masses::RegionLabel::both_positive) {
    j["warnings"].push_back("NEGATIVE-MASS: not both masses are positive");
  }
  out << j.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  double alpha = 0.0;
  double beta = 0.0;
  double tol = 1e-10;
  double beta_max = geometry::kDefaultBetaMax;
};

int cmd_verify(const VerifyOptions& o, const std::vector<std::string>& args,
               std::ostream& out, std::ostream& err) {
  const geometry::TrapezoidParams params(o.alpha, o.beta, o.beta_max);
  masses::MassSolution s;
  try {
    s = masses::solve_masses(params);
  } catch (const DegenerateConfiguration& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  }
  const auto config = geometry::build_configuration(
      params, s.m, s.M, geometry::MassCheck::relaxed);
  std::vector<oracle::Body> bodies;
  const double body_masses[] = {s.M, s.m, s.m, s.M};
  for (int k = 0; k < 4; ++k) {
    bodies.push_back({body_masses[k], config.positions[k]});
  }
  const oracle::PlanarSystem system(std::move(bodies));
  const auto check = oracle::is_central_configuration(system, o.tol);
  const auto fixed = oracle::cc_residual(system, s.lambda);

  auto j = envelope("verify", args,
                    {{"alpha", o.alpha}, {"beta", o.beta}, {"tol", o.tol},
                     {"beta_max", o.beta_max}});
  ordered_json positions = ordered_json::array();
  for (const auto& p : config.positions) positions.push_back(point_json(p));
  j["payload"] = {{"m", s.m},
                  {"M", s.M},
                  {"positions", positions},
                  {"is_central_configuration", check.is_central},
                  {"inferred", report_json(check.report)},
                  {"normalized", report_json(fixed)}};
  if (s.m <= 0.0 || s.M <= 0.0) {
    j["warnings"].push_back(
        "NEGATIVE-MASS: the equations are algebraic; this is not a physical "
        "configuration");
  }
  if (!check.is_central) {
    j["warnings"].push_back("relative residual exceeds tolerance");
  }
  out << j.dump(2) << '\n';
  return check.is_central ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct RasterOptions {
  std::string alpha_range = "0:1";
  std::string beta_range = "0:1";
  std::size_t resolution = 400;
  std::size_t n_alpha = 0;
  std::size_t n_beta = 0;
  double beta_max = geometry::kDefaultBetaMax;
  std::string out_path;
};

int cmd_raster(const RasterOptions& o, const std::vector<std::string>& args,
               std::ostream& out) {
  const auto alpha_range = parse_range(o.alpha_range);
  const auto beta_range = parse_range(o.beta_range);
  const std::size_t n_alpha = o.n_alpha ? o.n_alpha : o.resolution;
  const std::size_t n_beta = o.n_beta ? o.n_beta : o.resolution;
  if (n_alpha == 0 || n_beta == 0) throw UsageError("resolution must be positive");

  const auto grid =
      regions::raster(alpha_range, beta_range, n_alpha, n_beta,
                      regions::default_worker_count(), o.beta_max);

  auto file = open_output(o.out_path);
  file << "alpha,beta,f1,f3,m,M,label\n";
  std::size_t counts[5] = {};
  for (const auto& c : grid.cells) {
    file << format_double(c.alpha) << ',' << format_double(c.beta) << ','
         << format_double(c.f1) << ',' << format_double(c.f3) << ','
         << format_double(c.m) << ',' << format_double(c.M) << ','
         << masses::to_string(c.label) << '\n';
    ++counts[static_cast<int>(c.label)];
  }
  finish_output(file, o.out_path);

  auto j = envelope("raster", args,
                    {{"alpha_range", {alpha_range.lo, alpha_range.hi}},
                     {"beta_range", {beta_range.lo, beta_range.hi}},
                     {"n_alpha", n_alpha},
                     {"n_beta", n_beta},
                     {"beta_max", o.beta_max},
                     {"out", o.out_path}});
  ordered_json label_counts = ordered_json::object();
  for (auto label :
       {masses::RegionLabel::both_positive, masses::RegionLabel::lower_only,
        masses::RegionLabel::upper_only, masses::RegionLabel::none_positive,
        masses::RegionLabel::degenerate}) {
    label_counts[std::string(masses::to_string(label))] =
        counts[static_cast<int>(label)];
  }
  j["payload"] = {{"csv", o.out_path},
                  {"columns", {"alpha", "beta", "f1", "f3", "m", "M", "label"}},
                  {"order", "row-major: beta outer, alpha inner"},
                  {"sampling", "cell centers"},
                  {"cells", grid.cells.size()},
                  {"label_counts", label_counts}};
  write_json_file(o.out_path + ".json", j);
  out << j.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct BoundaryOptions {
  std::string which = "f1";
  std::string axis = "alpha";
  std::vector<double> fixed;
  std::string method = "exact";
  std::string interval;
  std::string out_path;
};

int cmd_boundary(const BoundaryOptions& o, const std::vector<std::string>& args,
                 std::ostream& out) {
  const auto which =
      o.which == "f1" ? regions::SignFunction::f1 : regions::SignFunction::f3;
  const auto axis = o.axis == "alpha" ? regions::Axis::alpha : regions::Axis::beta;
  const bool want_exact = o.method == "exact" || o.method == "both";
  const bool want_published = o.method == "published" || o.method == "both";
  if (want_published && axis != regions::Axis::beta) {
    throw UsageError("published boundaries are alpha = g(beta); use --axis beta");
  }
  // Default search: beta over [0, 2] at fixed alpha, alpha over [0, 1] at
  // fixed beta.
  regions::Range interval = axis == regions::Axis::alpha
                                ? regions::Range{0.0, geometry::kDefaultBetaMax}
                                : regions::Range{0.0, 1.0};
  if (!o.interval.empty()) interval = parse_range(o.interval);

  std::ostringstream csv;
  csv << "fixed,root,f_value,method\n";
  ordered_json warnings = ordered_json::array();
  for (double fixed : o.fixed) {
    if (want_exact) {
      const auto r =
          regions::exact_boundary(which, axis, fixed, interval.lo, interval.hi);
      csv << format_double(fixed) << ',';
      if (r.found) {
        csv << format_double(r.root) << ',' << format_double(r.f_root);
      } else {
        csv << "no_sign_change,";
      }
      csv << ",exact\n";
    }
    if (want_published) {
      const auto value = which == regions::SignFunction::f1
                             ? regions::evaluate_g1_published(fixed)
                             : regions::evaluate_g3_published(fixed);
      csv << format_double(fixed) << ',';
      if (const double* alpha = std::get_if<double>(&value)) {
        const double residual = which == regions::SignFunction::f1
                                    ? regions::f1_approx(*alpha, fixed)
                                    : regions::f3_approx(*alpha, fixed);
        csv << format_double(*alpha) << ',' << format_double(residual);
      } else {
        const auto& e = std::get<regions::FormulaDomainError>(value);
        csv << "domain_error:" << regions::to_string(e.kind) << ':' << e.where
            << ',' << format_double(e.value);
        warnings.push_back("beta = " + format_double(fixed) + ": " +
                           std::string(regions::to_string(e.kind)) + " (" +
                           e.where + ")");
      }
      csv << ",published\n";
    }
  }

  if (o.out_path.empty()) {
    out << csv.str();
    return kSuccess;
  }
  auto file = open_output(o.out_path);
  file << csv.str();
  finish_output(file, o.out_path);
  auto j = envelope("boundary", args,
                    {{"which", o.which},
                     {"axis", o.axis},
                     {"fixed", o.fixed},
                     {"method", o.method},
                     {"interval", {interval.lo, interval.hi}},
                     {"out", o.out_path}});
  j["payload"] = {{"csv", o.out_path}, {"rows_per_value", o.method == "both" ? 2 : 1}};
  j["warnings"] = warnings;
  out << j.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct SimulateOptions {
  double alpha = 0.0;
  double beta = 0.0;
  double periods = 1.0;
  double dt = dynamics::kDefaultStep;
  std::size_t stride = dynamics::kDefaultStride;
  bool force = false;
  double beta_max = geometry::kDefaultBetaMax;
  std::string out_path;
};

int cmd_simulate(const SimulateOptions& o, const std::vector<std::string>& args,
                 std::ostream& out, std::ostream& err) {
  if (!(o.periods >= 0.0) || !(o.dt > 0.0) || o.stride == 0) {
    throw UsageError("need periods >= 0, dt > 0 and stride > 0");
  }
  const geometry::TrapezoidParams params(o.alpha, o.beta, o.beta_max);
  dynamics::SystemState initial;
  try {
    initial = dynamics::init_relative_equilibrium(params, o.force);
  } catch (const DegenerateConfiguration& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const UnphysicalParameters& e) {
    err << "refused: " << e.what() << " (pass --force to override)\n";
    return kRefusedUnphysical;
  }

  const double t_end = o.periods * 2.0 * std::numbers::pi;
  dynamics::Trajectory trajectory;
  if (t_end > 0.0) {
    trajectory = dynamics::integrate(initial, o.dt, t_end, o.stride);
  }

  auto file = open_output(o.out_path);
  file << "t";
  for (int k = 1; k <= 4; ++k) file << ",x" << k << ",y" << k;
  file << ",energy,angmom\n";
  for (std::size_t s = 0; s < trajectory.samples.size(); ++s) {
    const auto& state = trajectory.samples[s];
    file << format_double(state.time);
    for (const auto& body : state.bodies) {
      file << ',' << format_double(body.position.x) << ','
           << format_double(body.position.y);
    }
    file << ',' << format_double(trajectory.energy_series[s]) << ','
         << format_double(trajectory.angular_momentum_series[s]) << '\n';
  }
  finish_output(file, o.out_path);

  dynamics::RigidityReport rigidity{0.0, 0.0, 0.0, 0.0};
  if (!trajectory.samples.empty()) {
    rigidity = dynamics::rigidity_metrics(trajectory);
  }
  auto j = envelope("simulate", args,
                    {{"alpha", o.alpha},
                     {"beta", o.beta},
                     {"periods", o.periods},
                     {"dt", o.dt},
                     {"stride", o.stride},
                     {"force", o.force},
                     {"beta_max", o.beta_max},
                     {"out", o.out_path}});
  const bool rigid = rigidity.max_distance_deviation <= kSimulateRigidityTolerance;
  j["payload"] = {
      {"csv", o.out_path},
      {"masses", initial.masses},
      {"t_end", t_end},
      {"samples", trajectory.samples.size()},
      {"collided", trajectory.collided},
      {"rigidity",
       {{"max_distance_deviation", rigidity.max_distance_deviation},
        {"max_energy_drift", rigidity.max_energy_drift},
        {"max_angular_momentum_drift", rigidity.max_angular_momentum_drift},
        {"final_displacement", rigidity.final_displacement}}},
      {"rigidity_tolerance", kSimulateRigidityTolerance},
      {"rigid", rigid}};
  if (trajectory.collided) {
    j["payload"]["collision_time"] = trajectory.collision_time;
    j["warnings"].push_back("integration stopped at a close encounter");
  }
  if (initial.masses[0] <= 0.0 || initial.masses[1] <= 0.0) {
    j["warnings"].push_back("NEGATIVE-MASS: forced run with a negative mass");
  }
  write_json_file(o.out_path + ".json", j);
  out << j.dump(2) << '\n';
  if (trajectory.collided) return kCollision;
  return rigid ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct CompareOptions {
  std::size_t resolution = 100;
  std::string alpha_range = "0:1";
  std::string beta_range = "0:1";
  std::size_t max_listed = 20;
  std::string out_path;
};

ordered_json approx_json(const regions::ApproxFunctionReport& r,
                         std::size_t max_listed) {
  auto worst = r.disagreements;
  std::stable_sort(worst.begin(), worst.end(), [](const auto& x, const auto& y) {
    return std::abs(x.approx - x.exact) > std::abs(y.approx - y.exact);
  });
  if (worst.size() > max_listed) worst.resize(max_listed);
  ordered_json cells = ordered_json::array();
  for (const auto& c : worst) {
    cells.push_back({{"alpha", c.alpha},
                     {"beta", c.beta},
                     {"exact", c.exact},
                     {"approx", c.approx}});
  }
  return {{"sign_agreement", r.sign_agreement},
          {"max_abs_deviation", r.max_abs_deviation},
          {"mean_abs_deviation", r.mean_abs_deviation},
          {"disagreement_count", r.disagreements.size()},
          {"worst_disagreements", cells}};
}

int cmd_compare_approx(const CompareOptions& o,
                       const std::vector<std::string>& args, std::ostream& out) {
  if (o.resolution == 0) throw UsageError("resolution must be positive");
  const auto alpha_range = parse_range(o.alpha_range);
  const auto beta_range = parse_range(o.beta_range);
  const auto grid =
      regions::raster(alpha_range, beta_range, o.resolution, o.resolution,
                      regions::default_worker_count());
  const auto report = regions::compare_exact_vs_approx(grid);
  const auto audit = regions::audit_published_formulas();

  auto intervals = [](const std::vector<regions::Interval>& list) {
    ordered_json j = ordered_json::array();
    for (const auto& i : list) j.push_back({i.lo, i.hi});
    return j;
  };
  auto j = envelope("compare-approx", args,
                    {{"resolution", o.resolution},
                     {"alpha_range", {alpha_range.lo, alpha_range.hi}},
                     {"beta_range", {beta_range.lo, beta_range.hi}},
                     {"max_listed", o.max_listed},
                     {"out", o.out_path}});
  j["payload"] = {{"cells", report.cells},
                  {"f1", approx_json(report.f1, o.max_listed)},
                  {"f3", approx_json(report.f3, o.max_listed)},
                  {"published_formula_domains",
                   {{"samples", audit.samples},
                    {"g1_real_on", intervals(audit.g1_defined)},
                    {"g3_real_on", intervals(audit.g3_defined)}}}};
  if (audit.g1_defined.empty()) {
    j["warnings"].push_back("published g1 is not real anywhere on 0 < beta < 1");
  }
  if (o.out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(o.out_path, j);
    out << j.dump(2) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Central configurations of the isosceles-trapezoid four-body problem",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const auto formats = CLI::IsMember({"csv", "json"});
  const auto functions = CLI::IsMember({"f1", "f3"});
  const auto axes = CLI::IsMember({"alpha", "beta"});

  MassesOptions masses_opts;
  auto* masses = app.add_subcommand("masses", "closed-form masses and sign functions");
  masses->add_option("--alpha", masses_opts.alpha, "top/bottom side ratio")->required();
  masses->add_option("--beta", masses_opts.beta, "height")->required();
  masses->add_option("--beta-max", masses_opts.beta_max)->capture_default_str();
  masses->add_option("--format", masses_opts.format)->check(formats)->capture_default_str();

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "check the CC equations for the solved masses");
  verify->add_option("--alpha", verify_opts.alpha)->required();
  verify->add_option("--beta", verify_opts.beta)->required();
  verify->add_option("--tol", verify_opts.tol, "relative residual tolerance")
      ->capture_default_str();
  verify->add_option("--beta-max", verify_opts.beta_max)->capture_default_str();

  RasterOptions raster_opts;
  auto* raster = app.add_subcommand("raster", "classify a grid of the (alpha, beta) plane");
  raster->add_option("--alpha-range", raster_opts.alpha_range, "lo:hi")->capture_default_str();
  raster->add_option("--beta-range", raster_opts.beta_range, "lo:hi")->capture_default_str();
  raster->add_option("--resolution", raster_opts.resolution, "cells per axis")
      ->capture_default_str();
  raster->add_option("--n-alpha", raster_opts.n_alpha, "overrides --resolution for alpha");
  raster->add_option("--n-beta", raster_opts.n_beta, "overrides --resolution for beta");
  raster->add_option("--beta-max", raster_opts.beta_max)->capture_default_str();
  raster->add_option("--out", raster_opts.out_path, "CSV path; metadata goes to PATH.json")
      ->required();

  BoundaryOptions boundary_opts;
  auto* boundary = app.add_subcommand("boundary", "zero sets of f1 and f3");
  boundary->add_option("--which", boundary_opts.which)->check(functions)->capture_default_str();
  boundary->add_option("--axis", boundary_opts.axis, "coordinate held fixed")
      ->check(axes)
      ->capture_default_str();
  boundary->add_option("--fixed", boundary_opts.fixed, "fixed coordinate values")
      ->delimiter(',');
  boundary->add_option("--method", boundary_opts.method)
      ->check(CLI::IsMember({"exact", "published", "both"}))
      ->capture_default_str();
  boundary->add_option("--interval", boundary_opts.interval, "search interval lo:hi");
  boundary->add_option("--out", boundary_opts.out_path, "CSV path (stdout if omitted)");

  SimulateOptions simulate_opts;
  auto* simulate = app.add_subcommand("simulate", "integrate the relative equilibrium");
  simulate->add_option("--alpha", simulate_opts.alpha)->required();
  simulate->add_option("--beta", simulate_opts.beta)->required();
  simulate->add_option("--periods", simulate_opts.periods)->capture_default_str();
  simulate->add_option("--dt", simulate_opts.dt)->capture_default_str();
  simulate->add_option("--stride", simulate_opts.stride, "steps between samples")
      ->capture_default_str();
  simulate->add_flag("--force", simulate_opts.force, "allow a negative mass");
  simulate->add_option("--beta-max", simulate_opts.beta_max)->capture_default_str();
  simulate->add_option("--out", simulate_opts.out_path, "CSV path; summary goes to PATH.json")
      ->required();

  CompareOptions compare_opts;
  auto* compare = app.add_subcommand("compare-approx",
                                     "exact versus published approximate sign functions");
  compare->add_option("--resolution", compare_opts.resolution)->capture_default_str();
  compare->add_option("--alpha-range", compare_opts.alpha_range)->capture_default_str();
  compare->add_option("--beta-range", compare_opts.beta_range)->capture_default_str();
  compare->add_option("--max-listed", compare_opts.max_listed, "worst cells listed per function")
      ->capture_default_str();
  compare->add_option("--out", compare_opts.out_path, "JSON path");

  std::vector<std::string> argv_storage{kToolName};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*masses) return cmd_masses(masses_opts, args, out, err);
    if (*verify) return cmd_verify(verify_opts, args, out, err);
    if (*raster) return cmd_raster(raster_opts, args, out);
    if (*boundary) return cmd_boundary(boundary_opts, args, out);
    if (*simulate) return cmd_simulate(simulate_opts, args, out, err);
    if (*compare) return cmd_compare_approx(compare_opts, args, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateConfiguration& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const CollisionError& e) {
    err << "collision: " << e.what() << '\n';
    return kCollision;
  }
  return kUsage;
}

}  // namespace trapcc::cli
