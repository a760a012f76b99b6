#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trapcc/errors.hpp"
#include "trapcc/mass_solver.hpp"

namespace trapcc::regions {

using masses::RegionLabel;

// ---------------------------------------------------------------------------
// Published polynomial approximations. Coefficients are reproduced exactly as
// printed, including the rounded ones in h0, h1, h2; they are used for
// comparison only, never to decide a region.

// f3aprox = h2 alpha^4 + h1 alpha^2 + h0.
struct ApproxCoefficients {
  double h0;
  double h1;
  double h2;
};

ApproxCoefficients approx_coefficients(double beta);

double f1_approx(double alpha, double beta);
double f3_approx(double alpha, double beta);

enum class DomainErrorKind {
  negative_radicand,
  negative_discriminant,
  vanishing_leading_coefficient,
};

std::string_view to_string(DomainErrorKind kind);

struct FormulaDomainError {
  DomainErrorKind kind;
  std::string where;  // "numerator", "denominator", "outer", "discriminant", "h2"
  double value;
};

class NegativeRadicand : public Error {
 public:
  NegativeRadicand(std::string where, double value);
  const std::string& where() const { return where_; }
  double value() const { return value_; }

 private:
  std::string where_;
  double value_;
};

class NegativeDiscriminant : public Error {
 public:
  explicit NegativeDiscriminant(double value);
  double value() const { return value_; }

 private:
  double value_;
};

using PublishedValue = std::variant<double, FormulaDomainError>;

// Boundary alpha = g1(beta) of the f1 > 0 region, as printed.
PublishedValue evaluate_g1_published(double beta);
// Quartic root formula for f3aprox = 0 (printed under the name g2, used as g3).
PublishedValue evaluate_g3_published(double beta);

// Throwing forms: NegativeRadicand / NegativeDiscriminant on domain errors.
double g1_published(double beta);
double g3_published(double beta);

struct Interval {
  double lo;
  double hi;
};

// beta-subintervals of (0, 1) on which each published formula is real.
// Interior edges are refined by bisection to ~1e-12.
struct PublishedDomainAudit {
  std::size_t samples;
  std::vector<Interval> g1_defined;
  std::vector<Interval> g3_defined;
};

PublishedDomainAudit audit_published_formulas(std::size_t samples = 10000);

// ---------------------------------------------------------------------------
// Exact boundaries.

enum class SignFunction { f1, f3 };
enum class Axis { alpha, beta };

std::string_view to_string(SignFunction which);
std::string_view to_string(Axis axis);

// Exact f1 or f3 from the distance cubes; alpha in [0, 1], beta >= 0.
double exact_sign_function(SignFunction which, double alpha, double beta);

struct BoundaryResult {
  bool found;        // false: no sign change between the endpoints
  double root;       // NaN when !found
  double f_root;     // NaN when !found
  double f_lo;
  double f_hi;
  int iterations;
};

// Holds one coordinate at fixed_value and bisects the other over
// [lo, hi] until the bracket is narrower than tol.
BoundaryResult exact_boundary(SignFunction which, Axis fixed_axis,
                              double fixed_value, double lo, double hi,
                              double tol = 1e-12);

// Number of strict sign changes of the exact function over `samples` evenly
// spaced beta values in (lo, hi] at fixed alpha.
int sign_changes_along_beta(SignFunction which, double alpha, double lo,
                            double hi, std::size_t samples);

// ---------------------------------------------------------------------------
// Raster classification of the (alpha, beta) plane.

struct Range {
  double lo;
  double hi;
};

struct RasterCell {
  double alpha;
  double beta;
  double f1;
  double f3;
  double m;  // NaN on degenerate cells
  double M;  // NaN on degenerate cells
  RegionLabel label;
};

// Cells are stored row-major: beta is the slow (row) index, alpha the fast
// one. Axes hold the cell centers.
struct RasterGrid {
  std::vector<double> alpha_axis;
  std::vector<double> beta_axis;
  std::vector<RasterCell> cells;

  std::size_t n_alpha() const { return alpha_axis.size(); }
  std::size_t n_beta() const { return beta_axis.size(); }
  const RasterCell& at(std::size_t i_alpha, std::size_t i_beta) const {
    return cells[i_beta * alpha_axis.size() + i_alpha];
  }
  std::vector<int> f1_sign() const;
  std::vector<int> f3_sign() const;
  std::vector<RegionLabel> labels() const;
};

// Cell-centered samples (lo + (i + 1/2) (hi - lo) / n). A range with
// lo == hi is allowed when its resolution is 1 and samples that point.
std::vector<double> cell_centers(Range range, std::size_t n);

// Worker count from TRAPCC_THREADS, else hardware concurrency (at least 1).
unsigned default_worker_count();

RasterGrid raster(Range alpha_range, Range beta_range, std::size_t n_alpha,
                  std::size_t n_beta, unsigned workers = 1,
                  double beta_max = geometry::kDefaultBetaMax);

struct CellDeviation {
  double alpha;
  double beta;
  double exact;
  double approx;
};

struct ApproxFunctionReport {
  double sign_agreement;  // fraction of cells with matching sign
  double max_abs_deviation;
  double mean_abs_deviation;
  std::vector<CellDeviation> disagreements;  // grid order
};

struct ApproxReport {
  std::size_t cells;
  ApproxFunctionReport f1;
  ApproxFunctionReport f3;
};

ApproxReport compare_exact_vs_approx(const RasterGrid& grid);

}  // namespace trapcc::regions
