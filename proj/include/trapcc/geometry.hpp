#pragma once

#include <array>

namespace trapcc::geometry {

// All lengths are in units of the bottom side |r_1 - r_4| = 1.
inline constexpr double kDefaultBetaMax = 2.0;

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend constexpr PlanarPoint operator+(PlanarPoint p, PlanarPoint q) {
    return {p.x + q.x, p.y + q.y};
  }
  friend constexpr PlanarPoint operator-(PlanarPoint p, PlanarPoint q) {
    return {p.x - q.x, p.y - q.y};
  }
  friend constexpr PlanarPoint operator*(double s, PlanarPoint p) {
    return {s * p.x, s * p.y};
  }
  friend constexpr bool operator==(PlanarPoint, PlanarPoint) = default;
};

double dot(PlanarPoint p, PlanarPoint q);
double norm(PlanarPoint p);

// Shape of the isosceles trapezoid: alpha is the top/bottom side ratio and
// beta the height, both relative to the unit bottom side.
//
// Construction validates 0 < alpha <= 1 and 0 < beta <= beta_max. A ratio
// alpha > 1 describes the same trapezoid upside down; the error message
// names the equivalent (1/alpha, beta/alpha).
class TrapezoidParams {
 public:
  TrapezoidParams(double alpha, double beta,
                  double beta_max = kDefaultBetaMax);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

// Cubed lateral (1-2, 3-4) and diagonal (1-3, 2-4) distances.
struct DistanceCubes {
  double a;
  double b;
};

DistanceCubes compute_distance_cubes(const TrapezoidParams& params);

// Unvalidated evaluation for scans that may touch alpha = 0 or alpha > 1.
DistanceCubes distance_cubes_unchecked(double alpha, double beta);

struct TrapezoidConfiguration {
  // Bodies 1..4: M at (-0.5, -r_B), m at (-alpha/2, r_A), m at (alpha/2, r_A),
  // M at (0.5, -r_B).
  std::array<PlanarPoint, 4> positions;
  double r_A;
  double r_B;
};

enum class MassCheck {
  // m > 0 and M > 0.
  strict,
  // Any masses with m + M != 0; r_A or r_B may come out negative.
  relaxed,
};

TrapezoidConfiguration build_configuration(const TrapezoidParams& params,
                                           double m, double M,
                                           MassCheck check = MassCheck::strict);

// Rebuilds the four positions from the separation r = r_A - r_B of the pair
// centers and the bottom-side vector r41 = r_1 - r_4.
std::array<PlanarPoint, 4> lemma1_reconstruct(PlanarPoint r, PlanarPoint r41,
                                              double alpha, double m,
                                              double M);

}  // namespace trapcc::geometry
