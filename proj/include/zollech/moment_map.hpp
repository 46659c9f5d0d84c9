#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zollech/errors.hpp"

namespace zollech {

// Which family of perturbed disk bundles is being reconstructed:
// Full couples C = 1/sqrt(epsilon) (punctured sphere, limit a 2pi square),
// Hemisphere fixes C = 1 (limit the triangle x + y <= 2pi).
enum class Variant { Full, Hemisphere, Custom };

struct PerturbParams {
  double epsilon = 0.0;
  double C = 1.0;
  Variant variant = Variant::Custom;

  static PerturbParams full(double epsilon);
  static PerturbParams hemisphere(double epsilon);
  static PerturbParams custom(double epsilon, double C);
};

struct PhasePoint {
  std::array<double, 2> x{0.0, 0.0};
  std::array<double, 2> y{0.0, 0.0};
};

struct CurveSample {
  double j = 0.0;
  double x = 0.0;
  double y = 0.0;
  double err = 0.0;
};

// Sampled curve in moment coordinates; samples strictly increasing in j.
struct PlanarCurve {
  std::vector<CurveSample> samples;

  void validate() const;
};

// H(x, y) = |y|^2 (1 + |x|^2)^2 / 4 + epsilon / (C - |x|^2), on |x|^2 < C.
double hamiltonian(const PerturbParams& params, const PhasePoint& p);

// J(x, y) = x1 y2 - x2 y1.
double angular_momentum(const PhasePoint& p);

// Central-difference estimate of the Poisson bracket {H, J} at p with step h.
// |result| <= 1e-6 for h = 1e-5 away from the wall |x|^2 = C.
double poisson_bracket_check(const PerturbParams& params, const PhasePoint& p, double h);

struct RadialMinimum {
  double value = 0.0;
  double argmin_u = 0.0;  // u = r^2
};

// Minimum over u in (0, C) of j^2 (1+u)^2 / (4u) + epsilon / (C - u),
// located to 1e-12 in u. For j = 0 the infimum epsilon / C (at u -> 0)
// is returned.
RadialMinimum h_min(const PerturbParams& params, double j);

struct RadialRoots {
  double r_min = 0.0;
  double r_max = 0.0;
};

// The two solutions of j^2 (1+r^2)^2 / (4 r^2) + epsilon / (C - r^2) = h in
// (0, sqrt C), to 1e-12 in r. Requires h > h_min (coincident roots are
// returned when h - h_min is below tolerance).
RadialRoots radial_roots(const PerturbParams& params, double h, double j);

struct RadialAction {
  double value = 0.0;
  double err = 0.0;
};

// 2 * integral over [r_min, r_max] of
//   sqrt(4/(1+r^2)^2 (h - epsilon/(C - r^2)) - j^2/r^2) dr.
// The square-root endpoint zeros are removed by r = r_min + (r_max - r_min)
// sin^2(theta) before adaptive Gauss-Kronrod quadrature (absolute error
// <= 1e-10, reported in err).
RadialAction radial_action(const PerturbParams& params, double h, double j);

// Closed-form epsilon = 0 data, used as the oracle for the numeric path.
RadialRoots radial_roots_closed_form(double h, double j);
// Antiderivative of 2 sqrt(4/(1+r^2)^2 - q^2/r^2), 0 < q < 1, valid between
// the two closed-form roots of level 1 (the factor 2 matches the radial
// action convention).
double unperturbed_antiderivative(double q, double r);
// Full: 2pi sqrt(h) - 2pi |j|. Hemisphere: the same integral truncated at
// the wall r = 1, equal to pi sqrt(h) - pi |j|. Evaluated from the symbolic
// endpoint values of the antiderivative above.
double radial_action_closed_form(Variant variant, double h, double j);

// The angular contribution Theta_i(j): 2pi j for i = 2, j > 0; -2pi j for
// i = 1, j < 0; otherwise 0. Extended by 0 at j = 0 (continuity).
double theta_term(int i, double j);

struct BoundaryPoint {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double err = 0.0;
};

// (rho_1, rho_2)(j) = radial_action(h = 1) + Theta_i(j).
BoundaryPoint boundary_point(const PerturbParams& params, double j);

// Boundary samples over a strictly increasing grid in (-1, 1) \ {0};
// evaluated in parallel, deterministically ordered by j.
PlanarCurve boundary_curve(const PerturbParams& params, std::span<const double> j_grid);

// Extends a sampled curve to j in {-1, 0, 1} by linear continuation from the
// two nearest samples on each side; the continuation discrepancy is folded
// into err.
PlanarCurve close_by_continuity(const PlanarCurve& curve);

struct ConvergenceReport {
  std::vector<double> epsilons;
  // sup over samples of |curve_i - curve_{i-1}| per ladder step, both coords.
  std::vector<double> sup_steps;
  // Worst decrease of a coordinate along the ladder beyond 2x error bounds.
  double worst_nesting_violation = 0.0;
  // sup over samples of the Richardson correction applied at the last rung.
  double max_extrapolation_correction = 0.0;
};

struct LimitResult {
  PlanarCurve curve;  // extrapolated limit, closed by continuity
  ConvergenceReport report;
};

// Boundary curves along a strictly decreasing epsilon ladder, checked for
// monotone (nested) convergence, then extrapolated linearly in epsilon.
// Non-monotone convergence beyond the error bounds raises
// NumericalInstabilityError.
LimitResult limit_domain(Variant variant, std::span<const double> epsilon_ladder,
                         std::span<const double> j_grid);

// Default ladder {1e-2, ..., 1e-6} and a ladder-adapted symmetric Chebyshev
// grid: the full-variant regime requires 2/|j| comfortably below
// sqrt(C) = epsilon^{-1/4} at the two finest rungs, so the grid spans
// +-[2.5 * eps_penultimate^{1/4}, 0.95].
std::vector<double> default_epsilon_ladder();
std::vector<double> default_j_grid(std::span<const double> epsilon_ladder,
                                   std::size_t per_side = 16);

// Area of the region bounded by the coordinate axes and the curve
// (shoelace over the polygon origin -> samples). Self-intersecting input
// raises GeometryError.
double toric_area(const PlanarCurve& curve);

}  // namespace zollech
