#include "zollech/moment_map.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "zollech/parallel.hpp"

namespace zollech {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRootTolerance = 1e-12;       // in r and u
constexpr double kQuadratureTarget = 1e-10;    // absolute error contract

double squared_norm(const std::array<double, 2>& v) { return v[0] * v[0] + v[1] * v[1]; }

void validate_params(const PerturbParams& p) {
  if (!(p.epsilon > 0.0) || !(p.epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1)");
  }
  if (!(p.C >= 1.0)) throw DomainError("C must be at least 1");
  double expected = p.variant == Variant::Full        ? 1.0 / std::sqrt(p.epsilon)
                    : p.variant == Variant::Hemisphere ? 1.0
                                                       : p.C;
  if (std::fabs(p.C - expected) > 1e-12 * std::max(1.0, expected)) {
    throw DomainError("C is inconsistent with the declared variant");
  }
}

// Level function of the reduced radial system in u = r^2.
double level_value(const PerturbParams& p, double j, double u) {
  return j * j * (1.0 + u) * (1.0 + u) / (4.0 * u) + p.epsilon / (p.C - u);
}

double level_derivative_u(const PerturbParams& p, double j, double u) {
  double w = p.C - u;
  return j * j * (1.0 - 1.0 / (u * u)) / 4.0 + p.epsilon / (w * w);
}

// Same level function and its derivative in r, used for Newton polish.
double level_value_r(const PerturbParams& p, double j, double r) {
  return level_value(p, j, r * r);
}

double level_derivative_r(const PerturbParams& p, double j, double r) {
  double w = p.C - r * r;
  return j * j * (2.0 * r - 2.0 / (r * r * r)) / 4.0 + 2.0 * p.epsilon * r / (w * w);
}

}  // namespace

PerturbParams PerturbParams::full(double epsilon) {
  PerturbParams p{epsilon, 1.0 / std::sqrt(epsilon), Variant::Full};
  validate_params(p);
  return p;
}

PerturbParams PerturbParams::hemisphere(double epsilon) {
  PerturbParams p{epsilon, 1.0, Variant::Hemisphere};
  validate_params(p);
  return p;
}

PerturbParams PerturbParams::custom(double epsilon, double C) {
  PerturbParams p{epsilon, C, Variant::Custom};
  validate_params(p);
  return p;
}

void PlanarCurve::validate() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].err < 0.0) throw DomainError("curve sample has negative error bound");
    if (std::fabs(samples[i].j) > 1.0) {
      throw DomainError("curve samples must have j in [-1, 1]");
    }
    if (i > 0 && !(samples[i - 1].j < samples[i].j)) {
      throw DomainError("curve samples must be strictly increasing in j");
    }
  }
}

double hamiltonian(const PerturbParams& params, const PhasePoint& p) {
  validate_params(params);
  double x2 = squared_norm(p.x);
  if (!(x2 < params.C)) {
    throw DomainError("phase point has |x|^2 >= C");
  }
  double y2 = squared_norm(p.y);
  double s = 1.0 + x2;
  return y2 * s * s / 4.0 + params.epsilon / (params.C - x2);
}

double angular_momentum(const PhasePoint& p) { return p.x[0] * p.y[1] - p.x[1] * p.y[0]; }

double poisson_bracket_check(const PerturbParams& params, const PhasePoint& p, double h) {
  validate_params(params);
  if (!(h > 0.0) || h > 1e-3) throw DomainError("step must lie in (0, 1e-3]");
  double margin = 2.0 * h * (std::sqrt(squared_norm(p.x)) + h);
  if (!(squared_norm(p.x) + margin < params.C)) {
    throw DomainError("finite-difference stencil reaches the wall |x|^2 = C");
  }

  auto dH = [&](int coord, int component) {
    PhasePoint plus = p;
    PhasePoint minus = p;
    auto& arr_plus = coord == 0 ? plus.x : plus.y;
    auto& arr_minus = coord == 0 ? minus.x : minus.y;
    arr_plus[component] += h;
    arr_minus[component] -= h;
    return (hamiltonian(params, plus) - hamiltonian(params, minus)) / (2.0 * h);
  };
  auto dJ = [&](int coord, int component) {
    PhasePoint plus = p;
    PhasePoint minus = p;
    auto& arr_plus = coord == 0 ? plus.x : plus.y;
    auto& arr_minus = coord == 0 ? minus.x : minus.y;
    arr_plus[component] += h;
    arr_minus[component] -= h;
    return (angular_momentum(plus) - angular_momentum(minus)) / (2.0 * h);
  };

  double bracket = 0.0;
  for (int i = 0; i < 2; ++i) {
    bracket += dH(0, i) * dJ(1, i) - dH(1, i) * dJ(0, i);
  }
  return bracket;
}

RadialMinimum h_min(const PerturbParams& params, double j) {
  validate_params(params);
  if (j == 0.0) {
    // The u -> 0 infimum; the angular term vanishes identically.
    return RadialMinimum{params.epsilon / params.C, 0.0};
  }
  // The derivative is strictly increasing from -inf to +inf on (0, C);
  // bisect it, then polish with Newton on the derivative.
  double lo = std::min(1.0, params.C) / 2.0;
  while (level_derivative_u(params, j, lo) > 0.0) lo /= 2.0;
  double hi = params.C - (params.C - lo) / 4.0;
  while (level_derivative_u(params, j, hi) < 0.0) hi = params.C - (params.C - hi) / 4.0;
  for (int it = 0; it < 200 && hi - lo > 0.25 * kRootTolerance; ++it) {
    double mid = 0.5 * (lo + hi);
    (level_derivative_u(params, j, mid) < 0.0 ? lo : hi) = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    double d1 = level_derivative_u(params, j, u);
    double w = params.C - u;
    double d2 = j * j / (2.0 * u * u * u) + 2.0 * params.epsilon / (w * w * w);
    double step = d1 / d2;
    double next = u - step;
    if (next > lo && next < hi) u = next;
  }
  return RadialMinimum{level_value(params, j, u), u};
}

RadialRoots radial_roots(const PerturbParams& params, double h, double j) {
  validate_params(params);
  if (j == 0.0) throw DomainError("radial roots require j != 0");
  if (!(h <= 1.0)) throw DomainError("level h must be at most 1");
  RadialMinimum bottom = h_min(params, j);
  if (h <= bottom.value) {
    if (bottom.value - h <= 1e-12 * std::max(1.0, std::fabs(h))) {
      double r = std::sqrt(bottom.argmin_u);
      return RadialRoots{r, r};
    }
    throw DomainError("level h is below the minimum of the radial potential");
  }
  if (h - bottom.value <= 1e-12 * std::max(1.0, std::fabs(h))) {
    double r = std::sqrt(bottom.argmin_u);
    return RadialRoots{r, r};
  }

  auto g = [&](double u) { return level_value(params, j, u) - h; };

  // Left root: bracket (0, u*]; g -> +inf at 0.
  double left_lo = bottom.argmin_u;
  while (g(left_lo) < 0.0) left_lo /= 2.0;
  double left_hi = bottom.argmin_u;

  // Right root: bracket [u*, C); approach the wall geometrically in
  // relative distance, where g -> +inf.
  double right_lo = bottom.argmin_u;
  double wall_gap = params.C - bottom.argmin_u;
  double right_hi = params.C - wall_gap / 4.0;
  int guard = 0;
  while (g(right_hi) < 0.0) {
    right_hi = params.C - (params.C - right_hi) / 4.0;
    if (++guard > 200 || !(right_hi < params.C)) {
      throw NumericalInstabilityError("failed to bracket the outer radial root");
    }
  }

  auto bisect = [&](double lo, double hi, bool increasing) {
    // increasing: g goes from negative at lo to positive at hi.
    for (int it = 0; it < 200 && hi - lo > 0.25 * kRootTolerance * std::max(1.0, lo);
         ++it) {
      double mid = 0.5 * (lo + hi);
      bool below = g(mid) < 0.0;
      if (below == increasing) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  double u_left = bisect(left_lo, left_hi, /*increasing=*/false);
  double u_right = bisect(right_lo, right_hi, /*increasing=*/true);

  auto polish = [&](double r, double lo_r, double hi_r) {
    for (int it = 0; it < 3; ++it) {
      double value = level_value_r(params, j, r) - h;
      double slope = level_derivative_r(params, j, r);
      if (slope == 0.0) break;
      double next = r - value / slope;
      if (next > lo_r && next < hi_r) r = next;
    }
    return r;
  };
  double r_star = std::sqrt(bottom.argmin_u);
  double r_min = polish(std::sqrt(u_left), 0.0, r_star);
  double r_max = polish(std::sqrt(u_right), r_star, std::sqrt(params.C));
  return RadialRoots{r_min, r_max};
}

RadialAction radial_action(const PerturbParams& params, double h, double j) {
  RadialRoots roots = radial_roots(params, h, j);
  double width = roots.r_max - roots.r_min;
  if (width <= 0.0) return RadialAction{0.0, 0.0};

  // r = r_min + width sin^2(theta) removes the square-root endpoint zeros.
  auto integrand = [&](double theta) {
    double s = std::sin(theta);
    double r = roots.r_min + width * s * s;
    double one_plus = 1.0 + r * r;
    double radicand =
        4.0 / (one_plus * one_plus) * (h - params.epsilon / (params.C - r * r)) -
        j * j / (r * r);
    if (radicand < 0.0) radicand = 0.0;  // roundoff at the endpoints
    return std::sqrt(radicand) * width * std::sin(2.0 * theta);
  };

  double error_estimate = 0.0;
  double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, kPi / 2.0, 15, 1e-12, &error_estimate);
  value *= 2.0;
  error_estimate *= 2.0;
  if (!(error_estimate <= kQuadratureTarget)) {
    char message[160];
    std::snprintf(message, sizeof(message),
                  "radial action quadrature error %.3e exceeds the 1e-10 contract "
                  "(h=%.6g, j=%.6g, epsilon=%.3e, C=%.6g)",
                  error_estimate, h, j, params.epsilon, params.C);
    throw NumericalInstabilityError(message);
  }
  return RadialAction{value, std::max(error_estimate, 1e-15)};
}

RadialRoots radial_roots_closed_form(double h, double j) {
  if (j == 0.0) throw DomainError("radial roots require j != 0");
  if (!(h > 0.0) || h < j * j) {
    throw DomainError("closed-form roots require h >= j^2");
  }
  // |j|(1 + r^2) = 2 sqrt(h) r.
  double aj = std::fabs(j);
  double disc = std::sqrt(std::max(h - j * j, 0.0));
  return RadialRoots{(std::sqrt(h) - disc) / aj, (std::sqrt(h) + disc) / aj};
}

// Antiderivative of 2 sqrt(4/(1+r^2)^2 - q^2/r^2) for 0 < q < 1 (unperturbed
// integrand at level 1, radial action convention). At the two roots all
// three arcsin arguments reach -+1, so definite integrals over the full
// bracket are evaluated from the symbolic endpoint values instead (the
// arcsins are infinitely steep there).
double unperturbed_antiderivative(double q, double r) {
  double s = std::sqrt(1.0 - q * q);
  auto clamped_asin = [](double v) {
    return std::asin(std::clamp(v, -1.0, 1.0));
  };
  double r2 = r * r;
  double term1 = 2.0 * clamped_asin((r2 - 1.0) / (s * (r2 + 1.0)));
  double term2 = -q * clamped_asin((q * q * r2 + q * q - 2.0) / (2.0 * s));
  double term3 = q * clamped_asin((q * q + q * q * r2 - 2.0 * r2) / (2.0 * s * r2));
  return term1 + term2 + term3;
}

double radial_action_closed_form(Variant variant, double h, double j) {
  if (variant == Variant::Custom) {
    throw DomainError("closed-form action is defined for the full and hemisphere variants");
  }
  if (j == 0.0) throw DomainError("closed-form action requires j != 0");
  if (!(h > 0.0 && h <= 1.0)) throw DomainError("level h must lie in (0, 1]");
  if (h - j * j <= 0.0) return 0.0;  // collapsed level set
  // Scaling r by sqrt(h) reduces level h to level 1 with q = |j| / sqrt(h).
  double q = std::fabs(j) / std::sqrt(h);
  // Antiderivative values: -pi + q pi at the inner root, pi - q pi at the
  // outer root, and exactly 0 at the hemisphere wall r = 1.
  double at_inner = -kPi + q * kPi;
  double at_upper = variant == Variant::Full ? kPi - q * kPi : 0.0;
  return std::sqrt(h) * (at_upper - at_inner);
}

double theta_term(int i, double j) {
  if (i != 1 && i != 2) throw DomainError("theta index must be 1 or 2");
  if (i == 2 && j > 0.0) return 2.0 * kPi * j;
  if (i == 1 && j < 0.0) return -2.0 * kPi * j;
  return 0.0;
}

BoundaryPoint boundary_point(const PerturbParams& params, double j) {
  if (j == 0.0) throw DomainError("boundary points are computed for j != 0");
  RadialAction radial = radial_action(params, 1.0, j);
  return BoundaryPoint{radial.value + theta_term(1, j), radial.value + theta_term(2, j),
                       radial.err};
}

PlanarCurve boundary_curve(const PerturbParams& params, std::span<const double> j_grid) {
  for (std::size_t i = 0; i < j_grid.size(); ++i) {
    if (j_grid[i] == 0.0 || std::fabs(j_grid[i]) >= 1.0) {
      throw DomainError("j grid must lie in (-1, 1) excluding 0");
    }
    if (i > 0 && !(j_grid[i - 1] < j_grid[i])) {
      throw DomainError("j grid must be strictly increasing");
    }
  }
  PlanarCurve curve;
  curve.samples.resize(j_grid.size());
  parallel_for(j_grid.size(), [&](std::size_t i) {
    BoundaryPoint p = boundary_point(params, j_grid[i]);
    curve.samples[i] = CurveSample{j_grid[i], p.rho1, p.rho2, p.err};
  });
  curve.validate();
  return curve;
}

namespace {

CurveSample extrapolate_to(double j, const CurveSample& a, const CurveSample& b) {
  double t = (j - a.j) / (b.j - a.j);
  return CurveSample{j, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y),
                     std::max(a.err, b.err)};
}

}  // namespace

PlanarCurve close_by_continuity(const PlanarCurve& curve) {
  curve.validate();
  const auto& s = curve.samples;
  std::size_t negatives = 0;
  while (negatives < s.size() && s[negatives].j < 0.0) ++negatives;
  std::size_t positives = s.size() - negatives;
  if (negatives < 2 || positives < 2) {
    throw DomainError("closing a curve requires at least two samples per side of j = 0");
  }

  PlanarCurve closed;
  closed.samples.reserve(s.size() + 3);

  CurveSample at_minus_one = extrapolate_to(-1.0, s[1], s[0]);
  closed.samples.push_back(at_minus_one);
  closed.samples.insert(closed.samples.end(), s.begin(), s.begin() + negatives);

  // The two one-sided continuations to j = 0 agree in the limit; their
  // residual disagreement is recorded in the error bound.
  CurveSample from_left = extrapolate_to(0.0, s[negatives - 2], s[negatives - 1]);
  CurveSample from_right = extrapolate_to(0.0, s[negatives + 1], s[negatives]);
  CurveSample at_zero{0.0, 0.5 * (from_left.x + from_right.x),
                      0.5 * (from_left.y + from_right.y),
                      std::max(from_left.err, from_right.err) +
                          0.5 * (std::fabs(from_left.x - from_right.x) +
                                 std::fabs(from_left.y - from_right.y))};
  closed.samples.push_back(at_zero);

  closed.samples.insert(closed.samples.end(), s.begin() + negatives, s.end());
  CurveSample at_plus_one = extrapolate_to(1.0, s[s.size() - 2], s[s.size() - 1]);
  closed.samples.push_back(at_plus_one);

  closed.validate();
  return closed;
}

std::vector<double> default_epsilon_ladder() { return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

std::vector<double> default_j_grid(std::span<const double> epsilon_ladder,
                                   std::size_t per_side) {
  if (epsilon_ladder.empty()) throw DomainError("epsilon ladder must be nonempty");
  if (per_side < 2) throw DomainError("grid needs at least two samples per side");
  double eps_penultimate =
      epsilon_ladder.size() >= 2 ? epsilon_ladder[epsilon_ladder.size() - 2]
                                 : epsilon_ladder.front();
  // Full-variant samples with 2/|j| near sqrt(C) are still in the
  // pre-asymptotic regime and poison the linear extrapolation.
  double j_min = std::min(0.5, 2.5 * std::pow(eps_penultimate, 0.25));
  double j_max = 0.95;
  std::vector<double> grid;
  grid.reserve(2 * per_side);
  for (std::size_t k = 0; k < per_side; ++k) {
    double t = std::cos((2.0 * k + 1.0) * kPi / (4.0 * per_side));  // in (0, 1)
    double j = j_min + (j_max - j_min) * t;
    grid.push_back(-j);
  }
  std::sort(grid.begin(), grid.end());
  for (std::size_t k = per_side; k-- > 0;) grid.push_back(-grid[k]);
  return grid;
}

LimitResult limit_domain(Variant variant, std::span<const double> epsilon_ladder,
                         std::span<const double> j_grid) {
  if (variant == Variant::Custom) {
    throw DomainError("limit domains are defined for the full and hemisphere variants");
  }
  if (epsilon_ladder.empty()) throw DomainError("epsilon ladder must be nonempty");
  for (std::size_t i = 0; i < epsilon_ladder.size(); ++i) {
    if (!(epsilon_ladder[i] > 0.0) || !(epsilon_ladder[i] < 1.0)) {
      throw DomainError("ladder entries must lie in (0, 1)");
    }
    if (i > 0 && !(epsilon_ladder[i] < epsilon_ladder[i - 1])) {
      throw DomainError("epsilon ladder must be strictly decreasing");
    }
  }

  std::vector<PlanarCurve> rungs;
  rungs.reserve(epsilon_ladder.size());
  for (double eps : epsilon_ladder) {
    PerturbParams params = variant == Variant::Full ? PerturbParams::full(eps)
                                                    : PerturbParams::hemisphere(eps);
    rungs.push_back(boundary_curve(params, j_grid));
  }

  ConvergenceReport report;
  report.epsilons.assign(epsilon_ladder.begin(), epsilon_ladder.end());
  for (std::size_t step = 1; step < rungs.size(); ++step) {
    double sup = 0.0;
    for (std::size_t i = 0; i < j_grid.size(); ++i) {
      const CurveSample& prev = rungs[step - 1].samples[i];
      const CurveSample& cur = rungs[step].samples[i];
      sup = std::max({sup, std::fabs(cur.x - prev.x), std::fabs(cur.y - prev.y)});
      // Decreasing epsilon enlarges the domain; a coordinate moving the other
      // way beyond the error bounds is flagged.
      double tolerance = 2.0 * (prev.err + cur.err) + 1e-12;
      double violation =
          std::max(prev.x - cur.x - tolerance, prev.y - cur.y - tolerance);
      report.worst_nesting_violation = std::max(report.worst_nesting_violation, violation);
    }
    report.sup_steps.push_back(sup);
  }
  if (report.worst_nesting_violation > 0.0) {
    throw NumericalInstabilityError(
        "non-monotone ladder convergence: a coordinate decreased by " +
        std::to_string(report.worst_nesting_violation) + " beyond the error bounds");
  }

  PlanarCurve limit;
  limit.samples.resize(j_grid.size());
  const PlanarCurve& last = rungs.back();
  if (rungs.size() == 1) {
    limit = last;
  } else {
    const PlanarCurve& prev = rungs[rungs.size() - 2];
    double e_last = epsilon_ladder[epsilon_ladder.size() - 1];
    double e_prev = epsilon_ladder[epsilon_ladder.size() - 2];
    double factor = e_last / (e_prev - e_last);
    for (std::size_t i = 0; i < j_grid.size(); ++i) {
      double dx = (last.samples[i].x - prev.samples[i].x) * factor;
      double dy = (last.samples[i].y - prev.samples[i].y) * factor;
      double correction = std::max(std::fabs(dx), std::fabs(dy));
      report.max_extrapolation_correction =
          std::max(report.max_extrapolation_correction, correction);
      limit.samples[i] = CurveSample{last.samples[i].j, last.samples[i].x + dx,
                                     last.samples[i].y + dy,
                                     correction + last.samples[i].err};
    }
  }

  return LimitResult{close_by_continuity(limit), std::move(report)};
}

double toric_area(const PlanarCurve& curve) {
  curve.validate();
  const auto& s = curve.samples;
  if (s.size() < 2) throw GeometryError("area needs at least two curve samples");

  std::vector<std::array<double, 2>> poly;
  poly.reserve(s.size() + 1);
  poly.push_back({0.0, 0.0});
  for (const auto& sample : s) poly.push_back({sample.x, sample.y});

  auto orient = [](const std::array<double, 2>& a, const std::array<double, 2>& b,
                   const std::array<double, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  auto segments_cross = [&](std::size_t i, std::size_t k) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    const auto& c = poly[k];
    const auto& d = poly[(k + 1) % poly.size()];
    double o1 = orient(a, b, c), o2 = orient(a, b, d);
    double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
  };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    for (std::size_t k = i + 2; k < poly.size(); ++k) {
      if (i == 0 && k + 1 == poly.size()) continue;  // adjacent through closure
      if (segments_cross(i, k)) {
        throw GeometryError("curve polygon is self-intersecting");
      }
    }
  }

  double twice_area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice_area += a[0] * b[1] - b[0] * a[1];
  }
  return std::fabs(twice_area) / 2.0;
}

}  // namespace zollech
