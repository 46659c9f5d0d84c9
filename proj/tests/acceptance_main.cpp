// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any fail.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "zollech/parallel.hpp"

#include "zollech/capacity_sequence.hpp"
#include "zollech/chain_complex.hpp"
#include "zollech/exact.hpp"
#include "zollech/moment_map.hpp"
#include "zollech/obstruction.hpp"

namespace {

using zollech::CapacitySequence;
using zollech::ExactQuantity;
using zollech::Model;
using zollech::OrbitSet;
using zollech::PerturbParams;
using zollech::Rational;
using zollech::Surface;
using zollech::Variant;

constexpr double kPi = 3.14159265358979323846;

int failures = 0;

double run_criterion(int number, const std::string& label,
                     const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count();
  std::printf("[%s] %d. %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              seconds, detail.empty() ? "" : " - ", detail.c_str());
  if (!ok) ++failures;
  return seconds;
}

std::vector<std::string> to_strings(const std::vector<ExactQuantity>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

bool criterion_theorem2_lists(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  auto s2 = to_strings(zollech::dstar_capacities(Surface::S2).prefix(9));
  auto rp2 = to_strings(zollech::dstar_capacities(Surface::RP2).prefix(7));
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        start)
                  .count();
  bool s2_ok = s2 == std::vector<std::string>{"0", "4pi", "4pi", "4pi", "8pi", "8pi", "8pi",
                                              "8pi", "8pi"};
  bool rp2_ok =
      rp2 == std::vector<std::string>{"0", "4pi", "4pi", "4pi", "4pi", "4pi", "8pi"};
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f ms", ms);
  detail = buffer;
  return s2_ok && rp2_ok && ms < 10.0;
}

bool criterion_spectrum_equivalence(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  const std::size_t n = 1000;
  struct Pair {
    Model model;
    CapacitySequence route;
  };
  Pair pairs[] = {
      {Model::S3, zollech::ball_capacities(ExactQuantity::integer(1))},
      {Model::SstarS2, zollech::dstar_capacities(Surface::S2)},
      {Model::SstarRP2, zollech::dstar_capacities(Surface::RP2)},
  };
  for (const auto& pair : pairs) {
    auto chain = zollech::spectrum(pair.model, n);
    auto caps = pair.route.prefix(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (chain[k] != caps[k]) {
        detail = zollech::model_info(pair.model).name + " differs at k=" + std::to_string(k);
        return false;
      }
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = "k < 1000, all three models";
  return s < 1.0;
}

bool criterion_index_suite(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  const Model models[] = {Model::S3, Model::SstarS2, Model::SstarRP2};
  for (Model model : models) {
    std::vector<OrbitSet> sets;
    for (std::int64_t degree = 0; degree <= 40; ++degree) {
      for (std::int64_t m2 = 0; m2 <= degree; ++m2) sets.push_back({degree - m2, m2});
    }
    // Parity and assembly-equals-closed-form on every class-matched pair
    // (ech_index itself asserts the assembly against the closed form).
    std::vector<std::vector<OrbitSet>> by_class(
        zollech::model_info(model).homology_modulus);
    for (const auto& s : sets) by_class[zollech::homology_class(model, s)].push_back(s);
    std::atomic<std::int64_t> odd_pairs{0};
    for (const auto& bucket : by_class) {
      zollech::parallel_for(bucket.size(), [&](std::size_t i) {
        for (const auto& b : bucket) {
          if (zollech::ech_index(model, bucket[i], b) % 2 != 0) ++odd_pairs;
        }
      });
    }
    if (odd_pairs != 0) {
      detail = "odd index pairs in " + zollech::model_info(model).name;
      return false;
    }
    // Additivity on triples with entries <= 12, via the pairwise table.
    std::vector<OrbitSet> small;
    for (const auto& s : sets) {
      if (s.degree() <= 12) small.push_back(s);
    }
    std::vector<std::vector<std::int64_t>> table(small.size());
    std::vector<std::int64_t> cls(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
      cls[i] = zollech::homology_class(model, small[i]);
    }
    zollech::parallel_for(small.size(), [&](std::size_t i) {
      table[i].assign(small.size(), 0);
      for (std::size_t k = 0; k < small.size(); ++k) {
        if (cls[i] == cls[k]) {
          table[i][k] = zollech::ech_index(model, small[i], small[k]);
        }
      }
    });
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (std::size_t k = 0; k < small.size(); ++k) {
        if (cls[i] != cls[k]) continue;
        for (std::size_t l = 0; l < small.size(); ++l) {
          if (cls[k] != cls[l]) continue;
          if (table[i][k] + table[k][l] != table[i][l]) {
            detail = "additivity fails at " + small[i].to_string() + ", " +
                     small[k].to_string() + ", " + small[l].to_string();
            return false;
          }
        }
      }
    }
    // Grading bijection over the degree <= 40 range and the U-map descent.
    std::int64_t top = zollech::grading(model, {40, 0}) >= zollech::grading(model, {0, 40})
                           ? zollech::grading(model, {0, 40})
                           : zollech::grading(model, {40, 0});
    auto generators = zollech::generators_by_grading(model, top);  // asserts the bijection
    std::atomic<std::int64_t> bad_descents{0};
    zollech::parallel_for(generators.size(), [&](std::size_t i) {
      std::int64_t steps = 0;
      OrbitSet current = generators[i];
      while (!current.is_empty()) {
        current = zollech::u_map(model, current);  // asserts degree -2
        ++steps;
      }
      if (steps != zollech::grading(model, generators[i]) / 2) ++bad_descents;
    });
    if (bad_descents != 0) {
      detail = "descent length mismatch in " + zollech::model_info(model).name;
      return false;
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer),
                "pairs <= 40, triples <= 12, bijection, descent; %.2f s", s);
  detail = buffer;
  return s < 1.0;
}

bool criterion_gromov_widths(std::string& detail) {
  auto s2 = zollech::gromov_width(Surface::S2);
  auto rp2 = zollech::gromov_width(Surface::RP2);
  if (s2.width != ExactQuantity::two_pi() || rp2.width != ExactQuantity::two_pi()) {
    detail = "width is not 2pi";
    return false;
  }
  if (!s2.upper_attained_k || *s2.upper_attained_k != 3) {
    detail = "S2 upper bound not attained at k=3";
    return false;
  }
  if (rp2.upper_description.find("volume") == std::string::npos) {
    detail = "RP2 bound is not the volume route";
    return false;
  }
  detail = "upper k=3 (S2), sqrt(2*2pi^2) (RP2)";
  return true;
}

bool criterion_quadrature_closed_form(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  PerturbParams params = PerturbParams::full(1e-8);
  double worst = 0.0;
  for (int k = 0; k < 33; ++k) {
    double t = std::cos((2.0 * k + 1.0) * kPi / (4.0 * 33.0));
    double j = 0.1 + (0.95 - 0.1) * t;
    auto action = zollech::radial_action(params, 1.0, j);
    worst = std::max(worst, std::fabs(action.value - (2.0 * kPi - 2.0 * kPi * j)));
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "max |dev| = %.2e", worst);
  detail = buffer;
  return worst <= 1e-6 && s < 5.0;
}

bool criterion_limit_domains(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  auto ladder = zollech::default_epsilon_ladder();
  auto grid = zollech::default_j_grid(ladder);

  auto full = zollech::limit_domain(Variant::Full, ladder, grid);
  double full_sup = 0.0;
  for (const auto& s : full.curve.samples) {
    double ex = s.j >= 0.0 ? 2.0 * kPi * (1.0 - s.j) : 2.0 * kPi;
    double ey = s.j >= 0.0 ? 2.0 * kPi : 2.0 * kPi * (1.0 + s.j);
    full_sup = std::max({full_sup, std::fabs(s.x - ex), std::fabs(s.y - ey)});
  }
  double full_area = zollech::toric_area(full.curve);

  auto hemi = zollech::limit_domain(Variant::Hemisphere, ladder, grid);
  double hemi_sup = 0.0;
  for (const auto& s : hemi.curve.samples) {
    hemi_sup = std::max({hemi_sup, std::fabs(s.x - kPi * (1.0 - s.j)),
                         std::fabs(s.y - kPi * (1.0 + s.j))});
  }
  double hemi_area = zollech::toric_area(hemi.curve);

  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "sup full %.2e, hemi %.2e; area dev full %.2e, hemi %.2e; %.1f s",
                full_sup, hemi_sup, std::fabs(full_area - 4.0 * kPi * kPi),
                std::fabs(hemi_area - 2.0 * kPi * kPi), s);
  detail = buffer;
  return full_sup <= 1e-4 && hemi_sup <= 1e-4 &&
         std::fabs(full_area - 4.0 * kPi * kPi) <= 1e-3 &&
         std::fabs(hemi_area - 2.0 * kPi * kPi) <= 1e-3 && s < 60.0;
}

bool criterion_poisson(std::string& detail) {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (double eps : {0.1, 0.01}) {
    for (double C : {1.0, 2.0, 10.0}) {
      PerturbParams params = PerturbParams::custom(eps, C);
      int accepted = 0;
      while (accepted < 100) {
        double radius = 0.85 * std::sqrt(C);
        zollech::PhasePoint p{{radius * unit(rng), radius * unit(rng)},
                              {2.0 * unit(rng), 2.0 * unit(rng)}};
        if (p.x[0] * p.x[0] + p.x[1] * p.x[1] >= 0.8 * C) continue;
        ++accepted;
        worst = std::max(worst, std::fabs(zollech::poisson_bracket_check(params, p, 1e-5)));
      }
    }
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "max |{H,J}| = %.2e", worst);
  detail = buffer;
  return worst <= 1e-6;
}

bool criterion_volume_asymptotics(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  const std::size_t k = 100000;
  double s2 = zollech::volume_from_capacities(zollech::dstar_capacities(Surface::S2), k);
  double rp2 = zollech::volume_from_capacities(zollech::dstar_capacities(Surface::RP2), k);
  double ball =
      zollech::volume_from_capacities(zollech::ball_capacities(ExactQuantity::integer(1)), k);
  double dev_s2 = std::fabs(s2 - 4.0 * kPi * kPi) / (4.0 * kPi * kPi);
  double dev_rp2 = std::fabs(rp2 - 2.0 * kPi * kPi) / (2.0 * kPi * kPi);
  double dev_ball = std::fabs(ball - 0.5) / 0.5;
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "rel dev S2 %.3f%%, RP2 %.3f%%, B(1) %.3f%%; %.2f s",
                100 * dev_s2, 100 * dev_rp2, 100 * dev_ball, s);
  detail = buffer;
  return dev_s2 <= 0.02 && dev_rp2 <= 0.02 && dev_ball <= 0.01 && s < 5.0;
}

bool criterion_brute_force_oracle(std::string& detail) {
  const std::pair<Rational, Rational> cases[] = {
      {Rational(1), Rational(1)},       {Rational(1), Rational(2)},
      {Rational(2), Rational(3)},       {Rational(1, 2), Rational(1)},
      {Rational(3, 4), Rational(5, 2)}, {Rational(1, 3), Rational(1)},
      {Rational(5, 4), Rational(3, 4)}, {Rational(2), Rational(2)},
      {Rational(1, 4), Rational(5)},    {Rational(7, 4), Rational(7, 3)},
      {Rational(3), Rational(5)},       {Rational(1, 2), Rational(1, 2)},
  };
  const std::size_t n = 200;
  for (const auto& [ra, rb] : cases) {
    ExactQuantity a{ra}, b{rb};
    std::vector<ExactQuantity> oracle;
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t l = 0; l <= n; ++l) {
        oracle.push_back(a * static_cast<std::int64_t>(m) +
                         b * static_cast<std::int64_t>(l));
      }
    }
    std::sort(oracle.begin(), oracle.end());
    oracle.resize(n);
    if (zollech::nseq_prefix(a, b, n) != oracle) {
      detail = "mismatch for a=" + a.to_string() + ", b=" + b.to_string();
      return false;
    }
  }
  detail = "12 generator pairs, 200 terms each";
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "Theorem-2 capacity lists, exact", criterion_theorem2_lists);
  run_criterion(2, "spectrum equals the capacity route (k < 1000)",
                criterion_spectrum_equivalence);
  run_criterion(3, "index parity, additivity, assembly, bijection, U descent",
                criterion_index_suite);
  run_criterion(4, "Gromov widths with matching certificates", criterion_gromov_widths);
  run_criterion(5, "full-variant quadrature vs closed form (33 samples)",
                criterion_quadrature_closed_form);
  run_criterion(6, "limit domains: square and triangle with areas",
                criterion_limit_domains);
  run_criterion(7, "Poisson commutation at 600 seeded points", criterion_poisson);
  run_criterion(8, "volume from capacity asymptotics at k = 1e5",
                criterion_volume_asymptotics);
  run_criterion(9, "brute-force combination oracle (12-case grid)",
                criterion_brute_force_oracle);
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
