#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zollech/exact.hpp"

namespace zollech {

// Multiplicities (m1, m2) of the two surviving Reeb orbits gamma_{p1},
// gamma_{p2}; (0, 0) is the empty orbit set.
struct OrbitSet {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;

  bool operator==(const OrbitSet&) const = default;
  bool is_empty() const { return m1 == 0 && m2 == 0; }
  std::int64_t degree() const { return m1 + m2; }
  std::string to_string() const;
};

// The three Zoll contact manifolds treated here. Each model is determined by
// a Conley-Zehnder slope (CZ(gamma_{p1}^k) = slope*k - 1, CZ(gamma_{p2}^k) =
// slope*k + 1), the action of a simple orbit, and the order of H_1.
enum class Model { S3, SstarS2, SstarRP2 };

struct ModelInfo {
  Model model;
  std::string name;
  int cz_slope;               // 4, 2, 2
  ExactQuantity action_unit;  // 1, 2pi, pi
  std::int64_t homology_modulus;  // 1, 2, 4
};

const ModelInfo& model_info(Model model);

// The pieces of the index formula I = c_tau + Q_tau + CZ(alpha) - CZ(beta).
// c_tau and Q_tau are rational before assembly (halves and quarters occur);
// the assembled sum is always an integer.
struct IndexPair {
  Rational c_tau;
  Rational q_tau;
  std::int64_t cz_sum_alpha = 0;
  std::int64_t cz_sum_beta = 0;

  Rational assembled() const {
    return c_tau + q_tau + Rational(cz_sum_alpha) - Rational(cz_sum_beta);
  }
};

// (m1 + m2) mod the model's homology modulus.
std::int64_t homology_class(Model model, const OrbitSet& alpha);

// Sum_{k<=m1} (slope*k - 1) + Sum_{k<=m2} (slope*k + 1).
std::int64_t cz_total(Model model, const OrbitSet& alpha);

// Closed-form relative first Chern class and self-intersection term for the
// unique relative class from alpha to beta. Requires matching homology
// classes.
IndexPair index_components(Model model, const OrbitSet& alpha, const OrbitSet& beta);

// The ECH index I(alpha, beta); assembled from index_components and checked
// against the closed-form grading difference.
std::int64_t ech_index(Model model, const OrbitSet& alpha, const OrbitSet& beta);

// Absolute grading I(alpha, empty) of a class-0 orbit set; a nonnegative
// even integer.
std::int64_t grading(Model model, const OrbitSet& alpha);

// Symplectic action: action_unit * (m1 + m2).
ExactQuantity action(Model model, const OrbitSet& alpha);

// All class-0 orbit sets with grading <= max_grading, ordered by grading.
// Verifies that there is exactly one generator per even grading.
std::vector<OrbitSet> generators_by_grading(Model model, std::int64_t max_grading);

// Degree-2 U map on class-0 generators:
//   (m1, m2) -> (m1 + 1, m2 - 1)      if m2 > 0,
//   (m1, 0)  -> (0, m1 - d)           if m2 = 0,
// where d is the homology modulus (planes bound gamma_{p1}^d). For S3 the
// second case is an inference from the graded generator order rather than a
// stated formula; it is what makes U shift every generator down one slot.
OrbitSet u_map(Model model, const OrbitSet& alpha);

// ECH spectrum c_0..c_{n-1}: action of the unique class-0 generator in
// grading 2k. Independent of the lattice-combination route.
std::vector<ExactQuantity> spectrum(Model model, std::size_t n);

}  // namespace zollech
