#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zollech/exact.hpp"

namespace zollech {

namespace detail {
class SequenceState;
}

// A lazily enumerated nondecreasing sequence of exact quantities, indexed
// from 0 with term(0) = 0. Terms are cached append-only; the cache is shared
// by copies of the handle and safe for concurrent callers.
class CapacitySequence {
 public:
  // N(a, b): all values m*a + n*b with m, n >= 0, nondecreasing, with
  // multiplicity, ties ordered by (m, n). Requires a, b > 0 in the same unit.
  static CapacitySequence combinations(const ExactQuantity& a, const ExactQuantity& b);

  // Subsequence of the terms of `base` that are integer multiples of j,
  // in order. The base must have integer coefficients.
  static CapacitySequence multiples_of(const CapacitySequence& base, std::int64_t j);

  // Term-wise product with lambda > 0; pi powers add.
  static CapacitySequence scaled(const CapacitySequence& base, const ExactQuantity& lambda);

  // Finite explicit sequence (must be nondecreasing and start at 0).
  static CapacitySequence from_terms(std::vector<ExactQuantity> terms);

  ExactQuantity term(std::size_t k) const;
  std::vector<ExactQuantity> prefix(std::size_t n) const;

  // Common pi power of all (nonzero) terms.
  int pi_power() const;
  // Human-readable generating rule, e.g. "2pi*M_2(N(1,1))".
  const std::string& rule() const;

 private:
  explicit CapacitySequence(std::shared_ptr<detail::SequenceState> state)
      : state_(std::move(state)) {}

  std::shared_ptr<detail::SequenceState> state_;
};

// First n terms of N(a, b).
std::vector<ExactQuantity> nseq_prefix(const ExactQuantity& a, const ExactQuantity& b,
                                       std::size_t n);

// k-th term of N(a, b) (0-indexed) without materializing more than O(k)
// candidates.
ExactQuantity nseq_kth(const ExactQuantity& a, const ExactQuantity& b, std::size_t k);

// ECH capacities of the ellipsoid E(a, b) and the ball B(a) = E(a, a).
CapacitySequence ellipsoid_capacities(const ExactQuantity& a, const ExactQuantity& b);
CapacitySequence ball_capacities(const ExactQuantity& a);

enum class Surface { S2, RP2 };

// ECH capacities of the disk cotangent bundle over the round surface:
// D*S^2 -> 2pi * M_2(N(1,1)),  D*RP^2 -> pi * M_4(N(1,1)).
CapacitySequence dstar_capacities(Surface surface);

}  // namespace zollech
