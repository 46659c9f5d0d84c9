#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zollech/capacity_sequence.hpp"
#include "zollech/exact.hpp"

namespace zollech {

// Outcome of the term-wise capacity comparison c_k(inner) <= c_k(outer).
struct DominanceResult {
  bool holds = true;
  std::size_t witness_k = 0;  // smallest failing index when !holds
  ExactQuantity inner_term;
  ExactQuantity outer_term;
};

// Exact comparison over k = 0..K; both sequences must share a unit.
DominanceResult dominates(const CapacitySequence& inner, const CapacitySequence& outer,
                          std::size_t K);

// Comparison between sequences in different units (rational vs rational*pi),
// decided in floating point with an ambiguity guard: differences below the
// guard raise NumericalInstabilityError instead of returning a verdict.
DominanceResult dominates_mixed_units(const CapacitySequence& inner,
                                      const CapacitySequence& outer, std::size_t K);

struct CapacityBound {
  ExactQuantity bound;     // min over k of c_k(target) / N(1,1)_k
  std::size_t attained_k;  // first k attaining the minimum
};

// Upper bound for the Gromov width from k-th capacities:
// c_k(B(a)) = a * N(1,1)_k <= c_k(target).
CapacityBound gromov_width_capacity_bound(const CapacitySequence& target, std::size_t K);

// Upper bound for the Gromov width from volume: vol B(a) = a^2/2 <= volume,
// i.e. a <= sqrt(2 * volume). The volume carries pi^2.
double gromov_width_volume_bound(const ExactQuantity& volume);

// Exact toric volumes of the disk cotangent bundles (areas of the limit
// moment images): 4pi^2 for S^2 and 2pi^2 for RP^2.
ExactQuantity disk_cotangent_volume(Surface surface);

// A symplectic embedding of a model domain into one of the two disk
// cotangent bundles, used as a lower-bound certificate.
struct EmbeddingConstruction {
  std::string id;          // "(i)".."(iv)"
  std::string source;      // e.g. "int B(2pi)"
  Surface target;
  std::optional<ExactQuantity> ball_capacity;  // set when the source is a ball
};

// The registered constructions: int B(2pi) into D*S2 and D*RP2,
// int E(2pi,4pi) into D*S2, int P(2pi,2pi) into D*S2.
const std::vector<EmbeddingConstruction>& embedding_registry();

struct WidthCertificate {
  ExactQuantity width;
  ExactQuantity upper;
  std::string upper_description;
  std::optional<std::size_t> upper_attained_k;  // set for the capacity route
  ExactQuantity lower;
  std::string lower_description;
};

// Gromov width of D*S2 or D*RP2 (= 2pi), with the upper bound recomputed
// (capacities for S2, volume for RP2) and the lower bound read off the
// embedding registry; the two must agree exactly.
WidthCertificate gromov_width(Surface surface, std::size_t K = 100);

// Volume estimate c_k^2 / (4k) from the capacity asymptotics.
double volume_from_capacities(const CapacitySequence& seq, std::size_t k);

}  // namespace zollech
