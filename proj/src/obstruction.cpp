#include "zollech/obstruction.hpp"

#include <cmath>

namespace zollech {

namespace {

DominanceResult compare_terms(const CapacitySequence& inner, const CapacitySequence& outer,
                              std::size_t K, bool mixed_units) {
  DominanceResult result;
  for (std::size_t k = 0; k <= K; ++k) {
    ExactQuantity ci = inner.term(k);
    ExactQuantity co = outer.term(k);
    bool leq;
    if (mixed_units) {
      double di = ci.to_double();
      double d_out = co.to_double();
      double gap = di - d_out;
      double scale = std::max({1.0, std::fabs(di), std::fabs(d_out)});
      if (ci != co && std::fabs(gap) < 1e-9 * scale) {
        throw NumericalInstabilityError(
            "capacity comparison at k=" + std::to_string(k) + " between " + ci.to_string() +
            " and " + co.to_string() + " is too close to decide in floating point");
      }
      leq = gap <= 0.0;
    } else {
      leq = ci <= co;
    }
    if (!leq) {
      result.holds = false;
      result.witness_k = k;
      result.inner_term = ci;
      result.outer_term = co;
      return result;
    }
  }
  return result;
}

}  // namespace

DominanceResult dominates(const CapacitySequence& inner, const CapacitySequence& outer,
                          std::size_t K) {
  if (K < 1) throw DomainError("dominance horizon K must be at least 1");
  if (inner.pi_power() != outer.pi_power()) {
    throw UnitError("capacity sequences " + inner.rule() + " and " + outer.rule() +
                    " are in different units");
  }
  return compare_terms(inner, outer, K, /*mixed_units=*/false);
}

DominanceResult dominates_mixed_units(const CapacitySequence& inner,
                                      const CapacitySequence& outer, std::size_t K) {
  if (K < 1) throw DomainError("dominance horizon K must be at least 1");
  if (inner.pi_power() == outer.pi_power()) return dominates(inner, outer, K);
  return compare_terms(inner, outer, K, /*mixed_units=*/true);
}

CapacityBound gromov_width_capacity_bound(const CapacitySequence& target, std::size_t K) {
  if (K < 1) throw DomainError("bound horizon K must be at least 1");
  CapacitySequence lattice =
      CapacitySequence::combinations(ExactQuantity::integer(1), ExactQuantity::integer(1));
  CapacityBound best{target.term(1) / lattice.term(1), 1};
  for (std::size_t k = 2; k <= K; ++k) {
    ExactQuantity ratio = target.term(k) / lattice.term(k);
    if (ratio < best.bound) best = CapacityBound{ratio, k};
  }
  return best;
}

double gromov_width_volume_bound(const ExactQuantity& volume) {
  if (volume.sign() <= 0) throw DomainError("volume must be positive");
  return std::sqrt(2.0 * volume.to_double());
}

ExactQuantity disk_cotangent_volume(Surface surface) {
  switch (surface) {
    case Surface::S2:
      return ExactQuantity::pi_squared_multiple(Rational(4));
    case Surface::RP2:
      return ExactQuantity::pi_squared_multiple(Rational(2));
  }
  throw DomainError("unknown surface");
}

const std::vector<EmbeddingConstruction>& embedding_registry() {
  static const std::vector<EmbeddingConstruction> registry = {
      {"(i)", "int B(2pi)", Surface::S2, ExactQuantity::two_pi()},
      {"(ii)", "int B(2pi)", Surface::RP2, ExactQuantity::two_pi()},
      {"(iii)", "int E(2pi,4pi)", Surface::S2, std::nullopt},
      {"(iv)", "int P(2pi,2pi)", Surface::S2, std::nullopt},
  };
  return registry;
}

WidthCertificate gromov_width(Surface surface, std::size_t K) {
  WidthCertificate cert;
  if (surface == Surface::S2) {
    CapacityBound bound = gromov_width_capacity_bound(dstar_capacities(Surface::S2), K);
    cert.upper = bound.bound;
    cert.upper_attained_k = bound.attained_k;
    cert.upper_description =
        "capacity ratio c_k/N(1,1)_k at k=" + std::to_string(bound.attained_k);
  } else {
    // sqrt(2 * 2pi^2) = sqrt(4pi^2) = 2pi, exactly representable.
    ExactQuantity doubled = disk_cotangent_volume(surface) * ExactQuantity::integer(2);
    auto root = doubled.sqrt_exact();
    if (!root) {
      throw ConsistencyError("volume bound for D*RP2 is not an exact quantity");
    }
    cert.upper = *root;
    cert.upper_description = "volume bound sqrt(2*vol), vol = " +
                             disk_cotangent_volume(surface).to_string();
  }

  bool found = false;
  for (const auto& item : embedding_registry()) {
    if (item.target != surface || !item.ball_capacity) continue;
    if (!found || cert.lower < *item.ball_capacity) {
      cert.lower = *item.ball_capacity;
      cert.lower_description = "embedding registry " + item.id + ": " + item.source +
                               " -> D*" + (surface == Surface::S2 ? "S2" : "RP2");
      found = true;
    }
  }
  if (!found) throw ConsistencyError("no registered ball embedding for the target");

  if (cert.upper != cert.lower) {
    throw ConsistencyError("width certificate mismatch: upper " + cert.upper.to_string() +
                           " vs lower " + cert.lower.to_string());
  }
  cert.width = cert.upper;
  return cert;
}

double volume_from_capacities(const CapacitySequence& seq, std::size_t k) {
  if (k < 1) throw DomainError("volume asymptotics require k >= 1");
  double ck = seq.term(k).to_double();
  return ck * ck / (4.0 * static_cast<double>(k));
}

}  // namespace zollech
