#include "zollech/chain_complex.hpp"

namespace zollech {

namespace {

const ModelInfo kModels[] = {
    {Model::S3, "S3", 4, ExactQuantity::integer(1), 1},
    {Model::SstarS2, "S*S2", 2, ExactQuantity::two_pi(), 2},
    {Model::SstarRP2, "S*RP2", 2, ExactQuantity::pi(), 4},
};

// Formal grading polynomial g with I(alpha, beta) = g(alpha) - g(beta) for
// class-matched pairs; g is the absolute grading on class 0.
Rational grading_form(Model model, const OrbitSet& a) {
  Rational s(a.degree());
  switch (model) {
    case Model::S3:
      return s * s + Rational(a.m1) + Rational(3 * a.m2);
    case Model::SstarS2:
      return s * s / Rational(2) + Rational(2 * a.m2);
    case Model::SstarRP2:
      return s * s / Rational(4) - Rational(a.m1, 2) + Rational(3 * a.m2, 2);
  }
  throw DomainError("unknown model");
}

void require_matching_class(Model model, const OrbitSet& alpha, const OrbitSet& beta) {
  if (homology_class(model, alpha) != homology_class(model, beta)) {
    throw HomologyMismatchError("orbit sets " + alpha.to_string() + " and " +
                                beta.to_string() + " lie in different homology classes of " +
                                model_info(model).name);
  }
}

void require_nonnegative(const OrbitSet& a) {
  if (a.m1 < 0 || a.m2 < 0) {
    throw DomainError("orbit set multiplicities must be nonnegative, got " + a.to_string());
  }
}

}  // namespace

std::string OrbitSet::to_string() const {
  return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
}

const ModelInfo& model_info(Model model) {
  return kModels[static_cast<int>(model)];
}

std::int64_t homology_class(Model model, const OrbitSet& alpha) {
  require_nonnegative(alpha);
  return alpha.degree() % model_info(model).homology_modulus;
}

std::int64_t cz_total(Model model, const OrbitSet& alpha) {
  require_nonnegative(alpha);
  const std::int64_t slope = model_info(model).cz_slope;
  // Sum_{k=1}^{m} (slope*k -+ 1) = slope*m(m+1)/2 -+ m.
  const std::int64_t m1 = alpha.m1;
  const std::int64_t m2 = alpha.m2;
  return slope * m1 * (m1 + 1) / 2 - m1 + slope * m2 * (m2 + 1) / 2 + m2;
}

IndexPair index_components(Model model, const OrbitSet& alpha, const OrbitSet& beta) {
  require_matching_class(model, alpha, beta);
  const Rational m1(alpha.m1), m2(alpha.m2), n1(beta.m1), n2(beta.m2);
  IndexPair parts;
  parts.cz_sum_alpha = cz_total(model, alpha);
  parts.cz_sum_beta = cz_total(model, beta);
  switch (model) {
    case Model::SstarS2:
      parts.c_tau = Rational(0);
      parts.q_tau = (-m1 * m1 - m2 * m2 + n1 * n1 + n2 * n2) / Rational(2) + m1 * m2 -
                    n1 * n2;
      break;
    case Model::SstarRP2:
      parts.c_tau = -(m1 + m2 - n1 - n2) / Rational(2);
      parts.q_tau = (-m1 * m1 - m2 * m2 + n1 * n1 + n2 * n2) * Rational(3, 4) +
                    (m1 * m2 - n1 * n2) / Rational(2);
      break;
    case Model::S3:
      // The surfaces bounding gamma_{p_i} have sl = -1 and pairwise lk = 1;
      // expanding the quadratic form over a representative of the relative
      // class gives the closed form below (for beta empty it reduces to
      // -m1^2 + 2 m1 m2 - m2^2).
      parts.c_tau = Rational(0);
      parts.q_tau = -m1 * m1 - m2 * m2 + n1 * n1 + n2 * n2 +
                    Rational(2) * (m1 * m2 - n1 * n2);
      break;
  }
  return parts;
}

std::int64_t ech_index(Model model, const OrbitSet& alpha, const OrbitSet& beta) {
  IndexPair parts = index_components(model, alpha, beta);
  Rational assembled = parts.assembled();
  Rational closed = grading_form(model, alpha) - grading_form(model, beta);
  if (assembled != closed || !assembled.is_integer()) {
    throw ConsistencyError("index assembly mismatch for " + alpha.to_string() + " vs " +
                           beta.to_string() + ": " + assembled.to_string() + " != " +
                           closed.to_string());
  }
  return assembled.num();
}

std::int64_t grading(Model model, const OrbitSet& alpha) {
  require_nonnegative(alpha);
  if (homology_class(model, alpha) != 0) {
    throw GradingUndefinedError("grading is defined only in the trivial class; " +
                                alpha.to_string() + " has class " +
                                std::to_string(homology_class(model, alpha)));
  }
  Rational g = grading_form(model, alpha);
  if (!g.is_integer() || g.num() < 0 || g.num() % 2 != 0) {
    throw ConsistencyError("grading of " + alpha.to_string() +
                           " is not a nonnegative even integer: " + g.to_string());
  }
  return g.num();
}

ExactQuantity action(Model model, const OrbitSet& alpha) {
  require_nonnegative(alpha);
  return model_info(model).action_unit * alpha.degree();
}

std::vector<OrbitSet> generators_by_grading(Model model, std::int64_t max_grading) {
  if (max_grading < 0 || max_grading % 2 != 0) {
    throw DomainError("max grading must be a nonnegative even integer");
  }
  const std::int64_t step = model_info(model).homology_modulus;
  std::vector<OrbitSet> out;
  // Within degree s the grading increases by 2 with m2, and consecutive
  // class-0 degrees produce consecutive grading blocks.
  for (std::int64_t s = 0;; s += step) {
    OrbitSet first{s, 0};
    if (grading(model, first) > max_grading) break;
    for (std::int64_t m2 = 0; m2 <= s; ++m2) {
      OrbitSet a{s - m2, m2};
      if (grading(model, a) <= max_grading) out.push_back(a);
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (grading(model, out[k]) != static_cast<std::int64_t>(2 * k)) {
      throw ConsistencyError("generator order of " + model_info(model).name +
                             " is not one per even grading at position " +
                             std::to_string(k));
    }
  }
  return out;
}

OrbitSet u_map(Model model, const OrbitSet& alpha) {
  if (alpha.is_empty()) {
    throw DomainError("U is undefined on the empty orbit set");
  }
  if (homology_class(model, alpha) != 0) {
    throw GradingUndefinedError("U acts on class-0 generators; " + alpha.to_string() +
                                " is not class 0 in " + model_info(model).name);
  }
  const std::int64_t drop = model_info(model).homology_modulus;
  OrbitSet image = alpha.m2 > 0 ? OrbitSet{alpha.m1 + 1, alpha.m2 - 1}
                                : OrbitSet{0, alpha.m1 - drop};
  if (grading(model, image) != grading(model, alpha) - 2) {
    throw ConsistencyError("U image " + image.to_string() + " of " + alpha.to_string() +
                           " does not lower the grading by 2");
  }
  return image;
}

std::vector<ExactQuantity> spectrum(Model model, std::size_t n) {
  if (n < 1) throw DomainError("spectrum length must be at least 1");
  const ModelInfo& info = model_info(model);
  std::vector<ExactQuantity> out;
  out.reserve(n);
  // Generators of degree s occupy s+1 consecutive gradings, so c_k is
  // action_unit * degree of the k-th block.
  for (std::int64_t s = 0; out.size() < n; s += info.homology_modulus) {
    for (std::int64_t i = 0; i <= s && out.size() < n; ++i) {
      out.push_back(info.action_unit * s);
    }
  }
  return out;
}

}  // namespace zollech
