#include "zollech/capacity_sequence.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <utility>

namespace zollech {

namespace detail {

class SequenceState {
 public:
  SequenceState(std::string rule, int pi_power)
      : rule_(std::move(rule)), pi_power_(pi_power) {}
  virtual ~SequenceState() = default;

  ExactQuantity term(std::size_t k) {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure(k + 1);
    return cache_[k];
  }

  std::vector<ExactQuantity> prefix(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure(n);
    return std::vector<ExactQuantity>(cache_.begin(), cache_.begin() + n);
  }

  const std::string& rule() const { return rule_; }
  int pi_power() const { return pi_power_; }

 protected:
  // Appends the next term; called with the cache lock held.
  virtual ExactQuantity next() = 0;

  void ensure(std::size_t n) {
    while (cache_.size() < n) {
      ExactQuantity t = next();
      if (!cache_.empty() && t < cache_.back()) {
        throw ConsistencyError("sequence '" + rule_ + "' produced a decreasing term");
      }
      cache_.push_back(t);
    }
  }

  std::size_t cached() const { return cache_.size(); }
  const ExactQuantity& cached_term(std::size_t k) const { return cache_[k]; }

 private:
  std::mutex mutex_;
  std::vector<ExactQuantity> cache_;
  std::string rule_;
  int pi_power_;
};

namespace {

// Lazy k-way merge over the rows {m*a + n*b : n >= 0}. A row's head is
// inserted when the previous row's head is popped, so the heap holds O(sqrt k)
// entries for the sequences used here. Ties break by (m, n).
class CombosState final : public SequenceState {
 public:
  CombosState(ExactQuantity a, ExactQuantity b, std::string rule)
      : SequenceState(std::move(rule), a.pi_power()), a_(a), b_(b) {
    heap_.push(Entry{ExactQuantity::zero(), 0, 0});
  }

 protected:
  ExactQuantity next() override {
    Entry top = heap_.top();
    heap_.pop();
    heap_.push(Entry{top.value + b_, top.m, top.n + 1});
    if (top.n == 0) {
      heap_.push(Entry{a_ * static_cast<std::int64_t>(top.m + 1), top.m + 1, 0});
    }
    return top.value;
  }

 private:
  struct Entry {
    ExactQuantity value;
    std::uint64_t m;
    std::uint64_t n;
  };
  struct Greater {
    bool operator()(const Entry& x, const Entry& y) const {
      if (x.value != y.value) return y.value < x.value;
      if (x.m != y.m) return x.m > y.m;
      return x.n > y.n;
    }
  };

  ExactQuantity a_;
  ExactQuantity b_;
  std::priority_queue<Entry, std::vector<Entry>, Greater> heap_;
};

class FilteredState final : public SequenceState {
 public:
  FilteredState(std::shared_ptr<SequenceState> base, std::int64_t j, std::string rule)
      : SequenceState(std::move(rule), base->pi_power()), base_(std::move(base)), j_(j) {}

 protected:
  ExactQuantity next() override {
    for (;;) {
      ExactQuantity t = base_->term(cursor_++);
      if (!t.coeff().is_integer()) {
        throw DomainError("multiples filter applied to the non-integer term " +
                          t.to_string());
      }
      if (t.coeff().num() % j_ == 0) return t;
    }
  }

 private:
  std::shared_ptr<SequenceState> base_;
  std::int64_t j_;
  std::size_t cursor_ = 0;
};

class ScaledState final : public SequenceState {
 public:
  ScaledState(std::shared_ptr<SequenceState> base, ExactQuantity lambda, std::string rule)
      : SequenceState(std::move(rule), base->pi_power() + lambda.pi_power()),
        base_(std::move(base)),
        lambda_(lambda) {}

 protected:
  ExactQuantity next() override { return base_->term(cached()) * lambda_; }

 private:
  std::shared_ptr<SequenceState> base_;
  ExactQuantity lambda_;
};

class ExplicitState final : public SequenceState {
 public:
  ExplicitState(std::vector<ExactQuantity> terms, int pi_power)
      : SequenceState("explicit", pi_power), terms_(std::move(terms)) {}

 protected:
  ExactQuantity next() override {
    if (cached() >= terms_.size()) {
      throw ExhaustionError("explicit sequence has only " +
                            std::to_string(terms_.size()) + " terms");
    }
    return terms_[cached()];
  }

 private:
  std::vector<ExactQuantity> terms_;
};

}  // namespace
}  // namespace detail

namespace {

detail::SequenceState* require_state(const std::shared_ptr<detail::SequenceState>& s) {
  return s.get();
}

void require_positive(const ExactQuantity& v, const char* name) {
  if (v.sign() <= 0) {
    throw DomainError(std::string(name) + " must be positive, got " + v.to_string());
  }
}

}  // namespace

CapacitySequence CapacitySequence::combinations(const ExactQuantity& a,
                                                const ExactQuantity& b) {
  require_positive(a, "combination generator a");
  require_positive(b, "combination generator b");
  if (a.pi_power() != b.pi_power()) {
    throw UnitError("combination generators " + a.to_string() + ", " + b.to_string() +
                    " carry different pi powers");
  }
  std::string rule = "N(" + a.to_string() + "," + b.to_string() + ")";
  return CapacitySequence(std::make_shared<detail::CombosState>(a, b, std::move(rule)));
}

CapacitySequence CapacitySequence::multiples_of(const CapacitySequence& base,
                                                std::int64_t j) {
  if (j < 1) throw DomainError("multiples filter requires j >= 1");
  std::string rule = "M_" + std::to_string(j) + "(" + base.rule() + ")";
  return CapacitySequence(
      std::make_shared<detail::FilteredState>(base.state_, j, std::move(rule)));
}

CapacitySequence CapacitySequence::scaled(const CapacitySequence& base,
                                          const ExactQuantity& lambda) {
  require_positive(lambda, "scale factor");
  std::string rule = lambda.to_string() + "*" + base.rule();
  return CapacitySequence(
      std::make_shared<detail::ScaledState>(base.state_, lambda, std::move(rule)));
}

CapacitySequence CapacitySequence::from_terms(std::vector<ExactQuantity> terms) {
  if (terms.empty() || !terms.front().is_zero()) {
    throw DomainError("explicit sequence must start at 0");
  }
  int power = 0;
  for (const auto& t : terms) {
    if (!t.is_zero()) {
      power = t.pi_power();
      break;
    }
  }
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    if (terms[k + 1] < terms[k]) throw DomainError("explicit sequence must be nondecreasing");
  }
  return CapacitySequence(std::make_shared<detail::ExplicitState>(std::move(terms), power));
}

ExactQuantity CapacitySequence::term(std::size_t k) const {
  return require_state(state_)->term(k);
}

std::vector<ExactQuantity> CapacitySequence::prefix(std::size_t n) const {
  return require_state(state_)->prefix(n);
}

int CapacitySequence::pi_power() const { return state_->pi_power(); }

const std::string& CapacitySequence::rule() const { return state_->rule(); }

std::vector<ExactQuantity> nseq_prefix(const ExactQuantity& a, const ExactQuantity& b,
                                       std::size_t n) {
  if (n < 1) throw DomainError("prefix length must be at least 1");
  return CapacitySequence::combinations(a, b).prefix(n);
}

ExactQuantity nseq_kth(const ExactQuantity& a, const ExactQuantity& b, std::size_t k) {
  return CapacitySequence::combinations(a, b).term(k);
}

CapacitySequence ellipsoid_capacities(const ExactQuantity& a, const ExactQuantity& b) {
  return CapacitySequence::combinations(a, b);
}

CapacitySequence ball_capacities(const ExactQuantity& a) {
  return CapacitySequence::combinations(a, a);
}

CapacitySequence dstar_capacities(Surface surface) {
  CapacitySequence lattice =
      CapacitySequence::combinations(ExactQuantity::integer(1), ExactQuantity::integer(1));
  switch (surface) {
    case Surface::S2:
      return CapacitySequence::scaled(CapacitySequence::multiples_of(lattice, 2),
                                      ExactQuantity::two_pi());
    case Surface::RP2:
      return CapacitySequence::scaled(CapacitySequence::multiples_of(lattice, 4),
                                      ExactQuantity::pi());
  }
  throw DomainError("unknown surface");
}

}  // namespace zollech
