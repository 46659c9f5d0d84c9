#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zollech/errors.hpp"

namespace zollech {

// Exact rational p/q in lowest terms, q > 0. Overflow in intermediate
// products is checked through 128-bit arithmetic and reported as a
// DomainError rather than wrapping silently.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational operator+(const Rational& r) const;
  Rational operator-(const Rational& r) const;
  Rational operator*(const Rational& r) const;
  Rational operator/(const Rational& r) const;

  bool operator==(const Rational& r) const { return num_ == r.num_ && den_ == r.den_; }
  bool operator!=(const Rational& r) const { return !(*this == r); }
  bool operator<(const Rational& r) const;
  bool operator<=(const Rational& r) const { return *this < r || *this == r; }
  bool operator>(const Rational& r) const { return r < *this; }
  bool operator>=(const Rational& r) const { return r <= *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  // Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> sqrt_exact() const;

 private:
  void normalize();

  std::int64_t num_;
  std::int64_t den_;
};

// A rational multiple of an integer power of pi. Capacities and actions in
// this library live in pi_power 0 or 1; toric volumes use pi_power 2.
// Ordering is exact on the rational coefficients and only defined between
// values with equal pi power (zero compares against anything).
class ExactQuantity {
 public:
  constexpr ExactQuantity() : coeff_(), pi_power_(0) {}
  explicit ExactQuantity(Rational coeff, int pi_power = 0);

  static ExactQuantity zero() { return ExactQuantity(); }
  static ExactQuantity integer(std::int64_t n) { return ExactQuantity(Rational(n)); }
  static ExactQuantity rational(std::int64_t n, std::int64_t d) {
    return ExactQuantity(Rational(n, d));
  }
  static ExactQuantity pi_multiple(Rational c) { return ExactQuantity(c, 1); }
  static ExactQuantity pi() { return pi_multiple(Rational(1)); }
  static ExactQuantity two_pi() { return pi_multiple(Rational(2)); }
  static ExactQuantity pi_squared_multiple(Rational c) { return ExactQuantity(c, 2); }

  const Rational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_.is_zero(); }
  int sign() const { return coeff_.sign(); }

  ExactQuantity operator-() const { return ExactQuantity(-coeff_, pi_power_); }
  // Addition and subtraction require matching pi powers (zero is neutral).
  ExactQuantity operator+(const ExactQuantity& r) const;
  ExactQuantity operator-(const ExactQuantity& r) const;
  // Multiplication adds pi powers, division subtracts them.
  ExactQuantity operator*(const ExactQuantity& r) const;
  ExactQuantity operator/(const ExactQuantity& r) const;
  ExactQuantity operator*(std::int64_t n) const {
    return ExactQuantity(coeff_ * Rational(n), pi_power_);
  }

  bool operator==(const ExactQuantity& r) const;
  bool operator!=(const ExactQuantity& r) const { return !(*this == r); }
  bool operator<(const ExactQuantity& r) const;
  bool operator<=(const ExactQuantity& r) const;
  bool operator>(const ExactQuantity& r) const { return r < *this; }
  bool operator>=(const ExactQuantity& r) const { return r <= *this; }

  double to_double() const;

  // Exact square root when the coefficient is a perfect rational square and
  // the pi power is even; nullopt otherwise.
  std::optional<ExactQuantity> sqrt_exact() const;

  // Canonical form: "0", "5", "3/4", "4pi", "201/100pi", "4pi^2".
  std::string to_string() const;

  // Parses the canonical form above (also accepts a bare "pi").
  static ExactQuantity parse(const std::string& text);

 private:
  static void require_same_unit(const ExactQuantity& a, const ExactQuantity& b,
                                const char* op);

  Rational coeff_;
  int pi_power_;
};

}  // namespace zollech
