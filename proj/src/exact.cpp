#include "zollech/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace zollech {

namespace {

using Wide = __int128;

std::int64_t checked_narrow(Wide v, const char* op) {
  if (v > static_cast<Wide>(std::numeric_limits<std::int64_t>::max()) ||
      v < static_cast<Wide>(std::numeric_limits<std::int64_t>::min())) {
    throw DomainError(std::string("rational overflow in ") + op);
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t isqrt_exact(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

void Rational::normalize() {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& r) const {
  if (den_ == 1 && r.den_ == 1) {
    Rational out;
    out.num_ = checked_narrow(static_cast<Wide>(num_) + r.num_, "+");
    return out;
  }
  Wide n = static_cast<Wide>(num_) * r.den_ + static_cast<Wide>(r.num_) * den_;
  Wide d = static_cast<Wide>(den_) * r.den_;
  // Reduce in wide arithmetic: the sum may overflow only unreduced.
  if (n != 0) {
    Wide g = wide_gcd(n, d);
    n /= g;
    d /= g;
  }
  return Rational(checked_narrow(n, "+"), checked_narrow(d, "+"));
}

Rational Rational::operator-(const Rational& r) const { return *this + (-r); }

Rational Rational::operator*(const Rational& r) const {
  if (den_ == 1 && r.den_ == 1) {
    Rational out;
    out.num_ = checked_narrow(static_cast<Wide>(num_) * r.num_, "*");
    return out;
  }
  // Cross-reduce before multiplying to keep intermediates small.
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, r.den_);
  std::int64_t g2 = std::gcd(r.num_ < 0 ? -r.num_ : r.num_, den_);
  Wide n = static_cast<Wide>(num_ / g1) * (r.num_ / g2);
  Wide d = static_cast<Wide>(den_ / g2) * (r.den_ / g1);
  return Rational(checked_narrow(n, "*"), checked_narrow(d, "*"));
}

Rational Rational::operator/(const Rational& r) const {
  if (r.num_ == 0) throw DomainError("rational division by zero");
  return *this * Rational(r.den_, r.num_);
}

bool Rational::operator<(const Rational& r) const {
  return static_cast<Wide>(num_) * r.den_ < static_cast<Wide>(r.num_) * den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (num_ < 0) return std::nullopt;
  std::int64_t rn = isqrt_exact(num_);
  std::int64_t rd = isqrt_exact(den_);
  if (rn < 0 || rd < 0) return std::nullopt;
  return Rational(rn, rd);
}

ExactQuantity::ExactQuantity(Rational coeff, int pi_power)
    : coeff_(coeff), pi_power_(coeff.is_zero() ? 0 : pi_power) {
  if (pi_power < 0) throw UnitError("negative pi power");
}

void ExactQuantity::require_same_unit(const ExactQuantity& a, const ExactQuantity& b,
                                      const char* op) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.pi_power_ != b.pi_power_) {
    throw UnitError(std::string(op) + " between " + a.to_string() + " and " +
                    b.to_string() + " with different pi powers");
  }
}

ExactQuantity ExactQuantity::operator+(const ExactQuantity& r) const {
  require_same_unit(*this, r, "addition");
  int power = is_zero() ? r.pi_power_ : pi_power_;
  return ExactQuantity(coeff_ + r.coeff_, power);
}

ExactQuantity ExactQuantity::operator-(const ExactQuantity& r) const { return *this + (-r); }

ExactQuantity ExactQuantity::operator*(const ExactQuantity& r) const {
  return ExactQuantity(coeff_ * r.coeff_, pi_power_ + r.pi_power_);
}

ExactQuantity ExactQuantity::operator/(const ExactQuantity& r) const {
  if (r.is_zero()) throw DomainError("division by zero quantity");
  int power = pi_power_ - r.pi_power_;
  if (!coeff_.is_zero() && power < 0) {
    throw UnitError("division " + to_string() + " / " + r.to_string() +
                    " yields a negative pi power");
  }
  return ExactQuantity(coeff_ / r.coeff_, coeff_.is_zero() ? 0 : power);
}

bool ExactQuantity::operator==(const ExactQuantity& r) const {
  if (is_zero() && r.is_zero()) return true;
  if (is_zero() != r.is_zero()) return false;
  return pi_power_ == r.pi_power_ && coeff_ == r.coeff_;
}

bool ExactQuantity::operator<(const ExactQuantity& r) const {
  if (is_zero()) return r.sign() > 0;
  if (r.is_zero()) return sign() < 0;
  require_same_unit(*this, r, "comparison");
  return coeff_ < r.coeff_;
}

bool ExactQuantity::operator<=(const ExactQuantity& r) const {
  return *this < r || *this == r;
}

double ExactQuantity::to_double() const {
  double v = coeff_.to_double();
  for (int i = 0; i < pi_power_; ++i) v *= M_PI;
  return v;
}

std::optional<ExactQuantity> ExactQuantity::sqrt_exact() const {
  if (coeff_.sign() < 0 || pi_power_ % 2 != 0) return std::nullopt;
  auto root = coeff_.sqrt_exact();
  if (!root) return std::nullopt;
  return ExactQuantity(*root, pi_power_ / 2);
}

std::string ExactQuantity::to_string() const {
  if (coeff_.is_zero()) return "0";
  std::string s;
  if (pi_power_ > 0 && coeff_ == Rational(1)) {
    s = "";
  } else if (pi_power_ > 0 && coeff_ == Rational(-1)) {
    s = "-";
  } else {
    s = coeff_.to_string();
  }
  if (pi_power_ == 1) s += "pi";
  if (pi_power_ >= 2) s += "pi^" + std::to_string(pi_power_);
  return s;
}

ExactQuantity ExactQuantity::parse(const std::string& text) {
  const char* p = text.c_str();
  const char* end = p + text.size();
  auto fail = [&] { throw DomainError("cannot parse exact quantity '" + text + "'"); };

  bool negative = false;
  if (p < end && (*p == '+' || *p == '-')) negative = (*p++ == '-');

  auto read_int = [&](std::int64_t& out) -> bool {
    if (p >= end || !std::isdigit(static_cast<unsigned char>(*p))) return false;
    std::int64_t v = 0;
    while (p < end && std::isdigit(static_cast<unsigned char>(*p))) {
      v = v * 10 + (*p++ - '0');
      if (v < 0) fail();
    }
    out = v;
    return true;
  };

  std::int64_t num = 1;
  bool have_num = read_int(num);
  std::int64_t den = 1;
  if (p < end && *p == '/') {
    ++p;
    if (!read_int(den) || den == 0) fail();
  }
  int power = 0;
  if (end - p >= 2 && p[0] == 'p' && p[1] == 'i') {
    p += 2;
    power = 1;
    if (end - p >= 2 && p[0] == '^' && p[1] == '2') {
      p += 2;
      power = 2;
    }
  } else if (!have_num) {
    fail();
  }
  if (p != end) fail();
  return ExactQuantity(Rational(negative ? -num : num, den), power);
}

}  // namespace zollech
