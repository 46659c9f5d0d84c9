#include <doctest.h>

#include "zollech/exact.hpp"

using zollech::ExactQuantity;
using zollech::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), zollech::DomainError);
}

TEST_CASE("rational arithmetic and ordering are exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(Rational(355, 113) > Rational(314159, 100000));
}

TEST_CASE("addition reduces before narrowing on large denominators") {
  // The unreduced sum overflows 64 bits, the reduced value does not.
  Rational a(314159265358979, 100000000000000);
  Rational doubled = a + a;
  CHECK(doubled == Rational(314159265358979, 50000000000000));
  CHECK_THROWS_AS(a * a, zollech::DomainError);  // truly unrepresentable
}

TEST_CASE("rational square roots") {
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK(!Rational(2).sqrt_exact().has_value());
  CHECK(!Rational(-4).sqrt_exact().has_value());
}

TEST_CASE("quantities keep pi powers through products and quotients") {
  ExactQuantity four_pi = ExactQuantity::pi_multiple(Rational(4));
  ExactQuantity two = ExactQuantity::integer(2);
  CHECK((four_pi / two) == ExactQuantity::pi_multiple(Rational(2)));
  CHECK((four_pi * four_pi).pi_power() == 2);
  CHECK((four_pi / four_pi) == ExactQuantity::integer(1));
  CHECK((four_pi / ExactQuantity::two_pi()) == ExactQuantity::integer(2));
}

TEST_CASE("mixed-unit comparison is an error except against zero") {
  ExactQuantity pi = ExactQuantity::pi();
  ExactQuantity one = ExactQuantity::integer(1);
  CHECK_THROWS_AS((void)(pi < one), zollech::UnitError);
  CHECK(ExactQuantity::zero() < pi);
  CHECK(ExactQuantity::zero() < one);
  CHECK(ExactQuantity::zero() == ExactQuantity::pi_multiple(Rational(0)));
}

TEST_CASE("canonical strings and parsing round trip") {
  CHECK(ExactQuantity::zero().to_string() == "0");
  CHECK(ExactQuantity::integer(5).to_string() == "5");
  CHECK(ExactQuantity::rational(3, 4).to_string() == "3/4");
  CHECK(ExactQuantity::pi_multiple(Rational(4)).to_string() == "4pi");
  CHECK(ExactQuantity::pi_multiple(Rational(201, 100)).to_string() == "201/100pi");
  CHECK(ExactQuantity::pi_squared_multiple(Rational(2)).to_string() == "2pi^2");

  for (const char* text : {"0", "7", "3/4", "pi", "2pi", "201/100pi", "-5/2pi", "4pi^2"}) {
    ExactQuantity q = ExactQuantity::parse(text);
    CHECK(ExactQuantity::parse(q.to_string()) == q);
  }
  CHECK(ExactQuantity::parse("2pi") == ExactQuantity::two_pi());
  CHECK_THROWS_AS(ExactQuantity::parse("2pj"), zollech::DomainError);
  CHECK_THROWS_AS(ExactQuantity::parse(""), zollech::DomainError);
}

TEST_CASE("exact square roots of quantities") {
  ExactQuantity four_pi_sq = ExactQuantity::pi_squared_multiple(Rational(4));
  auto root = four_pi_sq.sqrt_exact();
  REQUIRE(root.has_value());
  CHECK(*root == ExactQuantity::two_pi());
  CHECK(!ExactQuantity::pi().sqrt_exact().has_value());
}

TEST_CASE("to_double tracks pi powers") {
  CHECK(ExactQuantity::two_pi().to_double() == doctest::Approx(6.283185307179586));
  CHECK(ExactQuantity::pi_squared_multiple(Rational(2)).to_double() ==
        doctest::Approx(19.739208802178716));
}
