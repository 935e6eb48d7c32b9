#include <doctest.h>

#include <random>

#include "qonsager/exact_scalars.hpp"

using namespace qonsager;

namespace {

Rational R(const char* text) { return Rational::parse(text); }

}  // namespace

TEST_CASE("rationals are canonical and round-trip through text") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(R("6/8").to_string() == "3/4");
  CHECK(R("-0").to_string() == "0");
  CHECK(R("+5/1").to_string() == "5");
  CHECK(R("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
  CHECK_THROWS_AS(R("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(R("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(R(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(R("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(R(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(R("2/3").pow(-2) == R("9/4"));
  CHECK(R("-2").pow(3) == Rational(-8));
}

TEST_CASE("deformation parameter requires |q| > 1") {
  for (const char* bad : {"0", "1", "-1", "1/2", "-3/4"}) {
    CHECK_THROWS_AS(QParam(R(bad)), std::domain_error);
  }
  CHECK_NOTHROW(QParam(R("-2")));
  CHECK_NOTHROW(QParam(R("5/2")));
}

TEST_CASE("q_int examples") {
  const QParam q(2);
  CHECK(q_int(q, 0) == Rational(0));
  CHECK(q_int(q, 1) == Rational(1));
  CHECK(q_int(q, 2) == R("5/2"));
  CHECK(q_int(q, 3) == R("21/4"));
}

TEST_CASE("q_int is odd and satisfies [j+1] = q[j] + q^-j") {
  for (const char* qs : {"2", "3", "5/2", "-7/3"}) {
    const QParam q(R(qs));
    for (long j = -20; j <= 20; ++j) {
      CHECK(q_int(q, j) + q_int(q, -j) == Rational(0));
      CHECK(q_int(q, j + 1) == q.value() * q_int(q, j) + q.pow(-j));
    }
  }
}

TEST_CASE("q_power_index examples and errors") {
  const QParam q(2);
  CHECK(q_power_index(q, Rational(1), -1, 1) == 0);
  CHECK(q_power_index(q, R("1/2"), -3, 3) == -1);
  CHECK_FALSE(q_power_index(q, Rational(3), -5, 5).has_value());
  CHECK_FALSE(q_power_index(q, Rational(8), -2, 2).has_value());
  CHECK_FALSE(q_power_index(q, Rational(-2), -3, 3).has_value());
  CHECK_THROWS_AS(q_power_index(q, Rational(0), -1, 1), std::domain_error);

  const QParam neg(-2);
  CHECK(q_power_index(neg, Rational(-8), -5, 5) == 3);
  CHECK_FALSE(q_power_index(neg, Rational(8), -5, 5).has_value());
}

TEST_CASE("q_power_index is a partial inverse of q^i") {
  for (const char* qs : {"2", "-3", "5/2"}) {
    const QParam q(R(qs));
    for (long i = -8; i <= 8; ++i) {
      CHECK(q_power_index(q, q.pow(i), -8, 8) == i);
      CHECK(q_power_index(q, q.pow(i), i, i) == i);
      CHECK_FALSE(q_power_index(q, q.pow(i), i + 1, i + 3).has_value());
    }
  }
}

TEST_CASE("coset_normal_form examples") {
  const QParam q(2);
  CHECK(coset_normal_form(q, Rational(4)) == CosetForm{Rational(1), 1});
  CHECK(coset_normal_form(q, Rational(3)) == CosetForm{Rational(3), 0});
  CHECK(coset_normal_form(q, R("1/2")) == CosetForm{Rational(2), -1});
  CHECK(coset_normal_form(q, Rational(-12)) == CosetForm{Rational(-3), 1});
  CHECK_THROWS_AS(coset_normal_form(q, Rational(0)), std::domain_error);
}

TEST_CASE("coset_normal_form is compatible with multiplication by q^2") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 999);
  for (const char* qs : {"2", "-3/2", "5/2"}) {
    const QParam q(R(qs));
    const Rational q2 = q.pow(2);
    for (int trial = 0; trial < 100; ++trial) {
      long n = num(rng);
      if (n == 0) n = 1;
      const Rational x(n, den(rng));
      const CosetForm f = coset_normal_form(q, x);
      CHECK(f.representative * q.pow(2 * f.exponent) == x);
      CHECK(f.representative.abs() >= Rational(1));
      CHECK(f.representative.abs() < q2);
      const CosetForm g = coset_normal_form(q, x * q2);
      CHECK(g.representative == f.representative);
      CHECK(g.exponent == f.exponent + 1);
    }
  }
}
