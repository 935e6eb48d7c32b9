#include "qonsager/exact_scalars.hpp"

#include <stdexcept>

namespace qonsager {

namespace {

bool is_decimal_integer(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : text.substr(slash + 1);
  if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string num_digits(num);
  if (num_digits.front() == '+') num_digits.erase(0, 1);
  mpz_class n(num_digits, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  mpq_class value(n, d);
  value.canonicalize();
  return from_gmp(std::move(value));
}

Rational Rational::from_gmp(mpq_class value) {
  value.canonicalize();
  Rational r;
  r.value_ = std::move(value);
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::abs() const { return from_gmp(::abs(value_)); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return from_gmp(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return from_gmp(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational::from_gmp(-x.value_); }

QParam::QParam(Rational q) : q_(std::move(q)) {
  if (q_.abs() <= Rational(1)) {
    throw std::domain_error("q must satisfy |q| > 1, got " + q_.to_string());
  }
}

Rational q_int(const QParam& q, long j) {
  const Rational& x = q.value();
  return (x.pow(j) - x.pow(-j)) / (x - x.inverse());
}

std::optional<long> q_power_index(const QParam& q, const Rational& x, long lo, long hi) {
  if (x.is_zero()) throw std::domain_error("q_power_index of zero");
  if (lo > hi) throw std::invalid_argument("q_power_index with empty range");

  // |q|^i is strictly increasing in i, so walk from 0 toward |x|.
  const Rational base = q.value().abs();
  const Rational target = x.abs();
  Rational power(1);
  long i = 0;
  if (target >= power) {
    while (power < target) {
      power *= base;
      ++i;
    }
  } else {
    while (power > target) {
      power /= base;
      --i;
    }
  }
  if (power != target || q.pow(i) != x) return std::nullopt;
  if (i < lo || i > hi) return std::nullopt;
  return i;
}

CosetForm coset_normal_form(const QParam& q, const Rational& x) {
  if (x.is_zero()) throw std::domain_error("coset_normal_form of zero");
  const Rational step = q.pow(2);
  Rational rep = x;
  long exponent = 0;
  while (rep.abs() >= step) {
    rep /= step;
    ++exponent;
  }
  while (rep.abs() < Rational(1)) {
    rep *= step;
    --exponent;
  }
  return {std::move(rep), exponent};
}

}  // namespace qonsager
