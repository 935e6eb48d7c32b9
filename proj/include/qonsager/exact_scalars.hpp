#pragma once

// Exact rational scalars and the q-arithmetic built on them.
//
// Every quantity in the library lives in the rationals. A deformation
// parameter q is a concrete rational with |q| > 1; over Q this is exactly the
// condition "q is not a root of unity" plus a choice of orientation that makes
// q-power indices and q^2-coset representatives unique. Parameters on the
// complex unit circle are not representable.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace qonsager {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by intent

  Rational(long numerator, long denominator);

  /// Parses "p/r" or "p" (decimal, optional sign). Non-reduced input is
  /// accepted and canonicalized; a zero denominator or any other text throws
  /// std::invalid_argument.
  static Rational parse(std::string_view text);

  static Rational from_gmp(mpq_class value);

  /// "p/r", or "p" when the denominator is 1.
  std::string to_string() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }

  Rational abs() const;
  /// Throws std::domain_error on zero.
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  const mpq_class& gmp() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  mpq_class value_;
};

/// The deformation parameter q. Construction enforces |q| > 1.
class QParam {
 public:
  explicit QParam(Rational q);

  const Rational& value() const { return q_; }
  Rational pow(long exponent) const { return q_.pow(exponent); }

  friend bool operator==(const QParam&, const QParam&) = default;

 private:
  Rational q_;
};

/// The q-integer [j] = (q^j - q^-j) / (q - q^-1).
Rational q_int(const QParam& q, long j);

/// The unique i in [lo, hi] with x == q^i, if any. Throws std::domain_error
/// for x == 0 and std::invalid_argument for lo > hi.
std::optional<long> q_power_index(const QParam& q, const Rational& x, long lo, long hi);

/// x == representative * q^(2 * exponent) with 1 <= |representative| < q^2.
/// Two scalars share a representative iff their ratio is an even power of q.
struct CosetForm {
  Rational representative;
  long exponent = 0;

  friend bool operator==(const CosetForm&, const CosetForm&) = default;
};

CosetForm coset_normal_form(const QParam& q, const Rational& x);

}  // namespace qonsager
