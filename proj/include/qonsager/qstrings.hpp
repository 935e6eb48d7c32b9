#pragma once

// q-string combinatorics. A q-string S(ell, a) is the set
// { a q^(2i - ell + 1) : 0 <= i < ell }, a run of ell consecutive points of
// one multiplicative coset of q^(2Z) centred on a.

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "qonsager/exact_scalars.hpp"

namespace qonsager {

class QString {
 public:
  /// Throws std::invalid_argument unless ell >= 1 and base != 0.
  QString(long ell, Rational base);

  long ell() const { return ell_; }
  const Rational& base() const { return base_; }

  friend bool operator==(const QString&, const QString&) = default;
  friend std::strong_ordering operator<=>(const QString& lhs, const QString& rhs) {
    if (auto c = lhs.ell_ <=> rhs.ell_; c != 0) return c;
    return lhs.base_ <=> rhs.base_;
  }

 private:
  long ell_;
  Rational base_;
};

using QStringMultiset = std::vector<QString>;
using ScalarMultiset = std::vector<Rational>;

/// Raised by decompose_inverse_closed when some c and 1/c have different
/// multiplicities (or +-1 has odd multiplicity).
class NotInverseClosed : public std::invalid_argument {
 public:
  explicit NotInverseClosed(Rational offending);
  const Rational& offending() const { return offending_; }

 private:
  Rational offending_;
};

ScalarMultiset elements(const QParam& q, const QString& s);
QString inverse_string(const QString& s);

/// True iff the union of the two strings is a strictly longer q-string.
bool adjacent(const QParam& q, const QString& lhs, const QString& rhs);

bool in_general_position(const QParam& q, std::span<const QString> strings);

/// General position of every multiset obtained by replacing some bases by
/// their inverses.
bool strongly_in_general_position(const QParam& q, std::span<const QString> strings);

/// The unique multiset of q-strings in general position whose multiset union
/// is omega. Throws std::invalid_argument for an empty omega or a zero entry.
QStringMultiset decompose(const QParam& q, std::span<const Rational> omega);

/// For inverse-closed omega: strings strongly in general position with
/// union over i of (S_i u S_i^-1) equal to omega. Unique up to equivalence.
QStringMultiset decompose_inverse_closed(const QParam& q, std::span<const Rational> omega);

/// Equal up to reordering and replacing bases by their inverses.
bool equivalent(std::span<const QString> lhs, std::span<const QString> rhs);

/// Sorted copy, for multiset comparison.
QStringMultiset canonical_order(std::span<const QString> strings);

}  // namespace qonsager
