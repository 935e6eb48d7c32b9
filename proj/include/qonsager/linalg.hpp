#pragma once

// Exact linear algebra over Q. Subspaces of Q^n are passed around as n x k
// matrices whose columns form a basis (k may be 0).

#include <cstddef>
#include <optional>
#include <vector>

#include "qonsager/matrix.hpp"

namespace qonsager {

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, as columns.
Matrix nullspace(const Matrix& m);

/// Basis of the column space of m, as columns.
Matrix column_basis(const Matrix& m);

Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
bool same_subspace(const Matrix& a, const Matrix& b);

/// Basis of the eigenspace of m for the given eigenvalue.
Matrix eigenspace(const Matrix& m, const Rational& eigenvalue);

/// Incrementally maintained basis in reduced echelon form. Each stored vector
/// has a unit pivot that vanishes in every other stored vector.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Reduces v against the basis; inserts the remainder if nonzero. Returns
  /// whether the span grew.
  bool insert(std::vector<Rational> v);

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t ambient_dim_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Dense univariate polynomial, coefficients from degree 0 upward, with no
/// trailing zeros (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  Rational evaluate(const Rational& x) const;

  /// Quotient by (x - root) when root is a root; nullopt otherwise.
  std::optional<Polynomial> divide_by_root(const Rational& root) const;

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// det(x I - m), computed by the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const Matrix& m);

/// Multiplicity of root in p (0 when it is not a root). p must be nonzero.
std::size_t root_multiplicity(const Polynomial& p, const Rational& root);

}  // namespace qonsager
