#include "qonsager/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qonsager {

RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows() && m(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot_row, c));
    }
    const Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const RowEchelon rref = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rref.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = Rational(1);
    for (std::size_t r = 0; r < rref.pivots.size(); ++r) {
      basis(rref.pivots[r], k) = -rref.reduced(r, f);
    }
  }
  return basis;
}

Matrix column_basis(const Matrix& m) {
  const RowEchelon rref = row_reduce(m.transpose());
  Matrix basis(m.rows(), rref.pivots.size());
  for (std::size_t k = 0; k < rref.pivots.size(); ++k) {
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, k) = rref.reduced(k, r);
  }
  return basis;
}

namespace {

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("subspaces of different ambient dimension");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

}  // namespace

Matrix subspace_sum(const Matrix& a, const Matrix& b) { return column_basis(hstack(a, b)); }

Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
  const Matrix a_basis = column_basis(a);
  const Matrix b_basis = column_basis(b);
  // a x = b y  <=>  [a | -b] (x; y) = 0; the intersection is spanned by a x.
  const Matrix kernel = nullspace(hstack(a_basis, Rational(-1) * b_basis));
  Matrix coords(a_basis.cols(), kernel.cols());
  for (std::size_t r = 0; r < a_basis.cols(); ++r) {
    for (std::size_t c = 0; c < kernel.cols(); ++c) coords(r, c) = kernel(r, c);
  }
  return column_basis(a_basis * coords);
}

bool same_subspace(const Matrix& a, const Matrix& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(hstack(a, b)) == ra;
}

Matrix eigenspace(const Matrix& m, const Rational& eigenvalue) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace of a non-square matrix");
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= eigenvalue;
  return nullspace(shifted);
}

void EchelonBasis::reduce(std::vector<Rational>& v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational factor = v[pivots_[k]];
    if (factor.is_zero()) continue;
    const auto& b = basis_[k];
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
      if (!b[i].is_zero()) v[i] -= factor * b[i];
    }
  }
}

bool EchelonBasis::insert(std::vector<Rational> v) {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector length does not match basis");
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < ambient_dim_ && v[pivot].is_zero()) ++pivot;
  if (pivot == ambient_dim_) return false;

  const Rational inv = v[pivot].inverse();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& b : basis_) {
    const Rational factor = b[pivot];
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
      if (!v[i].is_zero()) b[i] -= factor * v[i];
    }
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<Polynomial> Polynomial::divide_by_root(const Rational& root) const {
  if (coefficients_.empty()) return std::nullopt;
  // Synthetic division from the leading coefficient down.
  const std::size_t n = coefficients_.size();
  std::vector<Rational> quotient(n - 1);
  Rational carry;
  for (std::size_t k = n; k-- > 1;) {
    carry = coefficients_[k] + carry * root;
    quotient[k - 1] = carry;
  }
  const Rational remainder = coefficients_[0] + carry * root;
  if (!remainder.is_zero()) return std::nullopt;
  return Polynomial(std::move(quotient));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix acc(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * acc;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    const Matrix am = m * next;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
    acc = std::move(next);
  }
  return Polynomial(std::move(c));
}

std::size_t root_multiplicity(const Polynomial& p, const Rational& root) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity in the zero polynomial");
  std::size_t count = 0;
  Polynomial current = p;
  while (auto quotient = current.divide_by_root(root)) {
    current = std::move(*quotient);
    ++count;
  }
  return count;
}

}  // namespace qonsager
