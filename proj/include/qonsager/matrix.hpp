#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qonsager/exact_scalars.hpp"

namespace qonsager {

/// Dense row-major matrix over the rationals. Matrices act on column vectors,
/// so column j holds the image of the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Rational> column(std::size_t c) const;
  /// Row-major flattening.
  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Rational& scalar, Matrix m) { return m *= scalar; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product with the left factor's index varying slowest.
Matrix kron(const Matrix& lhs, const Matrix& rhs);

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace qonsager
