#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "trb/scalar.hpp"

namespace trb {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;
  /// Matrix-vector product.
  Vec apply(const Vec& v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Stacks blocks [[a, b], [c, d]]; shapes must agree.
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form. Pivots are the first nonzero entry per column
/// scanning rows top to bottom.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Null-space basis parametrized by the free columns of the RREF: each
/// vector has a 1 at its free variable and 0 at the other free variables.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Throws SingularMatrix when m is not invertible, DimensionMismatch when
/// not square.
Matrix invert(const Matrix& m);

/// One solution of m x = b (free variables set to 0), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace trb
