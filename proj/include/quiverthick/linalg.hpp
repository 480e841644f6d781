#pragma once

#include <optional>
#include <vector>

#include "quiverthick/field.hpp"

namespace quiverthick {

/// Dense matrix of exact scalars. Shapes with zero rows or columns are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Scalar& s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
/// Kronecker product a (x) b.
Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

RowEchelon row_reduce(const Field& f, Matrix a);
std::size_t rank(const Field& f, const Matrix& a);

/// Columns form a basis of {x : a x = 0}; shape a.cols() x nullity.
Matrix null_space(const Field& f, const Matrix& a);
/// The pivot columns of a, a basis of its column space.
Matrix column_space(const Field& f, const Matrix& a);
/// Columns extending the (independent) columns of basis to a basis of the ambient space.
Matrix complement_basis(const Field& f, const Matrix& basis);

/// Some x with a x = y, or nullopt if the system is inconsistent.
std::optional<Matrix> try_solve(const Field& f, const Matrix& a, const Matrix& y);
/// As try_solve but throws InvalidArgument on inconsistency.
Matrix solve(const Field& f, const Matrix& a, const Matrix& y);

bool is_invertible(const Field& f, const Matrix& a);
Matrix inverse(const Field& f, const Matrix& a);

}  // namespace quiverthick
