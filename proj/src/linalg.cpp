#include "quiverthick/linalg.hpp"

#include "quiverthick/error.hpp"

namespace quiverthick {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (Field::is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!Field::is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("matrix difference shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.sub(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Field& f, const Scalar& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(s, a(i, j));
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (Field::is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return out;
}

RowEchelon row_reduce(const Field& f, Matrix a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && Field::is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const Scalar inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || Field::is_zero(a(r, col))) continue;
      const Scalar factor = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!Field::is_zero(a(row, j))) a(r, j) = f.sub(a(r, j), f.mul(factor, a(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Field& f, const Matrix& a) { return row_reduce(f, a).pivots.size(); }

Matrix null_space(const Field& f, const Matrix& a) {
  const auto echelon = row_reduce(f, a);
  const auto& pivots = echelon.pivots;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = f.neg(echelon.reduced(r, fc));
  }
  return basis;
}

Matrix column_space(const Field& f, const Matrix& a) {
  const auto pivots = row_reduce(f, a).pivots;
  Matrix basis(a.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < a.rows(); ++r) basis(r, k) = a(r, pivots[k]);
  return basis;
}

Matrix complement_basis(const Field& f, const Matrix& basis) {
  const auto n = basis.rows();
  const auto extended = hstack(basis, Matrix::identity(n));
  const auto pivots = row_reduce(f, extended).pivots;
  std::vector<std::size_t> added;
  for (auto p : pivots)
    if (p >= basis.cols()) added.push_back(p - basis.cols());
  if (pivots.size() - added.size() != basis.cols())
    throw InvalidArgument("complement_basis needs independent columns");
  Matrix out(n, added.size());
  for (std::size_t k = 0; k < added.size(); ++k) out(added[k], k) = 1;
  return out;
}

std::optional<Matrix> try_solve(const Field& f, const Matrix& a, const Matrix& y) {
  if (a.rows() != y.rows()) throw InvalidArgument("solve shape mismatch");
  const auto echelon = row_reduce(f, hstack(a, y));
  const auto& red = echelon.reduced;
  Matrix x(a.cols(), y.cols());
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
    const auto p = echelon.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < y.cols(); ++j) x(p, j) = red(r, a.cols() + j);
  }
  return x;
}

Matrix solve(const Field& f, const Matrix& a, const Matrix& y) {
  auto x = try_solve(f, a, y);
  if (!x) throw InvalidArgument("inconsistent linear system");
  return *std::move(x);
}

bool is_invertible(const Field& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

Matrix inverse(const Field& f, const Matrix& a) {
  if (!is_invertible(f, a)) throw InvalidArgument("matrix is not invertible");
  return solve(f, a, Matrix::identity(a.rows()));
}

}  // namespace quiverthick
