#include <gtest/gtest.h>

#include "quiverthick/linalg.hpp"
#include "quiverthick/polynomial.hpp"
#include "support.hpp"

using namespace quiverthick;

namespace {

Polynomial poly(const Field& f, std::initializer_list<long> low_to_high) {
  Polynomial p;
  for (auto c : low_to_high) p.coeffs.push_back(f.from(c));
  p.trim();
  return p;
}

bool divides(const Field& f, const Polynomial& d, const Polynomial& p) {
  return poly_divmod(f, p, d).second.is_zero();
}

}  // namespace

class LinalgOverField : public ::testing::TestWithParam<std::int64_t> {
 protected:
  Field field() const { return GetParam() == 0 ? Field::rationals() : Field::prime(GetParam()); }
};

TEST_P(LinalgOverField, RankNullity) {
  const auto f = field();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rows = static_cast<std::size_t>(qt_test::draw(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(qt_test::draw(rng, 1, 6));
    auto a = qt_test::random_matrix(f, rows, cols, rng);
    if (trial % 3 == 0) a = multiply(f, qt_test::random_matrix(f, rows, 2, rng), qt_test::random_matrix(f, 2, cols, rng));
    const auto kernel = null_space(f, a);
    EXPECT_EQ(rank(f, a) + kernel.cols(), cols);
    EXPECT_TRUE(multiply(f, a, kernel).is_zero());
    EXPECT_EQ(rank(f, kernel), kernel.cols());
    EXPECT_EQ(column_space(f, a).cols(), rank(f, a));
    EXPECT_EQ(rank(f, a), rank(f, a.transposed()));
  }
}

TEST_P(LinalgOverField, InverseAndSolve) {
  const auto f = field();
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(qt_test::draw(rng, 1, 5));
    const auto a = qt_test::random_invertible(f, n, rng);
    EXPECT_EQ(multiply(f, a, inverse(f, a)), Matrix::identity(n));
    const auto x = qt_test::random_matrix(f, n, 2, rng);
    EXPECT_EQ(solve(f, a, multiply(f, a, x)), x);
  }
  Matrix singular(2, 2);
  singular(0, 0) = f.from(1);
  Matrix rhs(2, 1);
  rhs(1, 0) = f.from(1);
  EXPECT_FALSE(try_solve(f, singular, rhs).has_value());
  EXPECT_FALSE(is_invertible(f, singular));
}

TEST_P(LinalgOverField, KroneckerVectorizesProducts) {
  const auto f = field();
  std::mt19937_64 rng(23);
  const auto a = qt_test::random_matrix(f, 2, 3, rng);
  const auto x = qt_test::random_matrix(f, 3, 2, rng);
  const auto b = qt_test::random_matrix(f, 2, 4, rng);
  auto vec = [](const Matrix& m) {
    Matrix v(m.rows() * m.cols(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r) v(c * m.rows() + r, 0) = m(r, c);
    return v;
  };
  EXPECT_EQ(vec(multiply(f, multiply(f, a, x), b)), multiply(f, kronecker(f, b.transposed(), a), vec(x)));
}

TEST_P(LinalgOverField, ComplementCompletesBasis) {
  const auto f = field();
  std::mt19937_64 rng(24);
  const auto basis = qt_test::random_matrix(f, 5, 2, rng);
  const auto complement = complement_basis(f, basis);
  EXPECT_EQ(complement.cols() + rank(f, basis), 5u);
  EXPECT_EQ(rank(f, hstack(basis, complement)), 5u);
}

TEST_P(LinalgOverField, MinimalPolynomialAnnihilates) {
  const auto f = field();
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(qt_test::draw(rng, 1, 5));
    const auto m = qt_test::random_matrix(f, n, n, rng);
    const auto p = minimal_polynomial(f, m);
    EXPECT_LE(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.coeffs.back(), f.from(1));
    EXPECT_TRUE(poly_eval(f, p, m).is_zero());
    if (auto factor = proper_factor(f, p, 1)) {
      EXPECT_GT(factor->degree(), 0);
      EXPECT_LT(factor->degree(), p.degree());
      EXPECT_TRUE(divides(f, *factor, p));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, LinalgOverField, ::testing::Values(0, 2, 7, 32003));

TEST(Polynomial, KnownMinimalPolynomials) {
  const auto q = Field::rationals();
  Matrix jordan(3, 3);
  jordan(1, 0) = 1;
  jordan(2, 1) = 1;
  EXPECT_EQ(minimal_polynomial(q, jordan), poly(q, {0, 0, 0, 1}));
  Matrix diag(3, 3);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  diag(2, 2) = 2;
  EXPECT_EQ(minimal_polynomial(q, diag), poly(q, {2, -3, 1}));
  EXPECT_EQ(to_string(poly(q, {1, 0, 1})), "x^2 + 1");
}

TEST(Polynomial, ProperFactorRespectsIrreducibility) {
  const auto q = Field::rationals();
  EXPECT_FALSE(proper_factor(q, poly(q, {1, 0, 1})).has_value());
  EXPECT_FALSE(proper_factor(q, poly(q, {-2, 0, 1})).has_value());
  EXPECT_TRUE(proper_factor(q, poly(q, {2, -3, 1})).has_value());
  EXPECT_TRUE(proper_factor(q, poly(q, {1, 2, 1})).has_value());

  const auto f2 = Field::prime(2);
  EXPECT_FALSE(proper_factor(f2, poly(f2, {1, 1, 1})).has_value());
  EXPECT_TRUE(proper_factor(f2, poly(f2, {1, 0, 1})).has_value());

  const auto f5 = Field::prime(5);
  EXPECT_TRUE(proper_factor(f5, poly(f5, {1, 0, 1})).has_value());

  const auto f7 = Field::prime(7);
  EXPECT_FALSE(proper_factor(f7, poly(f7, {1, 0, 1})).has_value());
  EXPECT_FALSE(proper_factor(f7, poly(f7, {-3, 0, 1})).has_value());
  const auto product = poly_mul(f7, poly(f7, {1, 0, 1}), poly(f7, {-3, 0, 1}));
  const auto factor = proper_factor(f7, product, 3);
  ASSERT_TRUE(factor.has_value());
  EXPECT_EQ(factor->degree(), 2);
  EXPECT_TRUE(divides(f7, *factor, product));
}

TEST(Polynomial, LargePrimeEqualDegreeSplit) {
  const auto f = Field::prime(1000003);
  // (x^2 - 2)(x^2 - 3) with both quadratics irreducible modulo p needs equal-degree splitting.
  const auto product = poly_mul(f, poly(f, {-2, 0, 1}), poly(f, {-5, 0, 1}));
  const auto factor = proper_factor(f, product, 9);
  ASSERT_TRUE(factor.has_value());
  EXPECT_TRUE(divides(f, *factor, product));
}

TEST(Field, PrimeArithmetic) {
  const auto f = Field::prime(7);
  EXPECT_EQ(f.mul(f.from(3), f.inv(f.from(3))), f.from(1));
  EXPECT_EQ(f.from(-1), f.from(6));
  EXPECT_EQ(f.from(mpq_class(1, 2)), f.from(4));
  EXPECT_THROW(Field::prime(9), InvalidArgument);
  EXPECT_THROW(f.inv(f.from(0)), InvalidArgument);
  EXPECT_TRUE(is_prime_number(32003));
  EXPECT_FALSE(is_prime_number(32001));
}
