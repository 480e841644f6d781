#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "quiverthick/error.hpp"
#include "quiverthick/quiver.hpp"
#include "support.hpp"

using namespace quiverthick;

TEST(Quiver, RejectsMalformedAdjacency) {
  EXPECT_THROW(Quiver(IntMatrix{}), InvalidArgument);
  EXPECT_THROW(Quiver(IntMatrix{{0, 1}}), InvalidArgument);
  EXPECT_THROW(Quiver(IntMatrix{{0, -1}, {0, 0}}), InvalidArgument);
}

TEST(Quiver, EulerFormOnUnitVectors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = qt_test::random_quiver(rng, 4, 3);
    const auto n = q.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(euler_form(q, ClassVector::unit(n, i), ClassVector::unit(n, j)),
                  (i == j ? 1 : 0) - q.arrows(j, i));
  }
}

TEST(Quiver, EulerFormIsBilinear) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = qt_test::random_quiver(rng, 4, 3);
    const auto n = q.vertex_count();
    auto vec = [&] {
      ClassVector v{std::vector<Integer>(n)};
      for (auto& x : v.coords) x = qt_test::draw(rng, -4, 4);
      return v;
    };
    const auto a = vec(), b = vec(), c = vec();
    const Integer k = qt_test::draw(rng, -3, 3);
    EXPECT_EQ(euler_form(q, a + b, c), euler_form(q, a, c) + euler_form(q, b, c));
    EXPECT_EQ(euler_form(q, k * a, c), k * euler_form(q, a, c));
    EXPECT_EQ(euler_form(q, a, b + c), euler_form(q, a, b) + euler_form(q, a, c));
  }
}

TEST(Quiver, IsomorphismFindsRelabeling) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = qt_test::random_quiver(rng, 5, 2);
    std::vector<std::size_t> sigma(q.vertex_count());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const auto other = q.relabeled(sigma);
    const auto found = quiver_isomorphism(q, other);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(q.relabeled(*found), other);
  }
}

TEST(Quiver, IsomorphismExamples) {
  EXPECT_FALSE(quiver_isomorphism(Quiver(IntMatrix{{1}}), Quiver(IntMatrix{{2}})).has_value());
  const auto swap = quiver_isomorphism(Quiver(IntMatrix{{2, 1}, {3, 2}}), Quiver(IntMatrix{{2, 3}, {1, 2}}));
  ASSERT_TRUE(swap.has_value());
  EXPECT_EQ(*swap, (std::vector<std::size_t>{1, 0}));
  EXPECT_FALSE(quiver_isomorphism(Quiver(IntMatrix{{0, 1}, {0, 0}}), Quiver(IntMatrix{{0, 1}, {1, 0}})).has_value());
  EXPECT_FALSE(quiver_isomorphism(Quiver(IntMatrix{{0}}), Quiver(IntMatrix{{0, 0}, {0, 0}})).has_value());
}

TEST(Quiver, IsomorphismReturnsLeastPermutation) {
  const Quiver q(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto sigma = quiver_isomorphism(q, q);
  ASSERT_TRUE(sigma.has_value());
  EXPECT_EQ(*sigma, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Quiver, ArrowPatterns) {
  EXPECT_TRUE(arrow_pattern_tests(Quiver(IntMatrix{{1, 0}, {0, 1}})).is_identity_pattern);
  EXPECT_FALSE(arrow_pattern_tests(Quiver(IntMatrix{{1, 1}, {0, 1}})).is_identity_pattern);
  EXPECT_TRUE(arrow_pattern_tests(Quiver(IntMatrix{{0}})).is_q0);
  EXPECT_FALSE(arrow_pattern_tests(Quiver(IntMatrix{{1}})).is_q0);
  EXPECT_TRUE(arrow_pattern_tests(Quiver(IntMatrix{{1, 1}, {1, 1}})).all_pairs_connected);
  EXPECT_FALSE(arrow_pattern_tests(Quiver(IntMatrix{{0, 1}, {1, 1}})).all_pairs_connected);
}
