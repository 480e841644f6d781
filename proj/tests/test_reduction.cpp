#include <gtest/gtest.h>

#include "quiverthick/error.hpp"
#include "quiverthick/representation.hpp"
#include "support.hpp"

using namespace quiverthick;

namespace {

const Quiver kZig(IntMatrix{{1, 0}, {1, 1}});

void expect_vertex_like(const std::vector<Representation>& out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_FALSE(out[i].is_zero());
    for (std::size_t j = 0; j < out.size(); ++j) EXPECT_EQ(hom_dim(out[i], out[j]), i == j ? 1u : 0u);
  }
}

// Kronecker module on two arrows 1 -> 0 whose endomorphism ring is k[x]/(x^2 + 1).
Representation rotation_module(const Field& f) {
  const Quiver q(IntMatrix{{0, 0}, {2, 0}});
  Matrix rot(2, 2);
  rot(0, 1) = f.from(-1);
  rot(1, 0) = f.from(1);
  return Representation(q, f, {2, 2}, {{{1, 0, 0}, Matrix::identity(2)}, {{1, 0, 1}, rot}});
}

}  // namespace

TEST(Reduction, CollapsesDuplicatesAndSums) {
  for (const auto& f : {Field::rationals(), Field::prime(7)}) {
    const auto s0 = simple_rep(kZig, f, 0), s1 = simple_rep(kZig, f, 1);
    const auto dup = reduce_to_vertex_like({s0, s0});
    ASSERT_EQ(dup.size(), 1u);
    EXPECT_EQ(dup[0].dims(), (std::vector<Integer>{1, 0}));

    const auto square = reduce_to_vertex_like({direct_sum(s0, s0)});
    ASSERT_EQ(square.size(), 1u);
    EXPECT_EQ(square[0].dims(), (std::vector<Integer>{1, 0}));

    const auto split = reduce_to_vertex_like({direct_sum(s0, s1)});
    expect_vertex_like(split);
    const auto realized = is_vertex_like(split).realized_quiver;
    EXPECT_TRUE(quiver_isomorphism(*realized, kZig).has_value());
  }
}

TEST(Reduction, ZigzagWithSimpleReducesToSimples) {
  const auto f = Field::rationals();
  const auto s0 = simple_rep(kZig, f, 0);
  const auto out = reduce_to_vertex_like({direct_sum(zigzag(kZig, f, 1), s0), s0});
  expect_vertex_like(out);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(quiver_isomorphism(*is_vertex_like(out).realized_quiver, kZig).has_value());
}

TEST(Reduction, VertexLikeInputIsKept) {
  const auto f = Field::prime(7);
  const Quiver q(IntMatrix{{1, 1}, {1, 1}});
  const std::vector<Representation> family{zigzag(q, f, 1), zigzag(q, f, 2)};
  const auto out = reduce_to_vertex_like(family);
  EXPECT_EQ(out, family);
}

TEST(Reduction, RandomFamiliesBecomeVertexLike) {
  std::mt19937_64 rng(41);
  const auto f = Field::prime(7);
  const Quiver q(IntMatrix{{1, 0}, {1, 1}});
  std::vector<Representation> blocks{simple_rep(q, f, 0), simple_rep(q, f, 1), zigzag(q, f, 1), zigzag(q, f, 2)};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Representation> family;
    const auto size = qt_test::draw(rng, 1, 3);
    for (Integer k = 0; k < size; ++k) {
      const auto& a = blocks[static_cast<std::size_t>(qt_test::draw(rng, 0, 3))];
      const auto& b = blocks[static_cast<std::size_t>(qt_test::draw(rng, 0, 3))];
      family.push_back(qt_test::extension(a, b, qt_test::random_gluing(a, b, rng)));
    }
    const auto out = reduce_to_vertex_like(family, static_cast<std::uint64_t>(trial));
    expect_vertex_like(out);
  }
}

TEST(Reduction, IrreducibleEndomorphismNeedsExtension) {
  try {
    reduce_to_vertex_like({rotation_module(Field::rationals())});
    FAIL() << "expected NeedsFieldExtension";
  } catch (const NeedsFieldExtension& e) {
    EXPECT_NE(e.minimal_polynomial().find("x^2"), std::string::npos);
    EXPECT_EQ(e.member(), 0u);
  }
  const auto split = reduce_to_vertex_like({rotation_module(Field::prime(5))});
  expect_vertex_like(split);
  // Over F_5 the polynomial x^2 + 1 splits and the module breaks into two orthogonal pieces.
  ASSERT_EQ(split.size(), 2u);
  for (const auto& m : split) EXPECT_EQ(m.dims(), (std::vector<Integer>{1, 1}));
}

TEST(Reduction, RejectsBadInput) {
  const auto f = Field::rationals();
  EXPECT_THROW(reduce_to_vertex_like({}), InvalidArgument);
  EXPECT_THROW(reduce_to_vertex_like({zero_rep(kZig, f)}), InvalidArgument);
}
