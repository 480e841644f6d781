#include "quiverthick/tree.hpp"

#include <random>

#include "quiverthick/error.hpp"
#include "quiverthick/representation.hpp"

namespace quiverthick {

namespace {

TreeNode child(const TreeNode& node, std::array<Integer, 2> k, char side) {
  const BigClass& g1 = node.generator_classes[0];
  const BigClass& g2 = node.generator_classes[1];
  BigClass sum(g1.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = g1[i] + g2[i];

  TreeNode out;
  for (std::size_t g = 0; g < 2; ++g) {
    out.generator_classes[g] = sum;
    for (auto& c : out.generator_classes[g]) c *= k[g];
  }
  const Integer total = k[0] + k[1];
  out.chi_node = node.chi_node * (total * total);
  // dim Ext^1(M^(k_j), M^(k_i)) = delta_ij - k_i k_j chi, and Hom = delta_ij.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out.node_quiver[i][j] = BigInt(i == j ? 1 : 0) - node.chi_node * (k[i] * k[j]);
  out.depth = node.depth + 1;
  out.path = node.path + side;
  out.multipliers = k;
  out.parent_chi = node.chi_node;
  return out;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = f.from(static_cast<long>(rng() % static_cast<std::uint64_t>(f.characteristic())));
    if (is_invertible(f, m)) return m;
  }
}

}  // namespace

TreeNode root_node(const Quiver& q) {
  if (q.vertex_count() != 2 || !arrow_pattern_tests(q).all_pairs_connected)
    throw InvalidArgument("tree root needs a two-vertex quiver with an arrow between every ordered pair");
  TreeNode root;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) root.node_quiver[i][j] = BigInt(static_cast<long>(q.arrows(i, j)));
  root.generator_classes[0] = {BigInt(1), BigInt(0)};
  root.generator_classes[1] = {BigInt(0), BigInt(1)};
  root.chi_node = BigInt(static_cast<long>(2 - q.total_arrows()));
  return root;
}

std::pair<TreeNode, TreeNode> children(const TreeNode& node) {
  return {child(node, {1, 2}, 'L'), child(node, {3, 4}, 'R')};
}

std::vector<TreeNode> build_tree(const Quiver& q, std::size_t depth, std::size_t depth_guard) {
  if (depth > depth_guard)
    throw InvalidArgument("tree depth " + std::to_string(depth) + " exceeds the guard " + std::to_string(depth_guard));
  std::vector<TreeNode> nodes{root_node(q)};
  nodes.reserve((std::size_t{2} << depth) - 1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == depth) continue;
    auto [left, right] = children(nodes[i]);
    nodes.push_back(std::move(left));
    nodes.push_back(std::move(right));
  }
  return nodes;
}

std::vector<std::string> check_node_invariants(const TreeNode& node) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (node.node_quiver[i][j] < 1)
        problems.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") < 1");
  if (node.chi_node > -2) problems.push_back("chi_node > -2");
  if (node.multipliers && node.parent_chi) {
    const auto& k = *node.multipliers;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (node.node_quiver[i][j] != BigInt(i == j ? 1 : 0) - *node.parent_chi * (k[i] * k[j]))
          problems.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks the multiplier formula");
    if (node.chi_node >= *node.parent_chi) problems.push_back("chi_node does not decrease");
  }
  return problems;
}

NodeVerification verify_node(const TreeNode& node, std::uint64_t seed) {
  IntMatrix adjacency(2, std::vector<Integer>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (!node.node_quiver[i][j].fits_slong_p())
        throw InvalidArgument("node quiver at '" + node.path + "' is too large to instantiate");
      adjacency[i][j] = node.node_quiver[i][j].get_si();
    }
  const Quiver q(std::move(adjacency));
  const Field field = Field::prime(kVerificationPrime);
  std::mt19937_64 rng(seed);

  std::vector<Representation> modules;
  for (Integer k = 1; k <= 4; ++k) {
    const auto z = zigzag(q, field, k);
    modules.push_back(change_basis(z, {random_invertible(field, k, rng), random_invertible(field, k, rng)}));
  }

  NodeVerification report;
  report.chi = euler_form(q, ClassVector{{1, 1}}, ClassVector{{1, 1}});
  auto fail = [&](const std::string& what, std::size_t i, std::size_t j) {
    report.failures.push_back(what + " for (M^(" + std::to_string(i + 1) + "), M^(" + std::to_string(j + 1) + "))");
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& m = modules[i];
      const auto& n = modules[j];
      report.hom[i][j] = hom_dim(m, n);
      report.ext1[i][j] = ext1_dim(m, n);
      const Integer delta = i == j ? 1 : 0;
      const Integer expected = delta - static_cast<Integer>((i + 1) * (j + 1)) * report.chi;
      if (report.hom[i][j] != static_cast<std::size_t>(delta)) {
        const bool cross = (i < 2) != (j < 2);
        fail(cross ? "cross Hom does not vanish" : "Hom is not delta", i, j);
      }
      if (static_cast<Integer>(report.ext1[i][j]) != expected) fail("Ext^1 differs from delta - i j chi", i, j);
      if (report.ext1[i][j] < 1) fail("Ext^1 vanishes", i, j);
      if (ext1_dim_via_resolution(m, n) != report.ext1[i][j]) fail("Ext^1 routes disagree", i, j);
    }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace quiverthick
