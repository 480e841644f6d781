#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverthick/quiver.hpp"

namespace quiverthick {

using BigInt = mpz_class;
using BigMatrix2 = std::array<std::array<BigInt, 2>, 2>;
using BigClass = std::vector<BigInt>;

/// Node of the descending binary tree of thick subcategories of D^b_0(Q) for
/// a two-vertex quiver Q with arrows between every ordered pair of vertices.
struct TreeNode {
  BigMatrix2 node_quiver;                   ///< quiver realized by the node's generators
  std::array<BigClass, 2> generator_classes;  ///< classes in K_0 of the ambient quiver
  BigInt chi_node;                          ///< chi(g_1 + g_2, g_1 + g_2) in the ambient Euler form
  std::size_t depth = 0;
  std::string path;                         ///< "" for the root, then 'L' / 'R' per level
  /// Branch multipliers (1, 2) or (3, 4) used to reach this node; absent at the root.
  std::optional<std::array<Integer, 2>> multipliers;
  /// chi_node of the parent; absent at the root.
  std::optional<BigInt> parent_chi;
};

inline constexpr std::size_t kDefaultDepthGuard = 20;

/// Throws InvalidArgument unless q has two vertices and all_pairs_connected.
TreeNode root_node(const Quiver& q);

/// Left child from the zigzag modules M^(1), M^(2) of the node quiver, right
/// child from M^(3), M^(4).
std::pair<TreeNode, TreeNode> children(const TreeNode& node);

/// Full tree of the given depth, breadth-first (2^(depth+1) - 1 nodes).
/// Throws InvalidArgument when depth exceeds the guard.
std::vector<TreeNode> build_tree(const Quiver& q, std::size_t depth, std::size_t depth_guard = kDefaultDepthGuard);

/// Checks the structural invariants of a node (entries >= 1, chi <= -2 and the
/// multiplier formula for the node quiver). Returns the violated ones.
std::vector<std::string> check_node_invariants(const TreeNode& node);

struct NodeVerification {
  bool passed = false;
  std::array<std::array<std::size_t, 4>, 4> hom{};   ///< hom[i][j] = dim Hom(M^(i+1), M^(j+1))
  std::array<std::array<std::size_t, 4>, 4> ext1{};  ///< ext1[i][j] = dim Ext^1(M^(i+1), M^(j+1))
  Integer chi = 0;                                   ///< Euler form of the node quiver on (1, 1)
  std::vector<std::string> failures;
};

inline constexpr std::int64_t kVerificationPrime = 32003;

/// Instantiates the node quiver, builds M^(1..4) over F_32003 in a seeded
/// random basis and checks Hom = delta, Ext^1 = delta - i j chi >= 1 (both
/// Ext routes), and vanishing cross Hom between {M^(1), M^(2)} and {M^(3), M^(4)}.
/// Throws InvalidArgument if the node quiver does not fit machine integers.
NodeVerification verify_node(const TreeNode& node, std::uint64_t seed);

}  // namespace quiverthick
