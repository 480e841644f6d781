#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace quiverthick {

using Integer = std::int64_t;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Class in K_0 of the nilpotent representations, written over the simples.
struct ClassVector {
  std::vector<Integer> coords;

  std::size_t size() const { return coords.size(); }
  Integer operator[](std::size_t i) const { return coords[i]; }
  Integer& operator[](std::size_t i) { return coords[i]; }

  static ClassVector unit(std::size_t n, std::size_t i);

  friend ClassVector operator+(const ClassVector& a, const ClassVector& b);
  friend ClassVector operator*(Integer k, const ClassVector& a);
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// Finite quiver given by its adjacency matrix: entry (i, j) is the number of
/// arrows from vertex i to vertex j. Vertices are 0-based.
class Quiver {
 public:
  /// Throws InvalidArgument on a non-square, empty or negative matrix.
  explicit Quiver(IntMatrix adjacency);

  std::size_t vertex_count() const { return adjacency_.size(); }
  Integer arrows(std::size_t from, std::size_t to) const { return adjacency_[from][to]; }
  const IntMatrix& adjacency() const { return adjacency_; }
  Integer total_arrows() const;

  /// Quiver with adjacency'[sigma(i)][sigma(j)] = adjacency[i][j].
  Quiver relabeled(const std::vector<std::size_t>& sigma) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  IntMatrix adjacency_;
};

/// Euler form chi(m, n) = sum_i m_i n_i - sum_{a: s -> t} m_t n_s.
/// On simples this is delta_ij - adjacency[j][i], i.e. dim Hom - dim Ext^1.
Integer euler_form(const Quiver& q, const ClassVector& m, const ClassVector& n);

/// Lexicographically least vertex bijection sigma with
/// other[sigma(i)][sigma(j)] == q[i][j], if any.
std::optional<std::vector<std::size_t>> quiver_isomorphism(const Quiver& q, const Quiver& other);

struct ArrowPattern {
  bool is_identity_pattern = false;  ///< disjoint union of one-loop vertices
  bool is_q0 = false;                ///< single vertex, no arrows
  bool all_pairs_connected = false;  ///< every ordered pair (i, j), i == j included, has an arrow
};

ArrowPattern arrow_pattern_tests(const Quiver& q);

}  // namespace quiverthick
