#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quiverthick/error.hpp"
#include "quiverthick/quiver.hpp"

namespace quiverthick {

/// Numerical shadow of a vector bundle on a curve: rank and degree.
struct BundleClass {
  Integer rank = 1;
  Integer degree = 0;

  friend auto operator<=>(const BundleClass&, const BundleClass&) = default;
};

/// Genus-tagged list of bundle classes certifying a torsion-free realization.
struct Witness {
  Integer genus = 0;
  std::vector<BundleClass> bundles;

  /// Throws InvalidArgument on negative genus, an empty list or a rank < 1.
  void validate() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Raised by realized_quiver when an entry of the would-be quiver is negative.
class NegativeEntry : public Error {
 public:
  NegativeEntry(std::size_t i, std::size_t j, Integer value)
      : Error("realized quiver entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is " +
              std::to_string(value)),
        i_(i), j_(j), value_(value) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  Integer value() const { return value_; }

 private:
  std::size_t i_, j_;
  Integer value_;
};

/// Riemann-Roch: chi(E, F) = r(E) r(F) (1 - g) + r(E) d(F) - r(F) d(E).
Integer chi_curve(const BundleClass& e, const BundleClass& f, Integer genus);

/// a_ij = r_i r_j (g - 1) - r_j d_i + r_i d_j + delta_ij = delta_ij - chi(E_j, E_i).
/// Throws NegativeEntry for the first negative entry in row-major order.
Quiver realized_quiver(const Witness& w);

/// |d_i / r_i - d_j / r_j| <= g - 1 for all pairs, in exact arithmetic.
bool slope_condition(const Witness& w);

/// Tensoring by a degree-m line bundle: d_i -> d_i + m r_i.
Witness twist(const Witness& w, Integer m);
/// Reindexing: bundle i moves to position sigma(i), so the realized quiver is
/// relabeled by sigma.
Witness permute(const Witness& w, const std::vector<std::size_t>& sigma);

/// Twist that puts d_0 into [0, r_0), leaving the order unchanged.
Witness normalize_twist(const Witness& w);

/// Normal form of the orbit under twists and permutations: among all choices of
/// a leading bundle p, twist so that d_p lies in [0, r_p), put p first and sort
/// the remaining pairs; return the lexicographically least result.
Witness canonicalize(const Witness& w);

}  // namespace quiverthick
