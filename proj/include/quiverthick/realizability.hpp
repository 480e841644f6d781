#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quiverthick/curve.hpp"
#include "quiverthick/quiver.hpp"

namespace quiverthick {

/// First violated necessary condition, in the fixed order
/// diagonal -> pair sum -> parity -> integral degrees.
struct ReasonCode {
  enum class Kind { BadDiagonal, BadPairSum, BadParity, NoIntegralDegrees, GenusPatternMismatch };

  Kind kind = Kind::GenusPatternMismatch;
  std::optional<std::size_t> i;
  std::optional<std::size_t> j;

  /// e.g. "BadPairSum(0,1)" or "NoIntegralDegrees".
  std::string to_string() const;
  static std::string kind_name(Kind kind);

  friend bool operator==(const ReasonCode&, const ReasonCode&) = default;
};

struct Verdict {
  enum class Kind { TorsionFree, Torsion, GenusZeroProjective, NotRealizable };

  Kind kind = Kind::NotRealizable;
  std::optional<Witness> witness;    ///< set for TorsionFree
  std::optional<ReasonCode> reason;  ///< set for NotRealizable

  bool realizable() const { return kind != Kind::NotRealizable; }
  static std::string kind_name(Kind kind);

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Decides torsion-free realizability of q on a curve of genus g >= 2.
/// On success the witness realizes q exactly (same vertex order) and has
/// d_0 in [0, r_0). Throws InvalidArgument for g < 2.
std::variant<Witness, ReasonCode> solve_torsion_free(Integer genus, const Quiver& q);

/// Full classification of q as a proper finitely generated thick subcategory
/// on a curve of the given genus.
Verdict classify(Integer genus, const Quiver& q);

struct GeneraReport {
  /// Identity pattern: realized by torsion sheaves on every curve.
  bool torsion_on_every_genus = false;
  /// Every other realizing genus, ascending. Finite.
  std::vector<std::pair<Integer, Verdict>> realizable;
};

GeneraReport realizable_genera(const Quiver& q);

/// Same orbit under twists and permutations. Throws InvalidArgument on different genera.
bool witness_equivalent(const Witness& w, const Witness& other);

}  // namespace quiverthick
