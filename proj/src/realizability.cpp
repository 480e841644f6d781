#include "quiverthick/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quiverthick {

namespace {

using Wide = __int128;

std::optional<Integer> exact_sqrt(Integer v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<Integer>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<Wide>(r) * r > v) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= v) ++r;
  if (static_cast<Wide>(r) * r != v) return std::nullopt;
  return r;
}

ReasonCode reason(ReasonCode::Kind kind, std::optional<std::size_t> i = {}, std::optional<std::size_t> j = {}) {
  return ReasonCode{kind, i, j};
}

Verdict not_realizable(ReasonCode r) { return Verdict{Verdict::Kind::NotRealizable, std::nullopt, std::move(r)}; }

Quiver identity_quiver(std::size_t n) {
  IntMatrix a(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return Quiver(std::move(a));
}

bool is_identity_like(const Quiver& q) {
  return quiver_isomorphism(q, identity_quiver(q.vertex_count())).has_value();
}

bool is_q0_like(const Quiver& q) { return quiver_isomorphism(q, Quiver(IntMatrix{{0}})).has_value(); }

}  // namespace

std::string ReasonCode::kind_name(Kind kind) {
  switch (kind) {
    case Kind::BadDiagonal: return "BadDiagonal";
    case Kind::BadPairSum: return "BadPairSum";
    case Kind::BadParity: return "BadParity";
    case Kind::NoIntegralDegrees: return "NoIntegralDegrees";
    case Kind::GenusPatternMismatch: return "GenusPatternMismatch";
  }
  return "?";
}

std::string ReasonCode::to_string() const {
  std::string out = kind_name(kind);
  if (i && j) return out + "(" + std::to_string(*i) + "," + std::to_string(*j) + ")";
  if (i) return out + "(" + std::to_string(*i) + ")";
  return out;
}

std::string Verdict::kind_name(Kind kind) {
  switch (kind) {
    case Kind::TorsionFree: return "TorsionFree";
    case Kind::Torsion: return "Torsion";
    case Kind::GenusZeroProjective: return "GenusZeroProjective";
    case Kind::NotRealizable: return "NotRealizable";
  }
  return "?";
}

std::variant<Witness, ReasonCode> solve_torsion_free(Integer genus, const Quiver& q) {
  if (genus < 2) throw InvalidArgument("solve_torsion_free needs genus >= 2; use classify");
  const auto n = q.vertex_count();
  const Integer gm1 = genus - 1;

  // a_ii = r_i^2 (g - 1) + 1.
  std::vector<Integer> ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer excess = q.arrows(i, i) - 1;
    if (excess <= 0 || excess % gm1 != 0) return reason(ReasonCode::Kind::BadDiagonal, i);
    auto r = exact_sqrt(excess / gm1);
    if (!r) return reason(ReasonCode::Kind::BadDiagonal, i);
    ranks[i] = *r;
  }

  // a_ij + a_ji = 2 r_i r_j (g - 1);  a_ij - a_ji = 2 (r_i d_j - r_j d_i).
  std::vector<std::vector<Wide>> skew(n, std::vector<Wide>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Wide sum = static_cast<Wide>(q.arrows(i, j)) + q.arrows(j, i);
      if (sum != Wide{2} * ranks[i] * ranks[j] * gm1) return reason(ReasonCode::Kind::BadPairSum, i, j);
      // Implied by the pair-sum equation; checked to keep the certificate order explicit.
      const Wide diff = static_cast<Wide>(q.arrows(i, j)) - q.arrows(j, i);
      if (diff % 2 != 0) return reason(ReasonCode::Kind::BadParity, i, j);
      skew[i][j] = diff / 2;
      skew[j][i] = -skew[i][j];
    }

  // d_0 ranges over one period of the twist d_0 -> d_0 + r_0; d_j then follows from row 0.
  const Integer r0 = ranks[0];
  for (Integer t = 0; t < r0; ++t) {
    std::vector<Wide> degrees(n);
    degrees[0] = t;
    bool integral = true;
    for (std::size_t j = 1; j < n && integral; ++j) {
      const Wide num = static_cast<Wide>(ranks[j]) * t + skew[0][j];
      if (num % r0 != 0)
        integral = false;
      else
        degrees[j] = num / r0;
    }
    if (!integral) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < n && consistent; ++i)
      for (std::size_t j = i + 1; j < n && consistent; ++j)
        consistent = skew[i][j] == static_cast<Wide>(ranks[i]) * degrees[j] - static_cast<Wide>(ranks[j]) * degrees[i];
    if (!consistent) continue;

    Witness w{genus, {}};
    for (std::size_t i = 0; i < n; ++i) w.bundles.push_back(BundleClass{ranks[i], static_cast<Integer>(degrees[i])});
    if (!(realized_quiver(w) == q)) throw std::logic_error("solver witness does not realize its quiver");
    return w;
  }
  return reason(ReasonCode::Kind::NoIntegralDegrees);
}

Verdict classify(Integer genus, const Quiver& q) {
  if (genus < 0) throw InvalidArgument("genus must be nonnegative");
  const bool identity = is_identity_like(q);
  if (genus == 0) {
    if (is_q0_like(q)) return Verdict{Verdict::Kind::GenusZeroProjective, std::nullopt, std::nullopt};
    if (identity) return Verdict{Verdict::Kind::Torsion, std::nullopt, std::nullopt};
    return not_realizable(reason(ReasonCode::Kind::GenusPatternMismatch));
  }
  if (identity) return Verdict{Verdict::Kind::Torsion, std::nullopt, std::nullopt};
  if (genus == 1) return not_realizable(reason(ReasonCode::Kind::GenusPatternMismatch));
  auto solved = solve_torsion_free(genus, q);
  if (auto* w = std::get_if<Witness>(&solved)) return Verdict{Verdict::Kind::TorsionFree, *w, std::nullopt};
  return not_realizable(std::get<ReasonCode>(solved));
}

GeneraReport realizable_genera(const Quiver& q) {
  GeneraReport report;
  if (is_identity_like(q)) {
    report.torsion_on_every_genus = true;
    return report;
  }
  if (is_q0_like(q)) {
    report.realizable.emplace_back(0, classify(0, q));
    return report;
  }
  Integer smallest = q.arrows(0, 0) - 1;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) smallest = std::min(smallest, q.arrows(i, i) - 1);
  if (smallest <= 0) return report;

  // g - 1 = (a_ii - 1) / r_i^2 for every i; enumerate through vertex 0.
  const Integer excess0 = q.arrows(0, 0) - 1;
  std::vector<Integer> genera;
  for (Integer r = 1; static_cast<Wide>(r) * r <= excess0; ++r) {
    if (excess0 % (r * r) != 0) continue;
    const Integer gm1 = excess0 / (r * r);
    bool fits = true;
    for (std::size_t i = 0; i < q.vertex_count() && fits; ++i) {
      const Integer excess = q.arrows(i, i) - 1;
      fits = excess % gm1 == 0 && exact_sqrt(excess / gm1).has_value();
    }
    if (fits && gm1 + 1 >= 2) genera.push_back(gm1 + 1);
  }
  std::sort(genera.begin(), genera.end());
  for (auto g : genera) {
    auto verdict = classify(g, q);
    if (verdict.realizable()) report.realizable.emplace_back(g, std::move(verdict));
  }
  return report;
}

bool witness_equivalent(const Witness& w, const Witness& other) {
  if (w.genus != other.genus) throw InvalidArgument("witness_equivalent compares witnesses of one genus");
  if (w.bundles.size() != other.bundles.size()) return false;
  return canonicalize(w) == canonicalize(other);
}

}  // namespace quiverthick
