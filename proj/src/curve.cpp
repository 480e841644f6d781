#include "quiverthick/curve.hpp"

#include <algorithm>
#include <optional>
#include <gmpxx.h>

namespace quiverthick {

namespace {

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<std::pair<Integer, Integer>> flat(const Witness& w) {
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& b : w.bundles) out.emplace_back(b.rank, b.degree);
  return out;
}

}  // namespace

void Witness::validate() const {
  if (genus < 0) throw InvalidArgument("genus must be nonnegative");
  if (bundles.empty()) throw InvalidArgument("witness needs at least one bundle");
  for (const auto& b : bundles)
    if (b.rank < 1) throw InvalidArgument("bundle rank must be positive");
}

Integer chi_curve(const BundleClass& e, const BundleClass& f, Integer genus) {
  return e.rank * f.rank * (1 - genus) + e.rank * f.degree - f.rank * e.degree;
}

Quiver realized_quiver(const Witness& w) {
  w.validate();
  const auto n = w.bundles.size();
  IntMatrix a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = (i == j ? 1 : 0) - chi_curve(w.bundles[j], w.bundles[i], w.genus);
      if (a[i][j] < 0) throw NegativeEntry(i, j, a[i][j]);
    }
  return Quiver(std::move(a));
}

bool slope_condition(const Witness& w) {
  w.validate();
  const mpq_class bound(w.genus - 1);
  for (std::size_t i = 0; i < w.bundles.size(); ++i)
    for (std::size_t j = i + 1; j < w.bundles.size(); ++j) {
      mpq_class si(mpz_class(w.bundles[i].degree), mpz_class(w.bundles[i].rank));
      mpq_class sj(mpz_class(w.bundles[j].degree), mpz_class(w.bundles[j].rank));
      si.canonicalize();
      sj.canonicalize();
      if (abs(si - sj) > bound) return false;
    }
  return true;
}

Witness twist(const Witness& w, Integer m) {
  Witness out = w;
  for (auto& b : out.bundles) b.degree += m * b.rank;
  return out;
}

Witness permute(const Witness& w, const std::vector<std::size_t>& sigma) {
  const auto n = w.bundles.size();
  if (sigma.size() != n) throw InvalidArgument("permutation length does not match witness length");
  Witness out = w;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || seen[sigma[i]]) throw InvalidArgument("not a permutation");
    seen[sigma[i]] = true;
    out.bundles[sigma[i]] = w.bundles[i];
  }
  return out;
}

Witness normalize_twist(const Witness& w) {
  w.validate();
  const auto& lead = w.bundles.front();
  return twist(w, -floor_div(lead.degree, lead.rank));
}

Witness canonicalize(const Witness& w) {
  w.validate();
  std::optional<Witness> best;
  for (std::size_t p = 0; p < w.bundles.size(); ++p) {
    const auto& lead = w.bundles[p];
    Witness candidate = twist(w, -floor_div(lead.degree, lead.rank));
    std::swap(candidate.bundles[0], candidate.bundles[p]);
    std::sort(candidate.bundles.begin() + 1, candidate.bundles.end());
    if (!best || flat(candidate) < flat(*best)) best = std::move(candidate);
  }
  return *best;
}

}  // namespace quiverthick
