#include "quiverthick/quiver.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "quiverthick/error.hpp"

namespace quiverthick {

ClassVector ClassVector::unit(std::size_t n, std::size_t i) {
  ClassVector v{std::vector<Integer>(n, 0)};
  v.coords.at(i) = 1;
  return v;
}

ClassVector operator+(const ClassVector& a, const ClassVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("class vector length mismatch");
  ClassVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

ClassVector operator*(Integer k, const ClassVector& a) {
  ClassVector out = a;
  for (auto& c : out.coords) c *= k;
  return out;
}

Quiver::Quiver(IntMatrix adjacency) : adjacency_(std::move(adjacency)) {
  const auto n = adjacency_.size();
  if (n == 0) throw InvalidArgument("quiver needs at least one vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency_[i].size() != n)
      throw InvalidArgument("adjacency matrix is not square (row " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < n; ++j)
      if (adjacency_[i][j] < 0)
        throw InvalidArgument("negative arrow count at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
  }
}

Integer Quiver::total_arrows() const {
  Integer total = 0;
  for (const auto& row : adjacency_)
    for (auto a : row) total += a;
  return total;
}

Quiver Quiver::relabeled(const std::vector<std::size_t>& sigma) const {
  const auto n = vertex_count();
  if (sigma.size() != n) throw InvalidArgument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (auto s : sigma) {
    if (s >= n || seen[s]) throw InvalidArgument("not a permutation");
    seen[s] = true;
  }
  IntMatrix out(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[sigma[i]][sigma[j]] = adjacency_[i][j];
  return Quiver(std::move(out));
}

Integer euler_form(const Quiver& q, const ClassVector& m, const ClassVector& n) {
  const auto size = q.vertex_count();
  if (m.size() != size || n.size() != size)
    throw InvalidArgument("class vector length does not match vertex count");
  Integer chi = 0;
  for (std::size_t i = 0; i < size; ++i) chi += m[i] * n[i];
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t t = 0; t < size; ++t) chi -= q.arrows(s, t) * m[t] * n[s];
  return chi;
}

namespace {

using Signature = std::tuple<Integer, Integer, Integer>;

std::vector<Signature> signatures(const Quiver& q) {
  const auto n = q.vertex_count();
  std::vector<Signature> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer in = 0, outdeg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      in += q.arrows(j, i);
      outdeg += q.arrows(i, j);
    }
    out[i] = {q.arrows(i, i), in, outdeg};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Quiver& q, const Quiver& other)
      : q_(q), other_(other), sig_q_(signatures(q)), sig_o_(signatures(other)),
        sigma_(q.vertex_count()), used_(q.vertex_count(), false) {}

  bool run(std::size_t i) {
    const auto n = q_.vertex_count();
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used_[c] || sig_q_[i] != sig_o_[c]) continue;
      if (!consistent(i, c)) continue;
      used_[c] = true;
      sigma_[i] = c;
      if (run(i + 1)) return true;
      used_[c] = false;
    }
    return false;
  }

  const std::vector<std::size_t>& sigma() const { return sigma_; }

 private:
  bool consistent(std::size_t i, std::size_t c) const {
    if (q_.arrows(i, i) != other_.arrows(c, c)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (q_.arrows(i, j) != other_.arrows(c, sigma_[j])) return false;
      if (q_.arrows(j, i) != other_.arrows(sigma_[j], c)) return false;
    }
    return true;
  }

  const Quiver& q_;
  const Quiver& other_;
  std::vector<Signature> sig_q_, sig_o_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> quiver_isomorphism(const Quiver& q, const Quiver& other) {
  if (q.vertex_count() != other.vertex_count()) return std::nullopt;
  auto a = signatures(q), b = signatures(other);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  // Candidates are tried in increasing order, so the first hit is lexicographically least.
  IsoSearch search(q, other);
  if (!search.run(0)) return std::nullopt;
  return search.sigma();
}

ArrowPattern arrow_pattern_tests(const Quiver& q) {
  const auto n = q.vertex_count();
  ArrowPattern p;
  p.is_identity_pattern = true;
  p.all_pairs_connected = true;
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = q.arrows(i, j);
      if (a != (i == j ? 1 : 0)) p.is_identity_pattern = false;
      if (a < 1) p.all_pairs_connected = false;
      if (a != 0) all_zero = false;
    }
  p.is_q0 = n == 1 && all_zero;
  return p;
}

}  // namespace quiverthick
