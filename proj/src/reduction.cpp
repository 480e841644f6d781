#include "quiverthick/error.hpp"
#include "quiverthick/polynomial.hpp"
#include "quiverthick/representation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace quiverthick {

namespace {

constexpr int kRandomTrials = 32;
constexpr double kExhaustiveLimit = 4096;

HomElement combine(const HomSpace& space, const std::vector<Scalar>& coeffs) {
  const auto& f = space.basis.front().source.field();
  HomElement out = space.basis.front();
  for (auto& c : out.components) c = Matrix(c.rows(), c.cols());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (Field::is_zero(coeffs[k])) continue;
    for (std::size_t i = 0; i < out.components.size(); ++i)
      out.components[i] = add(f, out.components[i], scale(f, coeffs[k], space.basis[k].components[i]));
  }
  return out;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) return f.from(static_cast<long>(rng() % static_cast<std::uint64_t>(f.characteristic())));
  return f.from(static_cast<long>(rng() % 7) - 3);
}

/// Candidate elements of a Hom space: basis, pairwise sums, then seeded random combinations.
template <typename Visit>
bool for_each_candidate(const HomSpace& space, std::uint64_t seed, Visit&& visit) {
  const auto dim = space.dim();
  if (dim == 0) return false;
  const auto& f = space.basis.front().source.field();
  for (const auto& b : space.basis)
    if (visit(b)) return true;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = k + 1; l < dim; ++l) {
      std::vector<Scalar> coeffs(dim, Scalar(0));
      coeffs[k] = 1;
      coeffs[l] = 1;
      if (visit(combine(space, coeffs))) return true;
    }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < dim; ++k) coeffs.push_back(random_scalar(f, rng));
    if (visit(combine(space, coeffs))) return true;
  }
  return false;
}

bool same_dims(const Representation& m, const Representation& n) { return m.dims() == n.dims(); }

/// Block-diagonal matrix of all components of an endomorphism.
Matrix total_matrix(const HomElement& h) {
  std::size_t n = 0;
  for (const auto& c : h.components) n += c.rows();
  Matrix out(n, n);
  std::size_t off = 0;
  for (const auto& c : h.components) {
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t col = 0; col < c.cols(); ++col) out(off + r, off + col) = c(r, col);
    off += c.rows();
  }
  return out;
}

bool is_scalar(const HomElement& h) {
  std::optional<Scalar> lambda;
  for (const auto& c : h.components)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t col = 0; col < c.cols(); ++col) {
        if (r != col) {
          if (!Field::is_zero(c(r, col))) return false;
        } else if (!lambda) {
          lambda = c(r, col);
        } else if (*lambda != c(r, col)) {
          return false;
        }
      }
  return true;
}

HomElement apply_polynomial(const Polynomial& p, const HomElement& h) {
  HomElement out = h;
  for (auto& c : out.components) c = poly_eval(h.source.field(), p, c);
  return out;
}

/// A nonzero non-invertible endomorphism of a representation whose End has dim > 1.
HomElement split_endomorphism(const HomSpace& end, std::size_t member, std::uint64_t seed) {
  std::optional<HomElement> found;
  std::optional<Polynomial> first_unsplit;
  for_each_candidate(end, seed, [&](const HomElement& h) {
    if (h.is_zero() || is_scalar(h)) return false;
    if (!h.is_invertible()) {
      found = h;
      return true;
    }
    const auto& f = h.source.field();
    const auto mu = minimal_polynomial(f, total_matrix(h));
    // mu = u v with u proper: u(h) != 0 by minimality and u(h) is singular, else v(h) = 0.
    if (auto u = proper_factor(f, mu, seed)) {
      found = apply_polynomial(*u, h);
      return true;
    }
    if (!first_unsplit) first_unsplit = mu;
    return false;
  });
  if (found) return *found;
  throw NeedsFieldExtension(first_unsplit ? to_string(*first_unsplit) : std::string("?"), member);
}

void append_nonzero(std::vector<Representation>& out, const Representation& m) {
  if (!m.is_zero()) out.push_back(m);
}

}  // namespace

std::optional<HomElement> find_isomorphism(const Representation& m, const Representation& n, std::uint64_t seed) {
  require_compatible(m, n);
  if (!same_dims(m, n)) return std::nullopt;
  const auto space = hom_basis(m, n);
  if (space.dim() == 0) return m.is_zero() ? std::optional<HomElement>(HomElement{m, n, {}}) : std::nullopt;
  std::optional<HomElement> iso;
  for_each_candidate(space, seed, [&](const HomElement& h) {
    if (!h.is_invertible()) return false;
    iso = h;
    return true;
  });
  if (iso) return iso;
  const auto& f = m.field();
  if (f.is_prime() && std::pow(static_cast<double>(f.characteristic()), space.dim()) <= kExhaustiveLimit) {
    const auto p = f.characteristic();
    std::vector<long> digits(space.dim(), 0);
    while (true) {
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
      std::vector<Scalar> coeffs;
      for (auto d : digits) coeffs.push_back(f.from(d));
      auto h = combine(space, coeffs);
      if (h.is_invertible()) return h;
    }
  }
  return std::nullopt;
}

std::vector<Representation> reduce_to_vertex_like(const std::vector<Representation>& family, std::uint64_t seed) {
  if (family.empty()) throw InvalidArgument("empty family");
  for (const auto& m : family) require_compatible(family.front(), m);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_zero()) throw InvalidArgument("family member " + std::to_string(i) + " is zero");
    if (!radical_filtration(family[i]).is_nilpotent)
      throw InvalidArgument("family member " + std::to_string(i) + " is not nilpotent");
  }

  std::vector<Representation> current = family;
  Integer total = 0;
  for (const auto& m : current) total += m.total_dimension();
  // Each move lowers the total dimension or keeps it while the family grows (size <= total).
  const auto move_budget = (total + 1) * (total + 1) + 1;

  for (Integer moves = 0;; ++moves) {
    if (moves > move_budget) throw std::logic_error("reduction did not terminate");
    bool changed = false;

    for (std::size_t i = 0; i < current.size() && !changed; ++i)
      for (std::size_t j = 0; j < current.size() && !changed; ++j) {
        if (i == j) continue;
        const auto space = hom_basis(current[i], current[j]);
        if (space.dim() == 0) continue;
        changed = true;
        if (find_isomorphism(current[i], current[j], seed + moves)) {
          current.erase(current.begin() + static_cast<std::ptrdiff_t>(j));
          break;
        }
        // No basis element is invertible, so the first one is a nonzero non-isomorphism.
        const auto& f = space.basis.front();
        std::vector<Representation> pieces;
        append_nonzero(pieces, kernel_rep(f));
        append_nonzero(pieces, image_rep(f));
        append_nonzero(pieces, cokernel_rep(f));
        std::vector<Representation> next;
        for (std::size_t k = 0; k < current.size(); ++k) {
          if (k == i)
            next.insert(next.end(), pieces.begin(), pieces.end());
          else if (k != j)
            next.push_back(current[k]);
        }
        current = std::move(next);
      }
    if (changed) continue;

    for (std::size_t i = 0; i < current.size() && !changed; ++i) {
      const auto end = hom_basis(current[i], current[i]);
      if (end.dim() <= 1) continue;
      const auto f = split_endomorphism(end, i, seed + moves);
      auto kernel = kernel_rep(f);
      auto image = image_rep(f);
      current[i] = std::move(kernel);
      current.insert(current.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(image));
      changed = true;
    }
    if (!changed) break;
  }

  if (!is_vertex_like(current).vertex_like) throw std::logic_error("reduction produced a non vertex-like family");
  return current;
}

}  // namespace quiverthick
