#include "quiverthick/representation.hpp"

#include <numeric>
#include <set>
#include <string>

#include "quiverthick/error.hpp"

namespace quiverthick {

namespace {

std::string arrow_name(const ArrowId& a) {
  return std::to_string(a.source) + "->" + std::to_string(a.target) + "#" + std::to_string(a.copy);
}

std::vector<std::size_t> offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> out(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), out.begin() + 1);
  return out;
}

std::set<ArrowId> active_arrows(const Representation& m, const Representation& n) {
  std::set<ArrowId> out;
  for (const auto& [a, _] : m.nonzero_arrow_maps()) out.insert(a);
  for (const auto& [a, _] : n.nonzero_arrow_maps()) out.insert(a);
  return out;
}

std::size_t udim(const Representation& m, std::size_t i) { return static_cast<std::size_t>(m.dim(i)); }

}  // namespace

Representation::Representation(Quiver quiver, Field field, std::vector<Integer> dims,
                               std::map<ArrowId, Matrix> arrow_maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)) {
  const auto n = quiver_.vertex_count();
  if (dims_.size() != n) throw InvalidArgument("dimension vector length does not match vertex count");
  for (auto d : dims_)
    if (d < 0) throw InvalidArgument("negative component dimension");
  for (auto& [arrow, matrix] : arrow_maps) {
    if (arrow.source >= n || arrow.target >= n) throw InvalidArgument("arrow " + arrow_name(arrow) + " out of range");
    if (arrow.copy < 0 || arrow.copy >= quiver_.arrows(arrow.source, arrow.target))
      throw InvalidArgument("arrow " + arrow_name(arrow) + " does not exist in the quiver");
    if (matrix.rows() != static_cast<std::size_t>(dims_[arrow.source]) ||
        matrix.cols() != static_cast<std::size_t>(dims_[arrow.target]))
      throw InvalidArgument("arrow " + arrow_name(arrow) + " matrix has shape " + std::to_string(matrix.rows()) +
                            "x" + std::to_string(matrix.cols()) + ", expected dims[source] x dims[target]");
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      for (std::size_t c = 0; c < matrix.cols(); ++c) matrix(r, c) = field_.from(matrix(r, c));
    if (!matrix.is_zero()) arrow_maps_.emplace(arrow, std::move(matrix));
  }
}

Matrix Representation::arrow_map(const ArrowId& arrow) const {
  if (auto it = arrow_maps_.find(arrow); it != arrow_maps_.end()) return it->second;
  return Matrix(static_cast<std::size_t>(dims_.at(arrow.source)), static_cast<std::size_t>(dims_.at(arrow.target)));
}

Integer Representation::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), Integer{0}); }

bool HomElement::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

bool HomElement::is_morphism() const {
  const auto& f = source.field();
  for (const auto& a : active_arrows(source, target)) {
    const auto lhs = multiply(f, components[a.source], source.arrow_map(a));
    const auto rhs = multiply(f, target.arrow_map(a), components[a.target]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool HomElement::is_invertible() const {
  for (const auto& c : components)
    if (!quiverthick::is_invertible(source.field(), c)) return false;
  return true;
}

void require_compatible(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw InvalidArgument("representations live over different quivers");
  if (!(m.field() == n.field())) throw InvalidArgument("representations live over different fields");
}

Representation zero_rep(const Quiver& q, const Field& field) {
  return Representation(q, field, std::vector<Integer>(q.vertex_count(), 0), {});
}

Representation simple_rep(const Quiver& q, const Field& field, std::size_t vertex) {
  if (vertex >= q.vertex_count()) throw InvalidArgument("vertex index out of range");
  return Representation(q, field, ClassVector::unit(q.vertex_count(), vertex).coords, {});
}

Representation direct_sum(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  const auto count = m.quiver().vertex_count();
  std::vector<Integer> dims(count);
  for (std::size_t i = 0; i < count; ++i) dims[i] = m.dim(i) + n.dim(i);
  std::map<ArrowId, Matrix> maps;
  for (const auto& a : active_arrows(m, n)) {
    const auto rm = m.arrow_map(a), rn = n.arrow_map(a);
    Matrix block(dims[a.source], dims[a.target]);
    for (std::size_t r = 0; r < rm.rows(); ++r)
      for (std::size_t c = 0; c < rm.cols(); ++c) block(r, c) = rm(r, c);
    for (std::size_t r = 0; r < rn.rows(); ++r)
      for (std::size_t c = 0; c < rn.cols(); ++c) block(rm.rows() + r, rm.cols() + c) = rn(r, c);
    maps.emplace(a, std::move(block));
  }
  return Representation(m.quiver(), m.field(), std::move(dims), std::move(maps));
}

Representation change_basis(const Representation& m, const std::vector<Matrix>& change) {
  const auto& f = m.field();
  if (change.size() != m.quiver().vertex_count()) throw InvalidArgument("one basis change per vertex expected");
  std::vector<Matrix> inverses;
  for (std::size_t i = 0; i < change.size(); ++i) {
    if (change[i].rows() != udim(m, i) || !is_invertible(f, change[i]))
      throw InvalidArgument("basis change at vertex " + std::to_string(i) + " is not invertible");
    inverses.push_back(inverse(f, change[i]));
  }
  std::map<ArrowId, Matrix> maps;
  for (const auto& [a, rho] : m.nonzero_arrow_maps())
    maps.emplace(a, multiply(f, multiply(f, change[a.source], rho), inverses[a.target]));
  return Representation(m.quiver(), f, m.dims(), std::move(maps));
}

HomSpace hom_basis(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  const auto& f = m.field();
  const auto count = m.quiver().vertex_count();
  // Unknowns: the entries of phi_i (n_i x m_i), row-major, vertex after vertex.
  std::vector<std::size_t> block_sizes(count);
  for (std::size_t i = 0; i < count; ++i) block_sizes[i] = udim(n, i) * udim(m, i);
  const auto off = offsets(block_sizes);
  const auto unknowns = off.back();
  auto var = [&](std::size_t vertex, std::size_t row, std::size_t col) {
    return off[vertex] + row * udim(m, vertex) + col;
  };

  const auto arrows = active_arrows(m, n);
  std::size_t equations = 0;
  for (const auto& a : arrows) equations += udim(n, a.source) * udim(m, a.target);

  // phi_s rho^M_a - rho^N_a phi_t = 0, one equation per entry (p, q).
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (const auto& a : arrows) {
    const auto rm = m.arrow_map(a), rn = n.arrow_map(a);
    const auto s = a.source, t = a.target;
    for (std::size_t p = 0; p < udim(n, s); ++p)
      for (std::size_t q = 0; q < udim(m, t); ++q, ++row) {
        for (std::size_t r = 0; r < udim(m, s); ++r)
          system(row, var(s, p, r)) = f.add(system(row, var(s, p, r)), rm(r, q));
        for (std::size_t r = 0; r < udim(n, t); ++r)
          system(row, var(t, r, q)) = f.sub(system(row, var(t, r, q)), rn(p, r));
      }
  }

  const auto kernel = null_space(f, system);
  HomSpace out;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    HomElement h{m, n, {}};
    for (std::size_t i = 0; i < count; ++i) {
      Matrix comp(udim(n, i), udim(m, i));
      for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t c = 0; c < comp.cols(); ++c) comp(r, c) = kernel(var(i, r, c), k);
      h.components.push_back(std::move(comp));
    }
    out.basis.push_back(std::move(h));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_basis(m, n).dim(); }

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  const auto hom = static_cast<Integer>(hom_dim(m, n));
  const auto ext = hom - euler_form(m.quiver(), m.dimension_vector(), n.dimension_vector());
  if (ext < 0) throw std::logic_error("negative Ext^1 dimension");
  return static_cast<std::size_t>(ext);
}

std::size_t ext1_dim_via_resolution(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  const auto& f = m.field();
  const auto& q = m.quiver();
  const auto count = q.vertex_count();
  // Hom(P^0, N) = (+)_i Hom(M_i, N_i), with column-major vec of each block.
  std::vector<std::size_t> source_sizes(count);
  for (std::size_t i = 0; i < count; ++i) source_sizes[i] = udim(m, i) * udim(n, i);
  const auto source_off = offsets(source_sizes);

  // Hom(P^-1, N) = (+)_{a: s->t} Hom(M_t, N_s), over every arrow copy.
  Integer codomain = 0;
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t) codomain += q.arrows(s, t) * m.dim(t) * n.dim(s);

  // Blocks of arrows acting by zero on both sides vanish; only the rest carry rank.
  const auto arrows = active_arrows(m, n);
  Matrix boundary(0, source_off.back());
  for (const auto& a : arrows) {
    const auto s = a.source, t = a.target;
    // vec(phi_s rho^M) = (rho^M^T (x) I) vec(phi_s);  vec(rho^N phi_t) = (I (x) rho^N) vec(phi_t).
    const auto left = kronecker(f, m.arrow_map(a).transposed(), Matrix::identity(udim(n, s)));
    const auto right = kronecker(f, Matrix::identity(udim(m, t)), n.arrow_map(a));
    Matrix block(left.rows(), source_off.back());
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (std::size_t c = 0; c < left.cols(); ++c) block(r, source_off[s] + c) = left(r, c);
      for (std::size_t c = 0; c < right.cols(); ++c)
        block(r, source_off[t] + c) = f.sub(block(r, source_off[t] + c), right(r, c));
    }
    Matrix stacked(boundary.rows() + block.rows(), boundary.cols());
    for (std::size_t r = 0; r < boundary.rows(); ++r)
      for (std::size_t c = 0; c < boundary.cols(); ++c) stacked(r, c) = boundary(r, c);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) stacked(boundary.rows() + r, c) = block(r, c);
    boundary = std::move(stacked);
  }
  return static_cast<std::size_t>(codomain - static_cast<Integer>(rank(f, boundary)));
}

namespace {

void require_valid(const HomElement& h) {
  require_compatible(h.source, h.target);
  const auto count = h.source.quiver().vertex_count();
  if (h.components.size() != count) throw InvalidArgument("morphism needs one component per vertex");
  for (std::size_t i = 0; i < count; ++i)
    if (h.components[i].rows() != udim(h.target, i) || h.components[i].cols() != udim(h.source, i))
      throw InvalidArgument("morphism component " + std::to_string(i) + " has the wrong shape");
}

/// Representation on the subspaces spanned by the columns of bases[i] of an
/// ambient representation whose action preserves them.
Representation restrict_to(const Representation& ambient, const std::vector<Matrix>& bases) {
  const auto& f = ambient.field();
  std::vector<Integer> dims;
  for (const auto& b : bases) dims.push_back(static_cast<Integer>(b.cols()));
  std::map<ArrowId, Matrix> maps;
  for (const auto& [a, rho] : ambient.nonzero_arrow_maps())
    maps.emplace(a, solve(f, bases[a.source], multiply(f, rho, bases[a.target])));
  return Representation(ambient.quiver(), f, std::move(dims), std::move(maps));
}

}  // namespace

Representation kernel_rep(const HomElement& h) {
  require_valid(h);
  std::vector<Matrix> bases;
  for (const auto& c : h.components) bases.push_back(null_space(h.source.field(), c));
  return restrict_to(h.source, bases);
}

Representation image_rep(const HomElement& h) {
  require_valid(h);
  std::vector<Matrix> bases;
  for (const auto& c : h.components) bases.push_back(column_space(h.source.field(), c));
  return restrict_to(h.target, bases);
}

Representation cokernel_rep(const HomElement& h) {
  require_valid(h);
  const auto& f = h.target.field();
  const auto count = h.target.quiver().vertex_count();
  // N_i = I_i (+) S_i; the quotient map q_i reads off the S_i coordinates.
  std::vector<Matrix> sections, quotients;
  std::vector<Integer> dims;
  for (std::size_t i = 0; i < count; ++i) {
    const auto image = column_space(f, h.components[i]);
    auto section = complement_basis(f, image);
    const auto coords = inverse(f, hstack(image, section));
    Matrix quotient(section.cols(), coords.cols());
    for (std::size_t r = 0; r < quotient.rows(); ++r)
      for (std::size_t c = 0; c < quotient.cols(); ++c) quotient(r, c) = coords(image.cols() + r, c);
    dims.push_back(static_cast<Integer>(section.cols()));
    sections.push_back(std::move(section));
    quotients.push_back(std::move(quotient));
  }
  std::map<ArrowId, Matrix> maps;
  for (const auto& [a, rho] : h.target.nonzero_arrow_maps())
    maps.emplace(a, multiply(f, multiply(f, quotients[a.source], rho), sections[a.target]));
  return Representation(h.target.quiver(), f, std::move(dims), std::move(maps));
}

RadicalFiltration radical_filtration(const Representation& m) {
  const auto& f = m.field();
  const auto count = m.quiver().vertex_count();
  std::vector<Matrix> layer_basis;
  for (std::size_t i = 0; i < count; ++i) layer_basis.push_back(Matrix::identity(udim(m, i)));
  auto dims_of = [](const std::vector<Matrix>& bases) {
    std::vector<Integer> d;
    for (const auto& b : bases) d.push_back(static_cast<Integer>(b.cols()));
    return d;
  };

  RadicalFiltration out;
  auto current = dims_of(layer_basis);
  while (std::accumulate(current.begin(), current.end(), Integer{0}) > 0) {
    // (U R)_s = sum over arrows a with source s of rho_a(U_t).
    std::vector<Matrix> spans;
    for (std::size_t i = 0; i < count; ++i) spans.emplace_back(udim(m, i), 0);
    for (const auto& [a, rho] : m.nonzero_arrow_maps())
      spans[a.source] = hstack(spans[a.source], multiply(f, rho, layer_basis[a.target]));
    std::vector<Matrix> next;
    for (auto& s : spans) next.push_back(column_space(f, s));
    const auto next_dims = dims_of(next);
    if (next_dims == current) return out;
    ClassVector layer{std::vector<Integer>(count)};
    for (std::size_t i = 0; i < count; ++i) layer[i] = current[i] - next_dims[i];
    out.layers.push_back(std::move(layer));
    layer_basis = std::move(next);
    current = next_dims;
  }
  out.is_nilpotent = true;
  return out;
}

Representation zigzag(const Quiver& q, const Field& field, const ArrowId& a, const ArrowId& b, const ArrowId& c,
                      Integer k) {
  if (q.vertex_count() != 2) throw InvalidArgument("zigzag modules need a two-vertex quiver");
  if (k < 1) throw InvalidArgument("zigzag length must be positive");
  auto check = [&](const ArrowId& arrow, std::size_t s, std::size_t t, const char* role) {
    if (arrow.source != s || arrow.target != t || arrow.copy < 0 || arrow.copy >= q.arrows(s, t))
      throw InvalidArgument(std::string("zigzag arrow ") + role + " is missing or misplaced");
  };
  check(a, 0, 0, "a (loop at 0)");
  check(b, 1, 0, "b (1 -> 0)");
  check(c, 1, 1, "c (loop at 1)");
  const auto n = static_cast<std::size_t>(k);
  Matrix rho_a(n, n), rho_b(n, n), rho_c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rho_a(i + 1, i) = 1;
    rho_c(i + 1, i) = 1;
  }
  // b maps the vertex-0 component into the vertex-1 component: u_{k-1} -> w_0.
  rho_b(0, n - 1) = 1;
  std::map<ArrowId, Matrix> maps{{a, rho_a}, {b, rho_b}, {c, rho_c}};
  return Representation(q, field, {k, k}, std::move(maps));
}

Representation zigzag(const Quiver& q, const Field& field, Integer k) {
  return zigzag(q, field, ArrowId{0, 0, 0}, ArrowId{1, 0, 0}, ArrowId{1, 1, 0}, k);
}

namespace {

void require_family(const std::vector<Representation>& family) {
  if (family.empty()) throw InvalidArgument("empty family");
  for (const auto& m : family) require_compatible(family.front(), m);
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!radical_filtration(family[i]).is_nilpotent)
      throw InvalidArgument("family member " + std::to_string(i) + " is not nilpotent");
}

}  // namespace

VertexLikeVerdict is_vertex_like(const std::vector<Representation>& family) {
  require_family(family);
  VertexLikeVerdict verdict;
  const auto n = family.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto d = hom_dim(family[i], family[j]);
      if (d != (i == j ? 1u : 0u)) {
        verdict.offending_pair = std::make_pair(i, j);
        verdict.offending_hom_dim = d;
        return verdict;
      }
    }
  IntMatrix adjacency(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adjacency[i][j] = static_cast<Integer>(ext1_dim(family[j], family[i]));
  verdict.vertex_like = true;
  verdict.realized_quiver = Quiver(std::move(adjacency));
  return verdict;
}

}  // namespace quiverthick
