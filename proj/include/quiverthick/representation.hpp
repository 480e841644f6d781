#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quiverthick/field.hpp"
#include "quiverthick/linalg.hpp"
#include "quiverthick/quiver.hpp"

namespace quiverthick {

/// One individual arrow: copy number `copy` among the arrows source -> target.
struct ArrowId {
  std::size_t source = 0;
  std::size_t target = 0;
  Integer copy = 0;

  friend auto operator<=>(const ArrowId&, const ArrowId&) = default;
};

/// Finite-dimensional right module over the path algebra kQ.
///
/// An arrow a: s -> t acts as a linear map from the vertex-t component to the
/// vertex-s component (x . a lives at s for x at t). In column-vector
/// convention its matrix has shape dims[s] x dims[t]. Only nonzero arrow maps
/// are stored; every other arrow acts by zero.
class Representation {
 public:
  /// Validates shapes and arrow indices, reduces entries into the field and
  /// drops zero matrices. Throws InvalidArgument.
  Representation(Quiver quiver, Field field, std::vector<Integer> dims, std::map<ArrowId, Matrix> arrow_maps);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<Integer>& dims() const { return dims_; }
  Integer dim(std::size_t vertex) const { return dims_[vertex]; }

  /// Matrix of the arrow (zero matrix when the arrow acts trivially).
  Matrix arrow_map(const ArrowId& arrow) const;
  const std::map<ArrowId, Matrix>& nonzero_arrow_maps() const { return arrow_maps_; }

  ClassVector dimension_vector() const { return ClassVector{dims_}; }
  Integer total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  Field field_;
  std::vector<Integer> dims_;
  std::map<ArrowId, Matrix> arrow_maps_;
};

/// Morphism of representations: one matrix target.dims[i] x source.dims[i] per vertex.
struct HomElement {
  Representation source;
  Representation target;
  std::vector<Matrix> components;

  bool is_zero() const;
  /// Checks the intertwining relations phi_s rho^M_a = rho^N_a phi_t.
  bool is_morphism() const;
  bool is_invertible() const;
};

struct HomSpace {
  std::vector<HomElement> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Throws InvalidArgument unless both live over the same quiver and field.
void require_compatible(const Representation& m, const Representation& n);

Representation zero_rep(const Quiver& q, const Field& field);
Representation simple_rep(const Quiver& q, const Field& field, std::size_t vertex);
Representation direct_sum(const Representation& m, const Representation& n);
/// Isomorphic copy with the vertex-i component transported along the invertible change[i].
Representation change_basis(const Representation& m, const std::vector<Matrix>& change);

HomSpace hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// dim Ext^1(M, N) = dim Hom(M, N) - chi(dim M, dim N) (kQ is hereditary).
std::size_t ext1_dim(const Representation& m, const Representation& n);

/// dim Ext^1(M, N) as the cokernel of Hom(P^0, N) -> Hom(P^-1, N) for the
/// standard projective resolution 0 -> P^-1 -> P^0 -> M -> 0. Never uses the Euler form.
std::size_t ext1_dim_via_resolution(const Representation& m, const Representation& n);

Representation kernel_rep(const HomElement& f);
Representation image_rep(const HomElement& f);
Representation cokernel_rep(const HomElement& f);

struct RadicalFiltration {
  /// Classes of M R^k / M R^(k+1) for each k until the chain stabilises.
  std::vector<ClassVector> layers;
  bool is_nilpotent = false;
};

RadicalFiltration radical_filtration(const Representation& m);

/// Zigzag module M^(k) with dims (k, k): basis chain u_0 .. u_{k-1} at vertex 0
/// and w_0 .. w_{k-1} at vertex 1 with u_i . a = u_{i+1}, u_{k-1} . b = w_0,
/// w_i . c = w_{i+1}. Here a is a loop at 0, b an arrow 1 -> 0, c a loop at 1.
Representation zigzag(const Quiver& q, const Field& field, const ArrowId& a, const ArrowId& b,
                      const ArrowId& c, Integer k);
/// Zigzag using the first copy of each required arrow.
Representation zigzag(const Quiver& q, const Field& field, Integer k);

struct VertexLikeVerdict {
  bool vertex_like = false;
  /// On success: adjacency[i][j] = dim Ext^1(M_j, M_i).
  std::optional<Quiver> realized_quiver;
  /// On failure: the first pair (i, j) with dim Hom(M_i, M_j) != delta_ij.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  std::size_t offending_hom_dim = 0;
};

/// Throws InvalidArgument on an empty family, mixed quivers/fields or a
/// non-nilpotent member.
VertexLikeVerdict is_vertex_like(const std::vector<Representation>& family);

/// An invertible morphism m -> n if one is found; searches the Hom basis,
/// seeded random combinations and, over small prime fields, all combinations.
std::optional<HomElement> find_isomorphism(const Representation& m, const Representation& n,
                                           std::uint64_t seed = 0);

/// Replaces a family of nonzero nilpotent representations by a vertex-like
/// family generating the same thick subcategory, using kernel/image/cokernel
/// moves on non-invertible morphisms. Throws NeedsFieldExtension when an
/// endomorphism algebra cannot be split over the working field.
std::vector<Representation> reduce_to_vertex_like(const std::vector<Representation>& family,
                                                  std::uint64_t seed = 0);

}  // namespace quiverthick
