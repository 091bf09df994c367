#pragma once

#include "chessdeg/simplicial.hpp"

#include <optional>
#include <vector>

namespace chessdeg {

using VertexPermutation = std::vector<VertexId>;

/// Cyclic group of simplicial automorphisms generated by one vertex
/// permutation. The order is the exact order of the generator.
class PermutationAction {
 public:
  /// Throws ParameterError if `generator` is not a permutation of the
  /// vertices of `complex` or does not map facets to facets.
  PermutationAction(ComplexPtr complex, VertexPermutation generator);

  const ComplexPtr& complex() const { return complex_; }
  const VertexPermutation& generator() const { return generator_; }
  int order() const { return order_; }

  /// The generator raised to `k` (k taken modulo the order).
  VertexPermutation power(int k) const;

 private:
  ComplexPtr complex_;
  VertexPermutation generator_;
  int order_ = 1;
};

/// Applies a vertex permutation to a simplex and re-sorts the result.
Simplex apply_permutation(const VertexPermutation& p, const Simplex& s);

/// True iff p maps every facet of K onto a facet of K.
bool is_automorphism(const SimplicialComplex& k, const VertexPermutation& p);

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);
VertexPermutation identity_permutation(std::size_t n);

/// Vertex assignment between two complexes under which every simplex maps to
/// a simplex (degenerate images allowed).
class SimplicialMap {
 public:
  /// Throws ParameterError if the vertex map has the wrong length, points
  /// outside the codomain, or sends some facet to a non-simplex.
  SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> vertex_map);

  const ComplexPtr& domain() const { return domain_; }
  const ComplexPtr& codomain() const { return codomain_; }
  const std::vector<VertexId>& vertex_map() const { return vertex_map_; }
  VertexId operator()(VertexId v) const { return vertex_map_[v]; }

  /// Sorted, deduplicated image of a simplex.
  Simplex image(const Simplex& s) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.vertex_map_ == b.vertex_map_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
  }

 private:
  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<VertexId> vertex_map_;
};

/// Non-attacking rook placements on an m x n board. Cell (i, j), 1-based in
/// labels, has id (i-1)*n + (j-1).
SimplicialComplex chessboard_complex(int m, int n);

inline VertexId cell_id(int row, int col, int n) { return static_cast<VertexId>(row * n + col); }

/// The order-m action shifting rows, (i, j) -> (i+1 mod m, j), on the
/// chessboard complex of shape m x n.
PermutationAction cyclic_row_action(int m, int n);

/// Same as above on an already-built chessboard complex of that shape.
PermutationAction cyclic_row_action(ComplexPtr board, int m, int n);

/// Vertex shift i -> i+1 mod m on the skeleton [m]^(k).
PermutationAction cyclic_vertex_action(ComplexPtr skeleton, int m);

/// Permutation of rows of the m x n board induced by a permutation of [m].
VertexPermutation row_permutation(const std::vector<int>& rows, int n);

struct FreenessReport {
  bool free = true;
  std::optional<Simplex> witness;  // simplex fixed setwise by a nontrivial power
  int power = 0;
};

/// Checks that no nonidentity power of the generator fixes a simplex of K
/// setwise. Throws ParameterError if the action lives on a different complex.
FreenessReport is_free_action(const SimplicialComplex& k, const PermutationAction& a);

/// The projection from the m x k chessboard complex onto [m]^(k) sending a
/// rook placement to its set of rows.
SimplicialMap canonical_projection(int m, int k);

/// Join of maps and actions using the join vertex numbering.
SimplicialMap join_maps(const SimplicialMap& f, const SimplicialMap& g);
PermutationAction join_actions(const PermutationAction& a, const PermutationAction& b);
SimplicialMap join_map_power(const SimplicialMap& f, int d);
PermutationAction join_action_power(const PermutationAction& a, int d);

/// Restriction of f : K * L -> M to the first join factor K.
SimplicialMap restrict_to_first_factor(const SimplicialMap& f, ComplexPtr first_factor);

/// Composition g . f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Identity map on K.
SimplicialMap identity_map(ComplexPtr k);

/// nu = min{s, t, floor((s+t+1)/3)} - 1; the s x t chessboard complex is
/// (nu-1)-connected.
int connectivity_bound(int s, int t);

/// Simplicial model of the unit sphere in d copies of the standard
/// (r-1)-dimensional representation of Z/r: the d-fold join of the boundary
/// of the (r-1)-simplex, with the diagonal vertex shift.
struct RepresentationSphereModel {
  int base_r = 0;
  int copies = 0;
  ComplexPtr complex;
  PermutationAction action;

  int dimension() const { return copies * (base_r - 1) - 1; }
};

RepresentationSphereModel representation_sphere(int r, int d);

/// The d-fold join of the r x (r-1) chessboard complex with its diagonal
/// cyclic row action, optionally joined once more with [r] = Delta_{r,1}.
PermutationAction chessboard_join_source(int r, int d, bool with_extra_point = false);

/// (xi_{r,r-1})^{*d} from the chessboard join onto the representation sphere.
SimplicialMap canonical_join_projection(int r, int d);

}  // namespace chessdeg
