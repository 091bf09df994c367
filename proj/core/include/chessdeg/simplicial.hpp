#pragma once

#include "chessdeg/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chessdeg {

using VertexId = std::uint32_t;

/// Strictly increasing vertex ids. The empty simplex only appears as the
/// target of the augmentation in reduced chain complexes.
using Simplex = std::vector<VertexId>;

inline int simplex_dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Finite abstract simplicial complex, stored by its facets.
///
/// Immutable after construction. Facets are kept in lexicographic order and
/// no facet contains another; the complex is their downward closure. Faces of
/// a given dimension are enumerated on demand, so large joins never
/// materialize every simplex unless asked to.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Trusted constructor used by builders that already produce maximal,
  /// sorted, deduplicated facets. Labels must have `vertex_count` entries.
  static SimplicialComplex from_maximal_facets(std::string name, std::size_t vertex_count,
                                               std::vector<std::string> labels,
                                               std::vector<Simplex> facets);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<Simplex>& facets() const { return facets_; }

  /// -1 for the empty complex.
  int dimension() const { return dimension_; }
  bool is_pure() const;

  /// All simplices of dimension q in lexicographic order; q = -1 yields the
  /// single empty simplex.
  std::vector<Simplex> simplices(int q) const;

  /// True iff `s` (sorted) is a face of some facet.
  bool contains(const Simplex& s) const;

  std::optional<VertexId> find_label(const std::string& label) const;

  SimplicialComplex renamed(std::string name) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_ && a.labels_ == b.labels_;
  }

 private:
  std::string name_;
  std::size_t vertex_count_ = 0;
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  int dimension_ = -1;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

template <typename... Args>
ComplexPtr make_complex(Args&&... args) {
  return std::make_shared<const SimplicialComplex>(std::forward<Args>(args)...);
}

/// Builds a complex from arbitrary facet lists: vertices are sorted within
/// each facet, duplicates removed, and non-maximal facets absorbed.
/// `vertex_count` defaults to 1 + the largest id used; a larger value
/// declares extra isolated vertices explicitly (each becomes a 0-facet).
/// Throws MalformedInput on empty facets, repeated vertices within a facet,
/// ids out of range or duplicate labels.
SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& facet_list,
                                std::optional<std::vector<std::string>> vertex_labels = std::nullopt,
                                std::string name = "K",
                                std::optional<std::size_t> vertex_count = std::nullopt);

/// All subsets of {0..m-1} of size at most k, i.e. the (k-1)-skeleton of the
/// (m-1)-simplex. For k = m-1 this is the boundary sphere.
SimplicialComplex simplex_skeleton(int m, int k);

/// Join with the vertices of K first (ids kept) and L shifted by
/// K.vertex_count(). Labels are prefixed with the factor tag "0." or "1.".
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Left-associated d-fold join K * K * ... * K.
SimplicialComplex join_power(const SimplicialComplex& k, int d);

/// Cone over K: join with a single apex vertex.
SimplicialComplex cone(const SimplicialComplex& k);

/// Number of simplices in each dimension 0..dim K.
std::vector<std::int64_t> f_vector(const SimplicialComplex& k);

/// Unreduced Euler characteristic sum (-1)^q f_q.
std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Dense integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  IntegerMatrix transposed() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Column-sparse integer matrix with machine-word entries, used for the
/// boundary operators handed to homology.
struct SparseBoundary {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

/// Matrix of the boundary map from q-simplices to (q-1)-simplices, both in
/// lexicographic order; entry (face, simplex) is (-1)^i where i is the
/// position of the omitted vertex. In reduced mode q = 0 gives the
/// augmentation row of ones; unreduced q = 0 is the 0 x f_0 matrix.
/// Throws ParameterError unless 0 <= q <= dim K.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int q, bool reduced = true);
SparseBoundary sparse_boundary(const SimplicialComplex& k, int q, bool reduced = true);

/// Finitely supported integer chain on simplices of one dimension. Zero
/// coefficients are never stored.
class IntegerChain {
 public:
  explicit IntegerChain(int dimension = 0) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  const std::map<Simplex, BigInt>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of `s`, zero if absent.
  BigInt coefficient(const Simplex& s) const;

  /// Adds `c` to the coefficient of `s`; drops the term if it cancels.
  void add(const Simplex& s, const BigInt& c);

  IntegerChain scaled(const BigInt& factor) const;

  friend bool operator==(const IntegerChain& a, const IntegerChain& b) = default;

 private:
  int dimension_;
  std::map<Simplex, BigInt> terms_;
};

/// Simplicial boundary of a chain. In reduced mode the boundary of a
/// 0-chain is its coefficient sum placed on the empty simplex.
IntegerChain boundary(const IntegerChain& chain, bool reduced = true);

}  // namespace chessdeg
