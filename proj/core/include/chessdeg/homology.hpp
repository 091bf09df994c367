#pragma once

#include "chessdeg/simplicial.hpp"

#include <optional>
#include <vector>

namespace chessdeg {

struct SmithNormalFormResult {
  std::vector<BigInt> diagonal;  // positive, d_1 | d_2 | ...
  std::size_t rank = 0;
  // Present when requested: left * M * right == D, both unimodular.
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
};

/// Exact Smith normal form over the integers. Pivots on the entry of
/// smallest magnitude.
SmithNormalFormResult smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

/// Invariant factors of a sparse machine-word matrix. Unit pivots are
/// eliminated in place; whatever remains is handed to the dense routine.
SmithNormalFormResult smith_normal_form(const SparseBoundary& m);

/// The diagonal matrix D with the shape of `m` built from a result.
IntegerMatrix smith_diagonal_matrix(const SmithNormalFormResult& snf, std::size_t rows, std::size_t cols);

/// Determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(const IntegerMatrix& m);

struct HomologyProfile {
  bool reduced = true;
  std::vector<std::int64_t> betti;           // index q
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1, index q

  bool vanishes_through(int q) const;
};

/// Integral homology in dimensions 0..min(dim K, max_dim).
HomologyProfile homology(const SimplicialComplex& k, bool reduced = true, std::optional<int> max_dim = std::nullopt);

inline HomologyProfile reduced_homology(const SimplicialComplex& k) { return homology(k, true); }

/// Largest c <= q_max with reduced H_q(K) = 0 for all q <= c, or -1 when
/// reduced H_0 is nonzero. A homological stand-in for (c)-connectivity.
int connectivity_probe(const SimplicialComplex& k, int q_max);

/// Splits invariant factors into prime powers, e.g. 12 -> 3, 4.
std::vector<BigInt> prime_power_decomposition(const std::vector<BigInt>& invariant_factors);

}  // namespace chessdeg
