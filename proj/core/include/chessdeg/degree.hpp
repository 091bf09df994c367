#pragma once

#include "chessdeg/chessboard.hpp"
#include "chessdeg/simplicial.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chessdeg {

class ParallelFor;

struct PseudomanifoldReport {
  bool pure = false;
  bool ridge_regular = false;
  bool strongly_connected = false;
  bool orientable = false;
  // First offending object: a facet of the wrong dimension, a ridge with the
  // wrong number of cofaces, an unreachable facet, or an orientation-
  // reversing facet cycle.
  std::string witness_kind;
  std::vector<Simplex> witness;

  bool is_pseudomanifold() const { return pure && ridge_regular && strongly_connected; }
};

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& k);

/// Thrown by orient() on a non-orientable pseudomanifold; carries a closed
/// chain of ridge-adjacent facets along which the propagated sign flips.
class OrientationError : public std::runtime_error {
 public:
  OrientationError(const std::string& what, std::vector<Simplex> cycle)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  const std::vector<Simplex>& cycle() const { return cycle_; }

 private:
  std::vector<Simplex> cycle_;
};

/// Top-dimensional cycle with coefficient +-1 on every facet, normalized so
/// the lexicographically smallest facet carries +1.
class FundamentalClass {
 public:
  /// Validates support, coefficients and the cycle condition. Does not
  /// renormalize: classes with the opposite sign are accepted.
  FundamentalClass(ComplexPtr complex, IntegerChain chain);

  const ComplexPtr& complex() const { return complex_; }
  const IntegerChain& chain() const { return chain_; }
  int coefficient(const Simplex& facet) const;

  FundamentalClass negated() const;

 private:
  ComplexPtr complex_;
  IntegerChain chain_;
};

/// Orients a pseudomanifold by propagating signs across ridges from the
/// smallest facet. Throws ParameterError if K is not a pseudomanifold and
/// OrientationError if it is not orientable.
FundamentalClass orient(ComplexPtr k);

/// Image of a chain under a simplicial map; degenerate simplices vanish.
IntegerChain pushforward(const SimplicialMap& f, const IntegerChain& chain);

/// +1 or -1 according to whether the automorphism preserves the class.
/// Throws ParameterError for a non-automorphism and IntegrityError if the
/// pushforward is not +-fc.
int orientation_character(const FundamentalClass& fc, const VertexPermutation& automorphism);
int orientation_character(const FundamentalClass& fc, const PermutationAction& action);

enum class DegreeMethod { homological, preimage };

struct DegreeReport {
  BigInt value;
  DegreeMethod method = DegreeMethod::homological;
  std::optional<std::pair<std::int64_t, std::int64_t>> residue_mod;  // (modulus, residue)
};

std::string to_string(DegreeMethod m);

/// Degree from f_*[dom] = deg * [cod]. Throws ParameterError on a dimension
/// mismatch or foreign fundamental classes, IntegrityError when the
/// pushforward is not an integer multiple of the codomain class.
DegreeReport degree_homological(const SimplicialMap& f, const FundamentalClass& dom, const FundamentalClass& cod);

/// Signed count of domain facets mapped bijectively onto `target`.
DegreeReport degree_by_preimage(const SimplicialMap& f, const FundamentalClass& dom, const FundamentalClass& cod,
                                const Simplex& target);

/// Thrown when exhaustive enumeration would exceed its orbit cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const std::string& what, BigInt candidate_count)
      : std::runtime_error(what), candidates_(std::move(candidate_count)) {}
  const BigInt& candidate_count() const { return candidates_; }

 private:
  BigInt candidates_;
};

/// All equivariant simplicial maps K -> L, in lexicographic order of the
/// images of the vertex-orbit representatives. Orbits are represented by
/// their smallest vertex. Refuses when K has more than `orbit_cap` orbits.
std::vector<SimplicialMap> enumerate_equivariant_maps(const PermutationAction& source, const PermutationAction& target,
                                                      int orbit_cap = 4);

/// f(g v) == h f(v) for all vertices.
bool is_equivariant(const SimplicialMap& f, const PermutationAction& source, const PermutationAction& target);

struct CongruenceAudit {
  int modulus = 0;
  bool prime_modulus = false;
  std::int64_t expected_residue = 0;
  std::vector<BigInt> degrees;  // in input order
  bool methods_agree = true;
  bool pairwise_congruent = true;
  // +1 if degrees match expected_residue, -1 if they match its negative
  // (opposite orientation convention), 0 if neither.
  int sign_convention = 0;
  bool passed = false;
  std::vector<std::string> warnings;
  std::optional<std::size_t> offending_map;
};

/// Degrees of every map (both algorithms, which must agree), their pairwise
/// congruence mod r and congruence to +-expected_residue. For composite r
/// the congruences are reported but not asserted.
CongruenceAudit congruence_audit(const std::vector<SimplicialMap>& maps, const FundamentalClass& dom,
                                 const FundamentalClass& cod, int r, std::int64_t expected_residue,
                                 const ParallelFor* pool = nullptr);

}  // namespace chessdeg
