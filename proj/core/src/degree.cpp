#include "chessdeg/degree.hpp"

#include "chessdeg/errors.hpp"
#include "chessdeg/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chessdeg {

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || *a == *b; }

struct RidgeIncidence {
  std::size_t facet;
  int sign;  // (-1)^(position of the omitted vertex)
};

using RidgeMap = std::map<Simplex, std::vector<RidgeIncidence>>;

RidgeMap ridges_of(const std::vector<Simplex>& facets) {
  RidgeMap ridges;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Simplex& s = facets[f];
    Simplex face(s.size() - 1);
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != omit) face[w++] = s[t];
      ridges[face].push_back({f, omit % 2 == 0 ? 1 : -1});
    }
  }
  return ridges;
}

struct Propagation {
  std::vector<int> sign;  // per facet, 0 if unreached
  std::vector<Simplex> conflict_cycle;
};

// Breadth-first sign propagation across ridges from facet 0. Adjacent facets
// must induce opposite orientations on their common ridge.
Propagation propagate_orientation(const std::vector<Simplex>& facets, const RidgeMap& ridges) {
  Propagation out;
  out.sign.assign(facets.size(), 0);
  if (facets.empty()) return out;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(facets.size());  // (neighbour, relative sign)
  for (const auto& [ridge, inc] : ridges) {
    if (inc.size() != 2) continue;
    const int rel = -inc[0].sign * inc[1].sign;
    adj[inc[0].facet].emplace_back(inc[1].facet, rel);
    adj[inc[1].facet].emplace_back(inc[0].facet, rel);
  }
  std::vector<std::size_t> parent(facets.size(), SIZE_MAX);
  std::deque<std::size_t> queue{0};
  out.sign[0] = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (const auto& [b, rel] : adj[a]) {
      const int want = out.sign[a] * rel;
      if (out.sign[b] == 0) {
        out.sign[b] = want;
        parent[b] = a;
        queue.push_back(b);
      } else if (out.sign[b] != want && out.conflict_cycle.empty()) {
        // Tree paths a -> root and b -> root meet at the lowest common ancestor.
        std::vector<std::size_t> pa{a}, pb{b};
        while (parent[pa.back()] != SIZE_MAX) pa.push_back(parent[pa.back()]);
        while (parent[pb.back()] != SIZE_MAX) pb.push_back(parent[pb.back()]);
        while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
          pa.pop_back();
          pb.pop_back();
        }
        for (std::size_t x : pa) out.conflict_cycle.push_back(facets[x]);
        for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) out.conflict_cycle.push_back(facets[*it]);
      }
    }
  }
  return out;
}

}  // namespace

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& k) {
  PseudomanifoldReport report;
  if (k.facets().empty()) throw ParameterError("pseudomanifold check on an empty complex");
  const auto& facets = k.facets();

  report.pure = true;
  std::vector<Simplex> top;
  for (const auto& f : facets) {
    if (simplex_dimension(f) == k.dimension()) {
      top.push_back(f);
    } else if (report.pure) {
      report.pure = false;
      report.witness_kind = "facet below top dimension";
      report.witness = {f};
    }
  }

  const RidgeMap ridges = ridges_of(top);
  report.ridge_regular = true;
  for (const auto& [ridge, inc] : ridges) {
    if (inc.size() != 2) {
      report.ridge_regular = false;
      if (report.witness.empty()) {
        report.witness_kind = "ridge in " + std::to_string(inc.size()) + " facets";
        report.witness = {ridge};
      }
      break;
    }
  }

  // Strong connectivity over ridge adjacency of top facets.
  std::vector<std::vector<std::size_t>> adj(top.size());
  for (const auto& [ridge, inc] : ridges)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        adj[inc[i].facet].push_back(inc[j].facet);
        adj[inc[j].facet].push_back(inc[i].facet);
      }
  std::vector<char> seen(top.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (auto b : adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
  }
  auto unreached = std::find(seen.begin(), seen.end(), 0);
  report.strongly_connected = unreached == seen.end();
  if (!report.strongly_connected && report.witness.empty()) {
    report.witness_kind = "facet unreachable from the first facet";
    report.witness = {top[static_cast<std::size_t>(unreached - seen.begin())]};
  }

  if (report.is_pseudomanifold()) {
    auto prop = propagate_orientation(top, ridges);
    report.orientable = prop.conflict_cycle.empty();
    if (!report.orientable) {
      report.witness_kind = "orientation-reversing facet cycle";
      report.witness = std::move(prop.conflict_cycle);
    }
  }
  return report;
}

FundamentalClass::FundamentalClass(ComplexPtr complex, IntegerChain chain)
    : complex_(std::move(complex)), chain_(std::move(chain)) {
  if (!complex_) throw ParameterError("fundamental class without complex");
  if (chain_.dimension() != complex_->dimension())
    throw IntegrityError("fundamental class must live in the top dimension");
  if (chain_.size() != complex_->facets().size()) throw IntegrityError("fundamental class must cover every facet");
  for (const auto& [s, c] : chain_.terms()) {
    if (c != 1 && c != -1) throw IntegrityError("fundamental class coefficients must be +-1");
    if (!std::binary_search(complex_->facets().begin(), complex_->facets().end(), s))
      throw IntegrityError("fundamental class supported off the facets");
  }
  if (!boundary(chain_, true).empty()) throw IntegrityError("fundamental class is not a cycle");
}

int FundamentalClass::coefficient(const Simplex& facet) const {
  return chain_.coefficient(facet).convert_to<int>();
}

FundamentalClass FundamentalClass::negated() const { return FundamentalClass(complex_, chain_.scaled(-1)); }

FundamentalClass orient(ComplexPtr k) {
  auto report = pseudomanifold_check(*k);
  if (!report.is_pseudomanifold())
    throw ParameterError(k->name() + " is not a pseudomanifold (" + report.witness_kind + ")");
  const auto& facets = k->facets();
  auto prop = propagate_orientation(facets, ridges_of(facets));
  if (!prop.conflict_cycle.empty())
    throw OrientationError(k->name() + " is not orientable", std::move(prop.conflict_cycle));
  IntegerChain chain(k->dimension());
  for (std::size_t f = 0; f < facets.size(); ++f) chain.add(facets[f], prop.sign[f]);
  return FundamentalClass(std::move(k), std::move(chain));
}

IntegerChain pushforward(const SimplicialMap& f, const IntegerChain& chain) {
  IntegerChain out(chain.dimension());
  std::vector<VertexId> img;
  for (const auto& [s, c] : chain.terms()) {
    img.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = f(s[i]);
    const int sign = permutation_sign(img);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
    out.add(img, sign > 0 ? c : BigInt(-c));
  }
  return out;
}

int orientation_character(const FundamentalClass& fc, const VertexPermutation& automorphism) {
  if (!is_automorphism(*fc.complex(), automorphism))
    throw ParameterError("not an automorphism of " + fc.complex()->name());
  SimplicialMap g(fc.complex(), fc.complex(), automorphism);
  const IntegerChain image = pushforward(g, fc.chain());
  if (image == fc.chain()) return 1;
  if (image == fc.chain().scaled(-1)) return -1;
  throw IntegrityError("pushforward of the fundamental class is not +-itself");
}

int orientation_character(const FundamentalClass& fc, const PermutationAction& action) {
  return orientation_character(fc, action.generator());
}

std::string to_string(DegreeMethod m) { return m == DegreeMethod::homological ? "homological" : "preimage"; }

namespace {

void check_degree_inputs(const SimplicialMap& f, const FundamentalClass& dom, const FundamentalClass& cod) {
  if (f.domain()->dimension() != f.codomain()->dimension())
    throw ParameterError("degree needs equal dimensions, got " + std::to_string(f.domain()->dimension()) + " and " +
                         std::to_string(f.codomain()->dimension()));
  if (!same_complex(dom.complex(), f.domain())) throw ParameterError("domain class belongs to another complex");
  if (!same_complex(cod.complex(), f.codomain())) throw ParameterError("codomain class belongs to another complex");
}

}  // namespace

DegreeReport degree_homological(const SimplicialMap& f, const FundamentalClass& dom, const FundamentalClass& cod) {
  check_degree_inputs(f, dom, cod);
  const IntegerChain image = pushforward(f, dom.chain());
  const Simplex& probe = cod.complex()->facets().front();
  const BigInt value = image.coefficient(probe) * cod.coefficient(probe);
  if (image != cod.chain().scaled(value))
    throw IntegrityError("pushforward is not a multiple of the codomain fundamental class");
  return DegreeReport{value, DegreeMethod::homological, std::nullopt};
}

DegreeReport degree_by_preimage(const SimplicialMap& f, const FundamentalClass& dom, const FundamentalClass& cod,
                                const Simplex& target) {
  check_degree_inputs(f, dom, cod);
  const auto& cod_facets = cod.complex()->facets();
  if (!std::binary_search(cod_facets.begin(), cod_facets.end(), target))
    throw ParameterError("preimage target is not a facet of the codomain");
  BigInt count = 0;
  std::vector<VertexId> img;
  for (const auto& [s, c] : dom.chain().terms()) {
    img.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = f(s[i]);
    const int sign = permutation_sign(img);
    std::sort(img.begin(), img.end());
    if (img != target) continue;  // also rejects degenerate images
    count += sign * c;
  }
  return DegreeReport{count * cod.coefficient(target), DegreeMethod::preimage, std::nullopt};
}

bool is_equivariant(const SimplicialMap& f, const PermutationAction& source, const PermutationAction& target) {
  const auto& g = source.generator();
  const auto& h = target.generator();
  for (VertexId v = 0; v < g.size(); ++v)
    if (f(g[v]) != h[f(v)]) return false;
  return true;
}

std::vector<SimplicialMap> enumerate_equivariant_maps(const PermutationAction& source, const PermutationAction& target,
                                                      int orbit_cap) {
  if (source.order() != target.order())
    throw ParameterError("actions have different orders " + std::to_string(source.order()) + " and " +
                         std::to_string(target.order()));
  const auto& g = source.generator();
  const auto& h = target.generator();
  const auto& dom = source.complex();
  const auto& cod = target.complex();

  struct Orbit {
    std::vector<VertexId> members;  // rep, g(rep), g^2(rep), ...
    std::vector<VertexId> candidates;
  };
  std::vector<Orbit> orbits;
  std::vector<char> seen(g.size(), 0);
  for (VertexId v = 0; v < g.size(); ++v) {
    if (seen[v]) continue;
    Orbit o;
    for (VertexId w = v; !seen[w]; w = g[w]) {
      seen[w] = 1;
      o.members.push_back(w);
    }
    // The image of the representative must be fixed by h^(orbit size).
    const auto hs = target.power(static_cast<int>(o.members.size()));
    for (VertexId w = 0; w < h.size(); ++w)
      if (hs[w] == w) o.candidates.push_back(w);
    orbits.push_back(std::move(o));
  }

  BigInt total = 1;
  for (const auto& o : orbits) total *= o.candidates.size();
  if (static_cast<int>(orbits.size()) > orbit_cap)
    throw EnumerationCapExceeded(std::to_string(orbits.size()) + " vertex orbits exceed the cap of " +
                                     std::to_string(orbit_cap) + " (" + total.str() + " candidate maps)",
                                 total);

  std::vector<SimplicialMap> out;
  if (total == 0) return out;
  std::vector<std::size_t> choice(orbits.size(), 0);
  std::vector<VertexId> vmap(g.size());
  while (true) {
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      VertexId w = orbits[o].candidates[choice[o]];
      for (VertexId member : orbits[o].members) {
        vmap[member] = w;
        w = h[w];
      }
    }
    bool simplicial = true;
    for (const auto& f : dom->facets()) {
      Simplex img(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) img[i] = vmap[f[i]];
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!cod->contains(img)) {
        simplicial = false;
        break;
      }
    }
    if (simplicial) out.emplace_back(dom, cod, vmap);

    // Odometer with the first orbit most significant.
    std::size_t pos = orbits.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < orbits[pos].candidates.size()) break;
      choice[pos] = 0;
      if (pos == 0) return out;
    }
    if (orbits.empty()) return out;
  }
}

CongruenceAudit congruence_audit(const std::vector<SimplicialMap>& maps, const FundamentalClass& dom,
                                 const FundamentalClass& cod, int r, std::int64_t expected_residue,
                                 const ParallelFor* pool) {
  if (r < 1) throw ParameterError("congruence modulus must be positive");
  CongruenceAudit audit;
  audit.modulus = r;
  audit.prime_modulus = is_prime(r);
  audit.expected_residue = ((expected_residue % r) + r) % r;
  if (!audit.prime_modulus)
    audit.warnings.push_back("modulus " + std::to_string(r) + " is not prime; congruences reported, not asserted");
  if (maps.empty()) audit.warnings.push_back("no maps to audit");

  const Simplex& target = cod.complex()->facets().front();
  std::vector<BigInt> homological(maps.size()), preimage(maps.size());
  parallel_for(pool, maps.size(), [&](std::size_t i) {
    homological[i] = degree_homological(maps[i], dom, cod).value;
    preimage[i] = degree_by_preimage(maps[i], dom, cod, target).value;
  });

  audit.degrees = homological;
  std::optional<std::int64_t> first_residue;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (homological[i] != preimage[i]) {
      audit.methods_agree = false;
      if (!audit.offending_map) audit.offending_map = i;
    }
    const auto res = mod_residue(homological[i], r);
    if (!first_residue) {
      first_residue = res;
    } else if (res != *first_residue) {
      audit.pairwise_congruent = false;
      if (!audit.offending_map) audit.offending_map = i;
    }
  }

  if (first_residue) {
    if (*first_residue == audit.expected_residue)
      audit.sign_convention = 1;
    else if (*first_residue == (r - audit.expected_residue) % r)
      audit.sign_convention = -1;
    if (audit.sign_convention == 0 && !audit.offending_map) audit.offending_map = 0;
  } else {
    audit.sign_convention = 1;
  }

  audit.passed = audit.methods_agree &&
                 (!audit.prime_modulus || (audit.pairwise_congruent && audit.sign_convention != 0));
  return audit;
}

}  // namespace chessdeg
