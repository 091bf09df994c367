#include "chessdeg/chessboard.hpp"

#include "chessdeg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chessdeg {

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || *a == *b; }

}  // namespace

Simplex apply_permutation(const VertexPermutation& p, const Simplex& s) {
  Simplex out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = p[s[i]];
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const SimplicialComplex& k, const VertexPermutation& p) {
  if (p.size() != k.vertex_count()) return false;
  std::vector<char> hit(p.size(), 0);
  for (VertexId v : p) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = 1;
  }
  const auto& facets = k.facets();
  return std::all_of(facets.begin(), facets.end(), [&](const Simplex& f) {
    return std::binary_search(facets.begin(), facets.end(), apply_permutation(p, f));
  });
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
  VertexPermutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

VertexPermutation identity_permutation(std::size_t n) {
  VertexPermutation p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  return p;
}

PermutationAction::PermutationAction(ComplexPtr complex, VertexPermutation generator)
    : complex_(std::move(complex)), generator_(std::move(generator)) {
  if (!complex_) throw ParameterError("action without complex");
  if (!is_automorphism(*complex_, generator_))
    throw ParameterError("generator is not a simplicial automorphism of " + complex_->name());
  // Exact order = lcm of cycle lengths.
  std::vector<char> seen(generator_.size(), 0);
  long order = 1;
  for (std::size_t v = 0; v < generator_.size(); ++v) {
    if (seen[v]) continue;
    long len = 0;
    for (std::size_t w = v; !seen[w]; w = generator_[w]) {
      seen[w] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  order_ = static_cast<int>(order);
}

VertexPermutation PermutationAction::power(int k) const {
  k %= order_;
  if (k < 0) k += order_;
  VertexPermutation p = identity_permutation(generator_.size());
  for (int i = 0; i < k; ++i) p = compose(generator_, p);
  return p;
}

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> vertex_map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), vertex_map_(std::move(vertex_map)) {
  if (!domain_ || !codomain_) throw ParameterError("simplicial map needs both complexes");
  if (vertex_map_.size() != domain_->vertex_count())
    throw ParameterError("vertex map has " + std::to_string(vertex_map_.size()) + " entries, domain has " +
                         std::to_string(domain_->vertex_count()) + " vertices");
  for (VertexId w : vertex_map_)
    if (w >= codomain_->vertex_count()) throw ParameterError("vertex map points outside the codomain");
  for (const auto& f : domain_->facets())
    if (!codomain_->contains(image(f)))
      throw ParameterError("facet image is not a simplex of " + codomain_->name());
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = vertex_map_[s[i]];
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex chessboard_complex(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("chessboard needs m, n >= 1");
  const int size = std::min(m, n);
  std::vector<std::string> labels(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      labels[cell_id(i, j, n)] = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";

  // Facets: choose `size` rows and an injective column assignment.
  std::vector<Simplex> facets;
  std::vector<int> rows(size);
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<char> row_mask(m, 0);
  std::fill(row_mask.begin(), row_mask.begin() + size, 1);
  do {
    int w = 0;
    for (int i = 0; i < m; ++i)
      if (row_mask[i]) rows[w++] = i;
    std::vector<char> col_mask(n, 0);
    std::fill(col_mask.begin(), col_mask.begin() + size, 1);
    do {
      std::vector<int> chosen;
      for (int j = 0; j < n; ++j)
        if (col_mask[j]) chosen.push_back(j);
      do {
        Simplex s(size);
        for (int t = 0; t < size; ++t) s[t] = cell_id(rows[t], chosen[t], n);
        facets.push_back(std::move(s));
      } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
  } while (std::prev_permutation(row_mask.begin(), row_mask.end()));

  return SimplicialComplex::from_maximal_facets(
      "Delta_{" + std::to_string(m) + "," + std::to_string(n) + "}", static_cast<std::size_t>(m) * n,
      std::move(labels), std::move(facets));
}

VertexPermutation row_permutation(const std::vector<int>& rows, int n) {
  const int m = static_cast<int>(rows.size());
  VertexPermutation p(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p[cell_id(i, j, n)] = cell_id(rows[i], j, n);
  return p;
}

PermutationAction cyclic_row_action(ComplexPtr board, int m, int n) {
  std::vector<int> shift(m);
  for (int i = 0; i < m; ++i) shift[i] = (i + 1) % m;
  return PermutationAction(std::move(board), row_permutation(shift, n));
}

PermutationAction cyclic_row_action(int m, int n) {
  return cyclic_row_action(make_complex(chessboard_complex(m, n)), m, n);
}

PermutationAction cyclic_vertex_action(ComplexPtr skeleton, int m) {
  VertexPermutation p(m);
  for (int i = 0; i < m; ++i) p[i] = static_cast<VertexId>((i + 1) % m);
  return PermutationAction(std::move(skeleton), std::move(p));
}

FreenessReport is_free_action(const SimplicialComplex& k, const PermutationAction& a) {
  if (a.complex().get() != &k && !(*a.complex() == k))
    throw ParameterError("action is defined on " + a.complex()->name() + ", not on " + k.name());
  FreenessReport report;
  VertexPermutation p = a.generator();
  // A simplex fixed by g^j is fixed by every power of g^j, so powers 1..order-1
  // cover all nonidentity group elements.
  for (int j = 1; j < a.order(); ++j, p = compose(a.generator(), p)) {
    for (int q = 0; q <= k.dimension(); ++q) {
      for (const auto& s : k.simplices(q)) {
        if (apply_permutation(p, s) == s) {
          report.free = false;
          report.witness = s;
          report.power = j;
          return report;
        }
      }
    }
  }
  return report;
}

SimplicialMap canonical_projection(int m, int k) {
  if (k < 1 || k > m) throw ParameterError("projection needs 1 <= k <= m");
  auto board = make_complex(chessboard_complex(m, k));
  auto skeleton = make_complex(simplex_skeleton(m, k));
  std::vector<VertexId> vmap(static_cast<std::size_t>(m) * k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) vmap[cell_id(i, j, k)] = static_cast<VertexId>(i);
  return SimplicialMap(board, skeleton, std::move(vmap));
}

SimplicialMap join_maps(const SimplicialMap& f, const SimplicialMap& g) {
  auto domain = make_complex(join(*f.domain(), *g.domain()));
  auto codomain = make_complex(join(*f.codomain(), *g.codomain()));
  const auto shift = static_cast<VertexId>(f.codomain()->vertex_count());
  std::vector<VertexId> vmap = f.vertex_map();
  for (VertexId w : g.vertex_map()) vmap.push_back(w + shift);
  return SimplicialMap(domain, codomain, std::move(vmap));
}

PermutationAction join_actions(const PermutationAction& a, const PermutationAction& b) {
  if (a.order() != b.order())
    throw ParameterError("cannot join actions of orders " + std::to_string(a.order()) + " and " +
                         std::to_string(b.order()));
  auto complex = make_complex(join(*a.complex(), *b.complex()));
  const auto shift = static_cast<VertexId>(a.complex()->vertex_count());
  VertexPermutation p = a.generator();
  for (VertexId w : b.generator()) p.push_back(w + shift);
  return PermutationAction(complex, std::move(p));
}

SimplicialMap join_map_power(const SimplicialMap& f, int d) {
  if (d < 1) throw ParameterError("join power needs d >= 1");
  SimplicialMap out = f;
  for (int i = 1; i < d; ++i) out = join_maps(out, f);
  return out;
}

PermutationAction join_action_power(const PermutationAction& a, int d) {
  if (d < 1) throw ParameterError("join power needs d >= 1");
  PermutationAction out = a;
  for (int i = 1; i < d; ++i) out = join_actions(out, a);
  return out;
}

SimplicialMap restrict_to_first_factor(const SimplicialMap& f, ComplexPtr first_factor) {
  const auto n = first_factor->vertex_count();
  if (n > f.domain()->vertex_count()) throw ParameterError("factor larger than the domain");
  for (const auto& s : first_factor->facets())
    if (!f.domain()->contains(s)) throw ParameterError("not a subcomplex of the domain");
  std::vector<VertexId> vmap(f.vertex_map().begin(), f.vertex_map().begin() + static_cast<std::ptrdiff_t>(n));
  return SimplicialMap(std::move(first_factor), f.codomain(), std::move(vmap));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!same_complex(f.codomain(), g.domain())) throw ParameterError("maps are not composable");
  std::vector<VertexId> vmap(f.vertex_map().size());
  for (std::size_t v = 0; v < vmap.size(); ++v) vmap[v] = g(f(static_cast<VertexId>(v)));
  return SimplicialMap(f.domain(), g.codomain(), std::move(vmap));
}

SimplicialMap identity_map(ComplexPtr k) {
  auto vmap = identity_permutation(k->vertex_count());
  return SimplicialMap(k, k, std::move(vmap));
}

int connectivity_bound(int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("connectivity bound needs s, t >= 1");
  return std::min({s, t, (s + t + 1) / 3}) - 1;
}

RepresentationSphereModel representation_sphere(int r, int d) {
  if (r < 2 || d < 1) throw ParameterError("representation sphere needs r >= 2, d >= 1");
  auto base = make_complex(simplex_skeleton(r, r - 1));
  auto action = join_action_power(cyclic_vertex_action(base, r), d);
  return RepresentationSphereModel{r, d, action.complex(), action};
}

PermutationAction chessboard_join_source(int r, int d, bool with_extra_point) {
  if (r < 2 || d < 1) throw ParameterError("chessboard join needs r >= 2, d >= 1");
  auto action = join_action_power(cyclic_row_action(r, r - 1), d);
  if (with_extra_point) action = join_actions(action, cyclic_row_action(r, 1));
  return action;
}

SimplicialMap canonical_join_projection(int r, int d) {
  return join_map_power(canonical_projection(r, r - 1), d);
}

}  // namespace chessdeg
