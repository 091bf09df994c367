#include "chessdeg/simplicial.hpp"

#include "chessdeg/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace chessdeg {

namespace {

// Calls fn on every (size)-subset of `facet`, in lexicographic order.
template <typename Fn>
void for_each_subset(const Simplex& facet, std::size_t size, Fn&& fn) {
  const std::size_t n = facet.size();
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  Simplex sub(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) sub[i] = facet[idx[i]];
    fn(sub);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_facets(std::string name, std::size_t vertex_count,
                                                         std::vector<std::string> labels,
                                                         std::vector<Simplex> facets) {
  SimplicialComplex k;
  k.name_ = std::move(name);
  k.vertex_count_ = vertex_count;
  k.labels_ = labels.empty() ? default_labels(vertex_count) : std::move(labels);
  std::sort(facets.begin(), facets.end());
  k.facets_ = std::move(facets);
  for (const auto& f : k.facets_) k.dimension_ = std::max(k.dimension_, simplex_dimension(f));
  return k;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return simplex_dimension(f) == dimension_; });
}

std::vector<Simplex> SimplicialComplex::simplices(int q) const {
  if (q < -1) return {};
  if (q == -1) return facets_.empty() ? std::vector<Simplex>{} : std::vector<Simplex>{Simplex{}};
  if (q == 0) {
    std::vector<Simplex> out;
    std::vector<char> seen(vertex_count_, 0);
    for (const auto& f : facets_)
      for (VertexId v : f) seen[v] = 1;
    for (VertexId v = 0; v < vertex_count_; ++v)
      if (seen[v]) out.push_back({v});
    return out;
  }
  std::set<Simplex> faces;
  for (const auto& f : facets_)
    for_each_subset(f, static_cast<std::size_t>(q + 1), [&](const Simplex& s) { faces.insert(s); });
  return {faces.begin(), faces.end()};
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return !facets_.empty();
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return f.size() >= s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

std::optional<VertexId> SimplicialComplex::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
  SimplicialComplex copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& facet_list,
                                std::optional<std::vector<std::string>> vertex_labels, std::string name,
                                std::optional<std::size_t> vertex_count) {
  std::size_t max_id_plus_one = 0;
  std::vector<Simplex> cleaned;
  cleaned.reserve(facet_list.size());
  for (const auto& raw : facet_list) {
    if (raw.empty()) throw MalformedInput("empty facet");
    Simplex s = raw;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw MalformedInput("facet repeats vertex " + std::to_string(*std::adjacent_find(s.begin(), s.end())));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, s.back() + 1);
    cleaned.push_back(std::move(s));
  }
  const std::size_t n = vertex_count.value_or(max_id_plus_one);
  if (n < max_id_plus_one)
    throw MalformedInput("vertex id " + std::to_string(max_id_plus_one - 1) + " out of range");

  // Declared vertices missing from every facet become isolated 0-facets.
  std::vector<char> used(n, 0);
  for (const auto& s : cleaned)
    for (VertexId v : s) used[v] = 1;
  for (VertexId v = 0; v < n; ++v)
    if (!used[v]) cleaned.push_back({v});

  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

  // Absorb faces: only a strictly larger facet can contain another.
  std::vector<std::size_t> order(cleaned.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cleaned[a].size() > cleaned[b].size(); });
  std::vector<Simplex> maximal;
  for (std::size_t idx : order) {
    const Simplex& s = cleaned[idx];
    bool absorbed = std::any_of(maximal.begin(), maximal.end(), [&](const Simplex& f) {
      return f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end());
    });
    if (!absorbed) maximal.push_back(s);
  }

  std::vector<std::string> labels;
  if (vertex_labels) {
    if (vertex_labels->size() != n)
      throw MalformedInput("expected " + std::to_string(n) + " labels, got " + std::to_string(vertex_labels->size()));
    std::set<std::string> distinct(vertex_labels->begin(), vertex_labels->end());
    if (distinct.size() != n) throw MalformedInput("vertex labels are not unique");
    labels = *vertex_labels;
  }
  return SimplicialComplex::from_maximal_facets(std::move(name), n, std::move(labels), std::move(maximal));
}

SimplicialComplex simplex_skeleton(int m, int k) {
  if (m < 1 || k < 1 || k > m)
    throw ParameterError("skeleton needs 1 <= k <= m, got m=" + std::to_string(m) + ", k=" + std::to_string(k));
  Simplex all(m);
  for (int i = 0; i < m; ++i) all[i] = static_cast<VertexId>(i);
  std::vector<Simplex> facets;
  for_each_subset(all, static_cast<std::size_t>(k), [&](const Simplex& s) { facets.push_back(s); });
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = std::to_string(i + 1);
  return SimplicialComplex::from_maximal_facets("[" + std::to_string(m) + "]^(" + std::to_string(k) + ")", m,
                                                std::move(labels), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  const auto shift = static_cast<VertexId>(k.vertex_count());
  std::vector<std::string> labels;
  labels.reserve(k.vertex_count() + l.vertex_count());
  for (const auto& s : k.labels()) labels.push_back("0." + s);
  for (const auto& s : l.labels()) labels.push_back("1." + s);

  std::vector<Simplex> facets;
  if (k.facets().empty() || l.facets().empty()) {
    for (const auto& f : k.facets()) facets.push_back(f);
    for (const auto& g : l.facets()) {
      Simplex s;
      for (VertexId v : g) s.push_back(v + shift);
      facets.push_back(std::move(s));
    }
  } else {
    facets.reserve(k.facets().size() * l.facets().size());
    for (const auto& f : k.facets())
      for (const auto& g : l.facets()) {
        Simplex s = f;
        for (VertexId v : g) s.push_back(v + shift);
        facets.push_back(std::move(s));
      }
  }
  return SimplicialComplex::from_maximal_facets("(" + k.name() + ")*(" + l.name() + ")",
                                                k.vertex_count() + l.vertex_count(), std::move(labels),
                                                std::move(facets));
}

SimplicialComplex join_power(const SimplicialComplex& k, int d) {
  if (d < 1) throw ParameterError("join power needs d >= 1");
  SimplicialComplex out = k;
  for (int i = 1; i < d; ++i) out = join(out, k);
  return out.renamed("(" + k.name() + ")^*" + std::to_string(d));
}

SimplicialComplex cone(const SimplicialComplex& k) {
  auto apex = SimplicialComplex::from_maximal_facets("apex", 1, {"apex"}, {{0}});
  return join(k, apex).renamed("Cone(" + k.name() + ")");
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::int64_t> f;
  for (int q = 0; q <= k.dimension(); ++q) f.push_back(static_cast<std::int64_t>(k.simplices(q).size()));
  return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  auto f = f_vector(k);
  for (std::size_t q = 0; q < f.size(); ++q) chi += (q % 2 == 0 ? 1 : -1) * f[q];
  return chi;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw MalformedInput("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw ParameterError("matrix shape mismatch in product");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SparseBoundary sparse_boundary(const SimplicialComplex& k, int q, bool reduced) {
  if (q < 0 || q > k.dimension())
    throw ParameterError("boundary dimension " + std::to_string(q) + " outside 0.." + std::to_string(k.dimension()));
  const auto cols = k.simplices(q);
  SparseBoundary out;
  out.columns.resize(cols.size());
  if (q == 0) {
    out.rows = reduced ? 1 : 0;
    if (reduced)
      for (auto& c : out.columns) c.emplace_back(0, 1);
    return out;
  }
  const auto rows = k.simplices(q - 1);
  out.rows = rows.size();
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Simplex& s = cols[j];
    Simplex face(s.size() - 1);
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != omit) face[w++] = s[t];
      out.columns[j].emplace_back(row_index.at(face), omit % 2 == 0 ? 1 : -1);
    }
    std::sort(out.columns[j].begin(), out.columns[j].end());
  }
  return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int q, bool reduced) {
  const auto sparse = sparse_boundary(k, q, reduced);
  IntegerMatrix m(sparse.rows, sparse.columns.size());
  for (std::size_t j = 0; j < sparse.columns.size(); ++j)
    for (const auto& [i, v] : sparse.columns[j]) m(i, j) = v;
  return m;
}

BigInt IntegerChain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntegerChain::add(const Simplex& s, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntegerChain IntegerChain::scaled(const BigInt& factor) const {
  IntegerChain out(dimension_);
  if (factor == 0) return out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, c * factor);
  return out;
}

IntegerChain boundary(const IntegerChain& chain, bool reduced) {
  IntegerChain out(chain.dimension() - 1);
  if (chain.dimension() == 0 && !reduced) return out;
  for (const auto& [s, c] : chain.terms()) {
    Simplex face(s.size() - 1);
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != omit) face[w++] = s[t];
      out.add(face, omit % 2 == 0 ? c : BigInt(-c));
    }
  }
  return out;
}

}  // namespace chessdeg
