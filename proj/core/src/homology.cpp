#include "chessdeg/homology.hpp"

#include "chessdeg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace chessdeg {

namespace {

using boost::multiprecision::abs;

// Working copy for the dense reduction. Row ops are mirrored into `left`,
// column ops into `right`, when transforms are tracked.
struct DenseSnf {
  IntegerMatrix a;
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c) std::swap((*left)(i, c), (*left)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r) std::swap((*right)(r, i), (*right)(r, j));
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(j, c) != 0) a(i, c) += f * a(j, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c)
        if ((*left)(j, c) != 0) (*left)(i, c) += f * (*left)(j, c);
  }
  // col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, j) != 0) a(r, i) += f * a(r, j);
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r)
        if ((*right)(r, j) != 0) (*right)(r, i) += f * (*right)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c) (*left)(i, c) = -(*left)(i, c);
  }

  // Smallest-magnitude nonzero entry in the trailing block starting at t.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        BigInt m = abs(a(i, j));
        if (!found || m < best) {
          found = true;
          best = m;
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    return found;
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> diag;
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      while (true) {
        bool dirty = false;
        // Clear column t below the pivot; a nonzero remainder becomes the new pivot.
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (a(i, t) == 0) continue;
          BigInt q = a(i, t) / a(t, t);
          add_row(i, t, -q);
          if (a(i, t) != 0) {
            swap_rows(t, i);
            dirty = true;
          }
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) == 0) continue;
          BigInt q = a(t, j) / a(t, t);
          add_col(j, t, -q);
          if (a(t, j) != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
        if (dirty) continue;
        // Pivot must divide the whole remaining block.
        bool divides = true;
        for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a(i, j) % a(t, t) != 0) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (a(t, t) < 0) negate_row(t);
      diag.push_back(a(t, t));
    }
    return diag;
  }
};

// Sparse elimination of unit pivots, with overflow detection on int64 entries.
struct SparseEliminator {
  std::vector<std::map<std::size_t, std::int64_t>> rows;  // row -> (col -> value)
  std::vector<std::set<std::size_t>> cols;                // col -> rows with nonzero
  bool overflow = false;

  explicit SparseEliminator(const SparseBoundary& m) : rows(m.rows), cols(m.columns.size()) {
    for (std::size_t j = 0; j < m.columns.size(); ++j)
      for (const auto& [i, v] : m.columns[j]) {
        if (v == 0) continue;
        rows[i][j] = v;
        cols[j].insert(i);
      }
  }

  // Eliminates pivot (p, j) with |a_pj| = 1: clears column j from other rows,
  // then drops row p and column j (column ops clear row p without touching others).
  void eliminate(std::size_t p, std::size_t j) {
    const std::int64_t pv = rows[p].at(j);
    std::vector<std::size_t> targets(cols[j].begin(), cols[j].end());
    for (std::size_t i : targets) {
      if (i == p) continue;
      const std::int64_t f = rows[i].at(j) * pv;  // a_ij / a_pj since a_pj = +-1
      for (const auto& [c, v] : rows[p]) {
        std::int64_t prod = 0, sum = 0;
        auto it = rows[i].find(c);
        std::int64_t cur = it == rows[i].end() ? 0 : it->second;
        if (__builtin_mul_overflow(f, v, &prod) || __builtin_sub_overflow(cur, prod, &sum)) {
          overflow = true;
          return;
        }
        if (sum == 0) {
          if (it != rows[i].end()) rows[i].erase(it);
          cols[c].erase(i);
        } else if (it == rows[i].end()) {
          rows[i].emplace(c, sum);
          cols[c].insert(i);
        } else {
          it->second = sum;
        }
      }
    }
    for (const auto& [c, v] : rows[p]) cols[c].erase(p);
    rows[p].clear();
  }

  std::size_t run() {
    std::size_t units = 0;
    bool progress = true;
    while (progress && !overflow) {
      progress = false;
      for (std::size_t j = 0; j < cols.size() && !overflow; ++j) {
        if (cols[j].empty()) continue;
        std::size_t best = SIZE_MAX, best_len = SIZE_MAX;
        for (std::size_t i : cols[j]) {
          std::int64_t v = rows[i].at(j);
          if ((v == 1 || v == -1) && rows[i].size() < best_len) {
            best = i;
            best_len = rows[i].size();
          }
        }
        if (best == SIZE_MAX) continue;
        eliminate(best, j);
        ++units;
        progress = true;
      }
    }
    return units;
  }
};

}  // namespace

SmithNormalFormResult smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  DenseSnf work{m, std::nullopt, std::nullopt};
  if (with_transforms) {
    work.left = IntegerMatrix::identity(m.rows());
    work.right = IntegerMatrix::identity(m.cols());
  }
  SmithNormalFormResult out;
  out.diagonal = work.run();
  out.rank = out.diagonal.size();
  out.left = std::move(work.left);
  out.right = std::move(work.right);
  return out;
}

SmithNormalFormResult smith_normal_form(const SparseBoundary& m) {
  SparseEliminator elim(m);
  const std::size_t units = elim.run();
  if (elim.overflow) {
    IntegerMatrix dense(m.rows, m.columns.size());
    for (std::size_t j = 0; j < m.columns.size(); ++j)
      for (const auto& [i, v] : m.columns[j]) dense(i, j) = v;
    return smith_normal_form(dense);
  }
  // Compact the residual block.
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t i = 0; i < elim.rows.size(); ++i)
    if (!elim.rows[i].empty()) live_rows.push_back(i);
  for (std::size_t j = 0; j < elim.cols.size(); ++j)
    if (!elim.cols[j].empty()) live_cols.push_back(j);
  std::unordered_map<std::size_t, std::size_t> col_pos;
  for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
  IntegerMatrix rest(live_rows.size(), live_cols.size());
  for (std::size_t k = 0; k < live_rows.size(); ++k)
    for (const auto& [c, v] : elim.rows[live_rows[k]]) rest(k, col_pos.at(c)) = v;

  SmithNormalFormResult out;
  out.diagonal.assign(units, BigInt(1));
  auto tail = smith_normal_form(rest);
  // The residual has no unit entries left but its invariant factors may
  // still start with 1; merge keeping the chain sorted.
  out.diagonal.insert(out.diagonal.end(), tail.diagonal.begin(), tail.diagonal.end());
  std::sort(out.diagonal.begin(), out.diagonal.end());
  out.rank = out.diagonal.size();
  return out;
}

IntegerMatrix smith_diagonal_matrix(const SmithNormalFormResult& snf, std::size_t rows, std::size_t cols) {
  IntegerMatrix d(rows, cols);
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) d(i, i) = snf.diagonal[i];
  return d;
}

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw ParameterError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool HomologyProfile::vanishes_through(int q) const {
  for (int i = 0; i <= q && i < static_cast<int>(betti.size()); ++i)
    if (betti[i] != 0 || !torsion[i].empty()) return false;
  return true;
}

HomologyProfile homology(const SimplicialComplex& k, bool reduced, std::optional<int> max_dim) {
  HomologyProfile h;
  h.reduced = reduced;
  const int top = max_dim ? std::min(*max_dim, k.dimension()) : k.dimension();
  if (top < 0) return h;

  // rank and invariant factors of boundary_q for q = 0..top+1
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<std::vector<BigInt>> factors(top + 2);
  std::vector<std::size_t> chains(top + 1, 0);
  for (int q = 0; q <= top + 1 && q <= k.dimension(); ++q) {
    auto snf = smith_normal_form(sparse_boundary(k, q, reduced));
    rank[q] = snf.rank;
    factors[q] = std::move(snf.diagonal);
    if (q <= top) chains[q] = k.simplices(q).size();
  }
  for (int q = 0; q <= top; ++q) {
    const auto cycles = static_cast<std::int64_t>(chains[q] - rank[q]);
    h.betti.push_back(cycles - static_cast<std::int64_t>(rank[q + 1]));
    std::vector<BigInt> tors;
    for (const auto& d : factors[q + 1])
      if (d > 1) tors.push_back(d);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

int connectivity_probe(const SimplicialComplex& k, int q_max) {
  if (q_max > k.dimension()) throw ParameterError("probe depth exceeds the dimension");
  if (q_max < 0) return q_max;
  auto h = homology(k, true, q_max);
  int c = -1;
  for (int q = 0; q <= q_max; ++q) {
    if (h.betti[q] != 0 || !h.torsion[q].empty()) break;
    c = q;
  }
  return c;
}

std::vector<BigInt> prime_power_decomposition(const std::vector<BigInt>& invariant_factors) {
  std::vector<BigInt> out;
  for (BigInt n : invariant_factors) {
    for (BigInt p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      BigInt pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      out.push_back(pk);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chessdeg
