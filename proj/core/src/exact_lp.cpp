#include "chessdeg/exact_lp.hpp"

#include "chessdeg/errors.hpp"

namespace chessdeg {

FeasibilityResult solve_feasibility(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw ParameterError("right-hand side length differs from the row count");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != n) throw ParameterError("ragged constraint matrix");

  // Columns: n originals, m artificials, then the right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of "minimize sum of artificials"; cost[rhs] holds -objective.
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] != 0) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

  FeasibilityResult result;
  std::vector<char> left_basis(m, 0);  // artificials never re-enter once out
  while (true) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m && enter == width; ++j) {
      if (j >= n && left_basis[j - n]) continue;
      if (cost[j] < 0) enter = j;
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen: the phase-1 objective is bounded below

    const Rational pivot = t[leave][enter];
    for (std::size_t j = 0; j < width; ++j)
      if (t[leave][j] != 0) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    }
    if (basis[leave] >= n) left_basis[basis[leave] - n] = 1;
    basis[leave] = enter;
    ++result.pivots;
  }

  result.infeasibility = -cost[rhs];
  result.feasible = result.infeasibility == 0;
  if (result.feasible) {
    result.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) result.solution[basis[i]] = t[i][rhs];
  }
  return result;
}

}  // namespace chessdeg
