#pragma once

#include "chessdeg/numeric.hpp"

#include <vector>

namespace chessdeg {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> solution;  // x >= 0 with A x = b when feasible
  Rational infeasibility;          // phase-1 optimum: sum of artificial values
  std::size_t pivots = 0;
};

/// Decides exactly whether {x >= 0 : A x = b} is nonempty with a phase-1
/// tableau simplex under Bland's rule, so it always terminates. A row-major
/// with one entry per variable in every row.
FeasibilityResult solve_feasibility(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace chessdeg
