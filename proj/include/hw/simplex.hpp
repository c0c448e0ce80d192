#pragma once

#include <vector>

#include "hw/rational.hpp"

namespace hw {

// maximize c.y  subject to  A y <= b, y >= 0, with b >= 0.
//
// Dense tableau simplex in exact arithmetic, starting from the slack basis
// and pivoting by Bland's rule. `row_duals` are the optimal shadow prices
// of the rows, so  b.row_duals == objective  and  A^T row_duals >= c.
struct PackingLpResult {
  std::vector<Rational> primal;
  std::vector<Rational> row_duals;
  Rational objective;
  int pivots = 0;
};

// Throws InvalidInput for malformed input or a negative right-hand side,
// std::runtime_error if the program is unbounded.
PackingLpResult solve_packing_lp(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c);

}  // namespace hw
