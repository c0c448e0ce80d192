#include "hw/simplex.hpp"

#include <stdexcept>

#include "hw/errors.hpp"

namespace hw {

PackingLpResult solve_packing_lp(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c) {
  const std::size_t rows = a.size(), cols = c.size();
  if (b.size() != rows) throw InvalidInput("right-hand side length differs from row count");
  for (const auto& row : a)
    if (row.size() != cols) throw InvalidInput("ragged constraint matrix");
  for (const auto& bi : b)
    if (bi < 0) throw InvalidInput("packing program needs a nonnegative right-hand side");

  // Columns: structural 0..cols-1, slack cols..cols+rows-1. Reduced costs
  // are kept as  z_j - c_j, so a negative entry may enter.
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width + 1, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][width] = b[i];
  }
  std::vector<Rational> reduced(width + 1, Rational(0));
  for (std::size_t j = 0; j < cols; ++j) reduced[j] = -c[j];
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  PackingLpResult out;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) throw std::runtime_error("packing program is unbounded");

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (reduced[enter] != 0) {
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j <= width; ++j)
        if (t[leave][j] != 0) reduced[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.primal.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) out.primal[basis[i]] = t[i][width];
  out.row_duals.assign(rows, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) out.row_duals[i] = reduced[cols + i];
  out.objective = reduced[width];
  return out;
}

}  // namespace hw
