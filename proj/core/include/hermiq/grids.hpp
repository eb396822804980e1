#pragma once

#include <string>
#include <vector>

#include "hermiq/curve.hpp"

namespace hermiq {

/// Membership classes of one semigroup cell relative to a designed distance
/// pair delta' <= delta: the dual basis (mu < delta), the code itself
/// (sigma >= delta), and the enlargement extras (delta' <= sigma < delta).
struct GridCell {
  int i;
  int j;
  int lambda;
  int sigma;
  int mu;
  bool dual_basis;
  bool code;
  bool extra;
};

/// Cells in grid order: rows j = 0..q-1 top to bottom, columns i = 0..q^2-1
/// left to right.
std::vector<GridCell> grid_cells(const Curve& curve, int delta, int delta_prime);

/// Three ASCII grids (pole orders, sigma, mu) with membership markers:
/// D = dual basis, C = code, E = enlargement extra.
std::string render_grids(const Curve& curve, int delta, int delta_prime);

}  // namespace hermiq
