#pragma once

#include <initializer_list>
#include <vector>

#include "coxcube/matrix.hpp"

namespace coxcube::fixtures {

/// Build a matrix from its strictly-lower-triangle rows (row i lists
/// entries (i,0..i-1)); 0 encodes infinity.
inline CoxMatrix from_lower_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int size = static_cast<int>(rows.size()) + 1;
  CoxMatrix m(size);
  int i = 1;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m.set(i, j++, static_cast<Label>(v));
    ++i;
  }
  return m;
}

/// The two potential 6-cube matrices (labels; 0 = infinity). Their doubled
/// Gram matrices have entries 2, 0, -1, 2x_i only.
inline CoxMatrix six_cube_g1() {
  return from_lower_rows({{0},
                          {2, 2},
                          {2, 3, 0},
                          {2, 2, 2, 2},
                          {2, 3, 3, 2, 0},
                          {2, 2, 2, 2, 3, 2},
                          {3, 2, 2, 3, 2, 2, 0},
                          {2, 2, 2, 3, 2, 2, 3, 2},
                          {2, 3, 2, 2, 3, 2, 2, 2, 0},
                          {2, 2, 3, 2, 2, 2, 2, 2, 3, 2},
                          {3, 2, 2, 2, 2, 3, 3, 2, 2, 2, 0}});
}

inline CoxMatrix six_cube_g2() {
  return from_lower_rows({{0},
                          {2, 2},
                          {2, 3, 0},
                          {2, 2, 2, 2},
                          {2, 3, 3, 2, 0},
                          {2, 2, 2, 2, 2, 2},
                          {3, 2, 2, 3, 3, 2, 0},
                          {2, 2, 2, 2, 3, 2, 2, 2},
                          {3, 2, 3, 2, 2, 2, 3, 2, 0},
                          {2, 2, 3, 2, 3, 2, 2, 2, 2, 2},
                          {2, 3, 2, 2, 2, 2, 3, 2, 3, 2, 0}});
}

}  // namespace coxcube::fixtures
