#pragma once

// Operator groupings of the (5,4) and (8,2) examples, transcribed entry by
// entry from the published matrices.

#include <cmath>
#include <initializer_list>
#include <vector>

#include "snest/matkernel.hpp"

namespace snest::test {

inline const Complex I{0.0, 1.0};

inline ComplexMatrix lit(int d, double scale, std::initializer_list<Complex> entries) {
  ComplexMatrix m(d, d);
  auto it = entries.begin();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = scale * *it++;
  return m;
}

// The (5,4) grouping, transcribed entry by entry, group-major.
inline std::vector<std::vector<ComplexMatrix>> appendix_a_golden() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s12 = 1.0 / (2.0 * std::sqrt(3.0));
  return {
      {lit(4, s2, {0, -I, 0, 0, I, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
       lit(4, s2, {0, 0, -I, 0, 0, 0, 0, 0, I, 0, 0, 0, 0, 0, 0, 0}),
       lit(4, s2, {0, 0, 0, -I, 0, 0, 0, 0, 0, 0, 0, 0, I, 0, 0, 0})},
      {lit(4, s2, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
       lit(4, s2, {0, 0, 0, 0, 0, 0, -I, 0, 0, I, 0, 0, 0, 0, 0, 0}),
       lit(4, s2, {0, 0, 0, 0, 0, 0, 0, -I, 0, 0, 0, 0, 0, I, 0, 0})},
      {lit(4, s2, {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}),
       lit(4, s2, {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0}),
       lit(4, s2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -I, 0, 0, I, 0})},
      {lit(4, s2, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}),
       lit(4, s2, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0}),
       lit(4, s2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})},
      {lit(4, s2, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
       lit(4, s6, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0}),
       lit(4, s12, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -3})},
  };
}

// The (8,2) ordering, one operator per group.
inline std::vector<ComplexMatrix> appendix_b_golden() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  return {
      lit(3, s2, {0, 1, 0, 1, 0, 0, 0, 0, 0}),  lit(3, s2, {0, -I, 0, I, 0, 0, 0, 0, 0}),
      lit(3, s2, {0, 0, 1, 0, 0, 0, 1, 0, 0}),  lit(3, s2, {0, 0, -I, 0, 0, 0, I, 0, 0}),
      lit(3, s2, {0, 0, 0, 0, 0, 1, 0, 1, 0}),  lit(3, s2, {0, 0, 0, 0, 0, -I, 0, I, 0}),
      lit(3, s2, {1, 0, 0, 0, -1, 0, 0, 0, 0}), lit(3, s6, {1, 0, 0, 0, 1, 0, 0, 0, -2}),
  };
}

}  // namespace snest::test
