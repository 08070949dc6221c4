#include "sgh/nerve.hpp"

#include <string>

#include "sgh/error.hpp"

namespace sgh {

IntMatrix bar_boundary(const SemigroupTable& s, int i, long col_cap) {
  const int n = s.order();
  long cols = 1;
  for (int j = 0; j < i; ++j) {
    cols *= n;
    if (cols > col_cap) {
      throw DimensionCapExceeded("bar complex dimension " + std::to_string(i)
                                 + " exceeds the column cap");
    }
  }
  const long rows = i == 1 ? 1 : cols / n;
  IntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  if (i == 1) {
    return m;  // both faces of a 1-cell hit the unique 0-cell
  }
  std::vector<int> tuple(i, 0);
  std::vector<int> face(i - 1);
  for (long c = 0; c < cols; ++c) {
    long code = c;
    for (int p = i - 1; p >= 0; --p) {
      tuple[p] = static_cast<int>(code % n);
      code /= n;
    }
    int sign = 1;
    for (int j = 0; j <= i; ++j, sign = -sign) {
      if (j == 0) {
        std::copy(tuple.begin() + 1, tuple.end(), face.begin());
      } else if (j == i) {
        std::copy(tuple.begin(), tuple.end() - 1, face.begin());
      } else {
        for (int p = 0; p < j - 1; ++p) {
          face[p] = tuple[p];
        }
        face[j - 1] = s.at(tuple[j - 1], tuple[j]);
        for (int p = j; p < i - 1; ++p) {
          face[p] = tuple[p + 1];
        }
      }
      long r = 0;
      for (int p = 0; p < i - 1; ++p) {
        r = r * n + face[p];
      }
      m.at(static_cast<int>(r), static_cast<int>(c)) += sign;
    }
  }
  return m;
}

std::vector<FinAbGroup> nerve_homology(const SemigroupTable& s, int m,
                                       long col_cap) {
  std::vector<FinAbGroup> out;
  out.reserve(m);
  IntMatrix lower = bar_boundary(s, 1, col_cap);
  for (int i = 1; i <= m; ++i) {
    IntMatrix upper = bar_boundary(s, i + 1, col_cap);
    out.push_back(homology_from_matrices(lower, upper));
    lower = std::move(upper);
  }
  return out;
}

}  // namespace sgh
