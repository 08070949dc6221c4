#include "sgh/fixtures.hpp"

#include <array>

namespace sgh {
namespace fixtures {

namespace {

// Elements 0..3 are the rectangular band x11, x12, x21, x22; the extras
// follow. row(x_ij) = i, col(x_ij) = j.
int band_row(int x) { return x / 2; }
int band_col(int x) { return x % 2; }
int band_elem(int i, int j) { return 2 * i + j; }

}  // namespace

SemigroupTable no_zero() {
  const int q = 4;
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (a < 4 && b < 4) {
        t[a][b] = band_elem(band_row(a), band_col(b));
      } else if (a < 4) {
        t[a][b] = band_elem(band_row(a), 0);  // x_ij q = x_i1
      } else if (b < 4) {
        t[a][b] = b;  // q x_ij = x_ij
      } else {
        t[a][b] = q;
      }
    }
  }
  return validate_table(t);
}

SemigroupTable sphere3() {
  // q = 4, r = 5; qq = qr = q, rr = rq = r; both act like q on the band.
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (a < 4 && b < 4) {
        t[a][b] = band_elem(band_row(a), band_col(b));
      } else if (a < 4) {
        t[a][b] = band_elem(band_row(a), 0);
      } else if (b < 4) {
        t[a][b] = b;
      } else {
        t[a][b] = a;
      }
    }
  }
  return validate_table(t);
}

SemigroupTable zzz() {
  const int y = 4;
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (a < 4 && b < 4) {
        t[a][b] = band_elem(band_row(a), band_col(b));
      } else if (a < 4) {
        t[a][b] = band_elem(band_row(a), 0);  // x_ij y = x_i1
      } else if (b < 4) {
        t[a][b] = band_elem(0, band_col(b));  // y x_ij = x_1j
      } else {
        t[a][b] = band_elem(0, 0);  // yy = x11
      }
    }
  }
  (void)y;
  return validate_table(t);
}

SemigroupTable two_pow() {
  // y = 4 and z = 5 both behave like x11 in every product:
  // a_ij b_kl = x_il with row(y) = row(z) = col(y) = col(z) = 0.
  auto rc = [](int x) {
    return x < 4 ? std::array<int, 2>{band_row(x), band_col(x)}
                 : std::array<int, 2>{0, 0};
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      t[a][b] = band_elem(rc(a)[0], rc(b)[1]);
    }
  }
  return validate_table(t);
}

SemigroupTable nine() {
  return validate_table({{0, 1, 0, 1, 0, 0, 0, 0, 0},
                         {0, 1, 0, 1, 0, 0, 0, 1, 1},
                         {2, 3, 2, 3, 2, 2, 2, 2, 2},
                         {2, 3, 2, 3, 2, 2, 2, 3, 3},
                         {0, 1, 0, 1, 0, 4, 4, 0, 0},
                         {0, 1, 2, 3, 0, 5, 5, 0, 0},
                         {0, 1, 2, 3, 0, 6, 6, 0, 0},
                         {0, 1, 0, 1, 4, 4, 0, 7, 8},
                         {0, 1, 0, 1, 4, 0, 4, 7, 8}});
}

SemigroupTable twelve() {
  return validate_table({{0, 0, 0, 0, 4, 4, 4, 4, 0, 0, 4, 4},
                         {1, 1, 1, 1, 5, 5, 5, 5, 1, 1, 5, 5},
                         {2, 2, 2, 2, 6, 6, 6, 6, 2, 2, 6, 6},
                         {3, 3, 3, 3, 7, 7, 7, 7, 3, 3, 7, 7},
                         {0, 0, 0, 0, 4, 4, 4, 4, 4, 4, 0, 0},
                         {1, 1, 1, 1, 5, 5, 5, 5, 5, 5, 1, 1},
                         {2, 2, 2, 2, 6, 6, 6, 6, 6, 6, 2, 2},
                         {3, 3, 3, 3, 7, 7, 7, 7, 7, 7, 3, 3},
                         {0, 3, 2, 3, 4, 7, 6, 7, 8, 9, 10, 11},
                         {0, 2, 2, 3, 4, 6, 6, 7, 8, 9, 10, 11},
                         {0, 2, 3, 2, 4, 6, 7, 6, 10, 11, 8, 9},
                         {0, 3, 3, 2, 4, 7, 7, 6, 10, 11, 8, 9}});
}

SemigroupTable torsion_1494640() {
  return validate_table({{0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                         {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                         {2, 3, 2, 3, 2, 2, 2, 2, 2, 2},
                         {2, 3, 2, 3, 2, 2, 2, 2, 2, 2},
                         {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                         {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                         {0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                         {0, 1, 0, 1, 0, 0, 0, 4, 4, 5},
                         {0, 1, 0, 1, 0, 0, 0, 6, 5, 6},
                         {0, 1, 0, 1, 0, 0, 0, 0, 6, 4}});
}

}  // namespace fixtures
}  // namespace sgh
