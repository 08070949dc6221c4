#ifndef SGH_INTMAT_HPP_
#define SGH_INTMAT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sgh/finab.hpp"

namespace sgh {

// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  std::string str() const;  // for diagnostics

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMatrix d;             // diagonal, d_1 | d_2 | ..., nonnegative
  std::vector<Int> diag;   // the diagonal entries, length min(rows, cols)
  std::optional<IntMatrix> u, v;  // if requested: u * m * v == d, |det| = 1
};

// Smith normal form. Pivots are chosen by minimal nonzero absolute value to
// limit coefficient growth.
SmithResult smith_normal_form(const IntMatrix& m, bool want_transforms = false);

// Unique Hermite normal form of the row space of b: rows have strictly
// increasing pivot columns, pivots positive, entries above each pivot
// reduced into [0, pivot). Zero rows are dropped.
IntMatrix rowspace_hnf(const IntMatrix& b);

// Integral LLL reduction (delta = 3/4) of a basis given as rows; returns a
// short basis of the same lattice. Rows must be linearly independent.
IntMatrix lll_reduce_rows(const IntMatrix& b);

// Columns form the canonical Z-basis of ker m = {v : m v = 0}. The basis is
// saturated (it spans every integer kernel vector over Z) and depends only
// on the kernel lattice, not on the presenting matrix.
IntMatrix kernel_basis(const IntMatrix& m);

// Same kernel lattice, but whatever basis the elimination produces (no
// canonical form); cheaper when the caller canonicalizes later anyway.
IntMatrix kernel_basis_raw(const IntMatrix& m);

// Exact solve k * c = a where every column of a lies in the integer column
// span of k. Throws NotInLattice otherwise.
IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& a);

// ker(m_out) / im(m_in) for a two-map segment with m_out * m_in == 0
// (verified; throws NotAComplex).
FinAbGroup homology_from_matrices(const IntMatrix& m_out,
                                  const IntMatrix& m_in);

}  // namespace sgh

#endif  // SGH_INTMAT_HPP_
