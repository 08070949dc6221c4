#include "sgh/intmat.hpp"

#include <algorithm>
#include <sstream>

#include "sgh/error.hpp"

namespace sgh {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division (C++ / truncates toward zero).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) {
    q -= 1;
  }
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      t.at(c, r) = at(r, c);
    }
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  IntMatrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(r, k);
      if (x == 0) {
        continue;
      }
      for (int c = 0; c < o.cols_; ++c) {
        if (o.at(k, c) != 0) {
          p.at(r, c) += x * o.at(k, c);
        }
      }
    }
  }
  return p;
}

std::string IntMatrix::str() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      out << (c ? " " : "") << at(r, c).str();
    }
    out << "\n";
  }
  return out.str();
}

SmithResult smith_normal_form(const IntMatrix& input, bool want_transforms) {
  IntMatrix m = input;
  const int rows = m.rows(), cols = m.cols();
  IntMatrix u, v;
  if (want_transforms) {
    u = IntMatrix::identity(rows);
    v = IntMatrix::identity(cols);
  }

  auto row_sub = [&](int dst, int src, const Int& q) {
    for (int c = 0; c < cols; ++c) {
      m.at(dst, c) -= q * m.at(src, c);
    }
    if (want_transforms) {
      for (int c = 0; c < rows; ++c) {
        u.at(dst, c) -= q * u.at(src, c);
      }
    }
  };
  auto col_sub = [&](int dst, int src, const Int& q) {
    for (int r = 0; r < rows; ++r) {
      m.at(r, dst) -= q * m.at(r, src);
    }
    if (want_transforms) {
      for (int r = 0; r < cols; ++r) {
        v.at(r, dst) -= q * v.at(r, src);
      }
    }
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) {
      std::swap(m.at(i, c), m.at(j, c));
    }
    if (want_transforms) {
      for (int c = 0; c < rows; ++c) {
        std::swap(u.at(i, c), u.at(j, c));
      }
    }
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) {
      std::swap(m.at(r, i), m.at(r, j));
    }
    if (want_transforms) {
      for (int r = 0; r < cols; ++r) {
        std::swap(v.at(r, i), v.at(r, j));
      }
    }
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < cols; ++c) {
      m.at(i, c) = -m.at(i, c);
    }
    if (want_transforms) {
      for (int c = 0; c < rows; ++c) {
        u.at(i, c) = -u.at(i, c);
      }
    }
  };

  const int t_max = std::min(rows, cols);
  for (int t = 0; t < t_max; ++t) {
    // Find the minimal-absolute-value nonzero entry in the working block.
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r) {
      for (int c = t; c < cols; ++c) {
        if (m.at(r, c) != 0
            && (pr < 0 || int_abs(m.at(r, c)) < int_abs(m.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) {
      break;  // block is zero
    }
    row_swap(t, pr);
    col_swap(t, pc);

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (int r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        Int q = m.at(r, t) / m.at(t, t);
        row_sub(r, t, q);
        if (m.at(r, t) != 0) {
          // Remainder is smaller than the pivot; promote it.
          row_swap(t, r);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t right of the pivot.
      for (int c = t + 1; c < cols; ++c) {
        if (m.at(t, c) == 0) continue;
        Int q = m.at(t, c) / m.at(t, t);
        col_sub(c, t, q);
        if (m.at(t, c) != 0) {
          col_swap(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Divisibility fix-up: the pivot must divide the whole block.
      bool fixed = true;
      for (int r = t + 1; r < rows && fixed; ++r) {
        for (int c = t + 1; c < cols && fixed; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            row_sub(t, r, Int(-1));  // adds row r into row t
            fixed = false;
          }
        }
      }
      if (fixed) {
        break;
      }
    }
    if (m.at(t, t) < 0) {
      row_negate(t);
    }
  }

  SmithResult res;
  res.d = IntMatrix(rows, cols);
  res.diag.reserve(t_max);
  for (int t = 0; t < t_max; ++t) {
    res.d.at(t, t) = m.at(t, t);
    res.diag.push_back(m.at(t, t));
  }
  if (want_transforms) {
    res.u = std::move(u);
    res.v = std::move(v);
  }
  return res;
}

IntMatrix rowspace_hnf(const IntMatrix& input) {
  IntMatrix b = input;
  const int rows = b.rows(), cols = b.cols();
  int done = 0;  // rows [0, done) are finished pivot rows
  for (int c = 0; c < cols && done < rows; ++c) {
    // Reduce column c among rows >= done until at most one nonzero remains.
    for (;;) {
      int pivot = -1;
      for (int r = done; r < rows; ++r) {
        if (b.at(r, c) != 0
            && (pivot < 0 || int_abs(b.at(r, c)) < int_abs(b.at(pivot, c)))) {
          pivot = r;
        }
      }
      if (pivot < 0) {
        break;
      }
      bool others = false;
      for (int r = done; r < rows; ++r) {
        if (r == pivot || b.at(r, c) == 0) continue;
        Int q = b.at(r, c) / b.at(pivot, c);
        for (int j = 0; j < cols; ++j) {
          b.at(r, j) -= q * b.at(pivot, j);
        }
        if (b.at(r, c) != 0) {
          others = true;
        }
      }
      if (!others) {
        // Move the pivot row into place, normalize sign, reduce above.
        if (pivot != done) {
          for (int j = 0; j < cols; ++j) {
            std::swap(b.at(pivot, j), b.at(done, j));
          }
        }
        if (b.at(done, c) < 0) {
          for (int j = 0; j < cols; ++j) {
            b.at(done, j) = -b.at(done, j);
          }
        }
        for (int r = 0; r < done; ++r) {
          if (b.at(r, c) == 0) continue;
          Int q = floor_div(b.at(r, c), b.at(done, c));
          if (q == 0) continue;
          for (int j = 0; j < cols; ++j) {
            b.at(r, j) -= q * b.at(done, j);
          }
        }
        ++done;
        break;
      }
    }
  }
  IntMatrix h(done, cols);
  for (int r = 0; r < done; ++r) {
    for (int c = 0; c < cols; ++c) {
      h.at(r, c) = b.at(r, c);
    }
  }
  return h;
}

IntMatrix lll_reduce_rows(const IntMatrix& input) {
  const int m = input.rows();
  const int n = input.cols();
  if (m <= 1) {
    return input;
  }
  // Integral LLL with exact arithmetic: d[i] is the Gram determinant of the
  // first i vectors and lam[i][j] = d[j] * mu[i][j] (1-based indices).
  std::vector<std::vector<Int>> b(m + 1, std::vector<Int>(n));
  for (int i = 1; i <= m; ++i) {
    for (int c = 0; c < n; ++c) {
      b[i][c] = input.at(i - 1, c);
    }
  }
  auto dot = [&](int i, int j) {
    Int s = 0;
    for (int c = 0; c < n; ++c) {
      s += b[i][c] * b[j][c];
    }
    return s;
  };
  std::vector<Int> d(m + 1);
  std::vector<std::vector<Int>> lam(m + 1, std::vector<Int>(m + 1, Int(0)));
  d[0] = 1;
  d[1] = dot(1, 1);

  auto red = [&](int k, int l) {
    // |lam[k][l]| <= d[l]/2 afterwards.
    Int two_lam = 2 * lam[k][l];
    if (two_lam > d[l] || -two_lam > d[l]) {
      Int q = (2 * lam[k][l] + d[l]) / (2 * d[l]);
      if ((2 * lam[k][l] + d[l]) % (2 * d[l]) != 0
          && (2 * lam[k][l] + d[l]) < 0) {
        q -= 1;  // floor for negatives
      }
      for (int c = 0; c < n; ++c) {
        b[k][c] -= q * b[l][c];
      }
      lam[k][l] -= q * d[l];
      for (int i = 1; i < l; ++i) {
        lam[k][i] -= q * lam[l][i];
      }
    }
  };

  int k = 2, kmax = 1;
  while (k <= m) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        Int u = dot(k, j);
        for (int i = 1; i < j; ++i) {
          u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        }
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
        }
      }
    }
    for (;;) {
      red(k, k - 1);
      if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1]
                                    - 4 * lam[k][k - 1] * lam[k][k - 1]) {
        // Lovasz condition fails: swap b_k and b_{k-1}.
        std::swap(b[k], b[k - 1]);
        for (int j = 1; j <= k - 2; ++j) {
          std::swap(lam[k][j], lam[k - 1][j]);
        }
        Int lambda = lam[k][k - 1];
        Int bb = (d[k - 2] * d[k] + lambda * lambda) / d[k - 1];
        for (int i = k + 1; i <= kmax; ++i) {
          Int t = lam[i][k];
          lam[i][k] = (d[k] * lam[i][k - 1] - lambda * t) / d[k - 1];
          lam[i][k - 1] = (bb * t + lambda * lam[i][k]) / d[k];
        }
        d[k - 1] = bb;
        k = std::max(2, k - 1);
      } else {
        for (int l = k - 2; l >= 1; --l) {
          red(k, l);
        }
        ++k;
        break;
      }
    }
  }
  IntMatrix out(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int c = 0; c < n; ++c) {
      out.at(i - 1, c) = std::move(b[i][c]);
    }
  }
  return out;
}

namespace {

// Column echelon reduction m -> m * w with w unimodular; returns the number
// of pivot columns. Pivot columns come first, in increasing pivot-row order;
// the remaining columns of m * w are zero.
int column_echelon(IntMatrix& m, IntMatrix& w) {
  const int rows = m.rows(), cols = m.cols();
  int next = 0;  // next pivot column slot
  for (int r = 0; r < rows && next < cols; ++r) {
    for (;;) {
      int pivot = -1;
      for (int c = next; c < cols; ++c) {
        if (m.at(r, c) != 0
            && (pivot < 0 || int_abs(m.at(r, c)) < int_abs(m.at(r, pivot)))) {
          pivot = c;
        }
      }
      if (pivot < 0) {
        break;  // row r is zero on active columns
      }
      bool others = false;
      for (int c = next; c < cols; ++c) {
        if (c == pivot || m.at(r, c) == 0) continue;
        Int q = m.at(r, c) / m.at(r, pivot);
        if (q != 0) {
          for (int j = 0; j < rows; ++j) {
            m.at(j, c) -= q * m.at(j, pivot);
          }
          for (int j = 0; j < cols; ++j) {
            w.at(j, c) -= q * w.at(j, pivot);
          }
        }
        if (m.at(r, c) != 0) {
          others = true;
        }
      }
      if (!others) {
        if (pivot != next) {
          for (int j = 0; j < rows; ++j) {
            std::swap(m.at(j, pivot), m.at(j, next));
          }
          for (int j = 0; j < cols; ++j) {
            std::swap(w.at(j, pivot), w.at(j, next));
          }
        }
        ++next;
        break;
      }
    }
  }
  return next;
}

}  // namespace

IntMatrix kernel_basis_raw(const IntMatrix& input) {
  IntMatrix m = input;
  IntMatrix w = IntMatrix::identity(m.cols());
  int pivots = column_echelon(m, w);
  const int k = m.cols() - pivots;
  IntMatrix raw(input.cols(), k);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < input.cols(); ++r) {
      raw.at(r, c) = w.at(r, pivots + c);
    }
  }
  return raw;
}

IntMatrix kernel_basis(const IntMatrix& input) {
  // Canonicalize: the returned basis is the HNF of the kernel lattice, so it
  // depends only on the lattice itself.
  IntMatrix h = rowspace_hnf(kernel_basis_raw(input).transposed());
  return h.transposed();
}

IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& a) {
  if (k.rows() != a.rows()) {
    throw std::invalid_argument("solve_in_lattice dimension mismatch");
  }
  IntMatrix h = k;
  IntMatrix w = IntMatrix::identity(k.cols());
  int pivots = column_echelon(h, w);
  // Pivot row of each pivot column.
  std::vector<int> prow(pivots);
  {
    int r = 0;
    for (int c = 0; c < pivots; ++c) {
      while (r < h.rows() && h.at(r, c) == 0) {
        ++r;
      }
      if (r >= h.rows()) {
        throw std::logic_error("echelon bookkeeping failed");
      }
      prow[c] = r;
    }
  }

  IntMatrix cmat(k.cols(), a.cols());
  std::vector<Int> residual(k.rows());
  for (int j = 0; j < a.cols(); ++j) {
    for (int r = 0; r < k.rows(); ++r) {
      residual[r] = a.at(r, j);
    }
    std::vector<Int> y(k.cols(), Int(0));
    for (int c = 0; c < pivots; ++c) {
      const Int& piv = h.at(prow[c], c);
      const Int& val = residual[prow[c]];
      if (val % piv != 0) {
        throw NotInLattice("column " + std::to_string(j)
                           + " is not in the lattice");
      }
      Int q = val / piv;
      if (q != 0) {
        for (int r = prow[c]; r < k.rows(); ++r) {
          residual[r] -= q * h.at(r, c);
        }
      }
      y[c] = std::move(q);
    }
    for (int r = 0; r < k.rows(); ++r) {
      if (residual[r] != 0) {
        throw NotInLattice("column " + std::to_string(j)
                           + " is not in the lattice");
      }
    }
    // c = w * y (only the pivot coordinates of y can be nonzero).
    for (int r = 0; r < k.cols(); ++r) {
      Int s = 0;
      for (int c = 0; c < pivots; ++c) {
        if (y[c] != 0) {
          s += w.at(r, c) * y[c];
        }
      }
      cmat.at(r, j) = std::move(s);
    }
  }
  return cmat;
}

FinAbGroup homology_from_matrices(const IntMatrix& m_out,
                                  const IntMatrix& m_in) {
  if (m_out.cols() != m_in.rows()) {
    throw NotAComplex("boundary dimensions do not compose");
  }
  if (!(m_out * m_in).is_zero()) {
    throw NotAComplex("composition of boundaries is nonzero");
  }
  IntMatrix k = kernel_basis(m_out);
  IntMatrix c = solve_in_lattice(k, m_in);
  SmithResult snf = smith_normal_form(c);
  int nonzero = 0;
  std::vector<Int> chain;
  for (const Int& d : snf.diag) {
    if (d != 0) {
      ++nonzero;
      if (d >= 2) {
        chain.push_back(d);
      }
    }
  }
  return FinAbGroup::from_chain(Int(k.cols() - nonzero), chain);
}

}  // namespace sgh
