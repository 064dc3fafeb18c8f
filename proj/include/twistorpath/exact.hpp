#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "twistorpath/matrix.hpp"
#include "twistorpath/numeric.hpp"

namespace twistorpath {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

struct HnfResult {
  IMat h;                         // row echelon, pivots positive, entries above reduced
  IMat u;                         // unimodular, u * a = h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Row-style HNF.  Pivots are positive, entries above a pivot lie in
/// [0, pivot), zero rows are collected at the bottom.
inline HnfResult hnf(const IMat& a) {
  HnfResult res;
  res.h = a;
  res.u = IMat::identity(a.rows());
  IMat& h = res.h;
  IMat& u = res.u;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Euclidean reduction in this column, below `row`.
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = row; i < a.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (best == a.rows() || abs_int(h(i, col)) < abs_int(h(best, col))) best = i;
      }
      if (best == a.rows()) break;  // column clear
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool reduced = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q = h(i, col) / h(row, col);  // truncated: shrinks |remainder|
        h.add_row(i, row, -q);
        u.add_row(i, row, -q);
        if (h(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.scale_row(row, Int(-1));
      u.scale_row(row, Int(-1));
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      if (q != 0) {
        h.add_row(i, row, -q);
        u.add_row(i, row, -q);
      }
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

/// Basis (as rows, HNF-reduced) of the saturated lattice {x : x * a = 0}.
/// The integer kernel of a matrix is saturated automatically.
inline IMat left_integer_kernel(const IMat& a) {
  HnfResult r = hnf(a);
  std::size_t null_dim = a.rows() - r.rank;
  IMat ker(null_dim, a.rows());
  for (std::size_t i = 0; i < null_dim; ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) ker(i, j) = r.u(r.rank + i, j);
  HnfResult canon = hnf(ker);
  IMat out(null_dim, a.rows());
  for (std::size_t i = 0; i < null_dim; ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) out(i, j) = canon.h(i, j);
  return out;
}

/// Kernel of `a` acting on column vectors: basis rows x with a * x^T = 0.
inline IMat integer_kernel(const IMat& a) { return left_integer_kernel(a.transpose()); }

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

struct SnfResult {
  IMat d;  // diagonal, d_i >= 0, d_1 | d_2 | ...
  IMat u;  // unimodular, u * a * v = d
  IMat v;
};

inline SnfResult smith_normal_form(const IMat& a) {
  SnfResult res;
  res.d = a;
  res.u = IMat::identity(a.rows());
  res.v = IMat::identity(a.cols());
  IMat& d = res.d;
  IMat& u = res.u;
  IMat& v = res.v;
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: entry of smallest absolute value in the remaining block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        if (pi == m || abs_int(d(i, j)) < abs_int(d(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // remaining block is zero
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) {
          d.swap_rows(i, t);
          u.swap_rows(i, t);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) {
          d.swap_cols(j, t);
          v.swap_cols(j, t);
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot must divide the remaining block for the divisor chain.
        for (std::size_t i = t + 1; i < m && !dirty; ++i)
          for (std::size_t j = t + 1; j < n && !dirty; ++j)
            if (d(i, j) % d(t, t) != 0) {
              d.add_row(t, i, Int(1));
              u.add_row(t, i, Int(1));
              dirty = true;
            }
      }
    }
    if (d(t, t) < 0) {
      d.scale_row(t, Int(-1));
      u.scale_row(t, Int(-1));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

/// Bareiss fraction-free determinant.
inline Int det(const IMat& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IMat m = a;
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

inline Rat det(const RMat& a) {
  const std::size_t n = a.rows();
  RMat m = a;
  Rat result(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (m(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) return Rat(0);
    if (pivot != k) {
      m.swap_rows(k, pivot);
      result = -result;
    }
    result *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / m(k, k);
      m.add_row(i, k, -f);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rational elimination: rank, solve, kernel, inverse
// ---------------------------------------------------------------------------

inline std::size_t rat_rank(const RMat& a) {
  RMat m = a;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    for (std::size_t i = rank; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      m.add_row(i, rank, -m(i, col) / m(rank, col));
    }
    ++rank;
  }
  return rank;
}

/// Solve c * basis = target for the row vector c; nullopt if inconsistent.
inline std::optional<RVec> solve_left(const RMat& basis, const RVec& target) {
  const std::size_t m = basis.rows(), n = basis.cols();
  // Augmented columns: [basis^T | target^T].
  RMat aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = basis(j, i);
    aug(i, m) = target[i];
  }
  std::vector<std::size_t> pivot_of_col(m, n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = row; i < n; ++i)
      if (aug(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) continue;
    aug.swap_rows(row, pivot);
    Rat inv = Rat(1) / aug(row, col);
    aug.scale_row(row, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      aug.add_row(i, row, -aug(i, col));
    }
    pivot_of_col[col] = row;
    ++row;
  }
  // Consistency: no nonzero RHS in a zero row.
  for (std::size_t i = row; i < n; ++i)
    if (aug(i, m) != 0) return std::nullopt;
  RVec c(m, Rat(0));
  for (std::size_t col = 0; col < m; ++col)
    if (pivot_of_col[col] != n) c[col] = aug(pivot_of_col[col], m);
  // Non-pivot columns are free; zero is a valid choice but the combination
  // must still reproduce the target exactly.
  RVec check = vec_mat(c, basis);
  for (std::size_t i = 0; i < n; ++i)
    if (check[i] != target[i]) return std::nullopt;
  return c;
}

/// Rows spanning {x : x * a = 0} over the rationals.
inline RMat rat_left_kernel(const RMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Reduce a^T; free columns of the transposed problem give the kernel.
  RMat t(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) t(i, j) = a(j, i);
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = row; i < n; ++i)
      if (t(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) continue;
    t.swap_rows(row, pivot);
    t.scale_row(row, Rat(1) / t(row, col));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || t(i, col) == 0) continue;
      t.add_row(i, row, -t(i, col));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  RMat ker(m - pivot_col.size(), m);
  std::size_t k = 0;
  for (std::size_t col = 0; col < m; ++col) {
    if (is_pivot[col]) continue;
    ker(k, col) = Rat(1);
    for (std::size_t p = 0; p < pivot_col.size(); ++p) ker(k, pivot_col[p]) = -t(p, col);
    ++k;
  }
  return ker;
}

inline RMat rat_inverse(const RMat& a) {
  const std::size_t n = a.rows();
  RMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rat(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = col; i < n; ++i)
      if (aug(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) throw std::domain_error("rat_inverse: singular matrix");
    aug.swap_rows(col, pivot);
    aug.scale_row(col, Rat(1) / aug(col, col));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      aug.add_row(i, col, -aug(i, col));
    }
  }
  RMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Congruence diagonalization
// ---------------------------------------------------------------------------

struct Diagonalization {
  RMat basis;  // rows b_i with basis * g * basis^T diagonal
  RVec diag;
};

/// Symmetric Gaussian reduction over the rationals.  Handles isotropic
/// diagonal entries by the usual add-a-row trick (characteristic zero).
inline Diagonalization congruence_diagonalize(const RMat& g) {
  const std::size_t n = g.rows();
  RMat a = g;
  RMat b = RMat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      std::size_t j = n;
      for (std::size_t t = i + 1; t < n; ++t)
        if (a(i, t) != 0) {
          j = t;
          break;
        }
      if (j == n) continue;  // zero row in the remaining block
      if (a(j, j) != 0) {
        a.swap_rows(i, j);
        a.swap_cols(i, j);
        b.swap_rows(i, j);
      } else {
        a.add_row(i, j, Rat(1));
        a.add_col(i, j, Rat(1));
        b.add_row(i, j, Rat(1));
      }
    }
    if (a(i, i) == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(j, i) == 0) continue;
      Rat f = -a(j, i) / a(i, i);
      a.add_row(j, i, f);
      a.add_col(j, i, f);
      b.add_row(j, i, f);
    }
  }
  Diagonalization out;
  out.basis = b;
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a(i, i);
  return out;
}

/// Clear denominators of a rational row vector: the primitive integer vector
/// with the same direction and sign.
inline IVec primitive_integer_vector(const RVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = lcm / gcd_int(lcm, denominator(x)) * denominator(x);
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  Int g = content(out);
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

inline RVec to_rational(const IVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline RMat to_rational(const IMat& m) { return m.cast<Rat>(); }

}  // namespace twistorpath
