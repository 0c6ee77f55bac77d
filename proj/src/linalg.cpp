#include "sheafbn/linalg.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "sheafbn/errors.hpp"

namespace sheafbn {
namespace {

IntMat to_int(const Matrix& m) {
  IntMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      require(is_integral(m(i, j)), "NonIntegralEntry",
              "expected integral entry");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

Matrix from_int(const RingSpec& ring, const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return Matrix::from_raw(ring, std::move(out));
}

void int_row_addmul(IntMat& m, Index dst, Index src, const Int& c) {
  if (c == 0) return;
  for (Index j = 0; j < m.cols(); ++j)
    mpz_addmul(m(dst, j).get_mpz_t(), c.get_mpz_t(), m(src, j).get_mpz_t());
}

void int_col_addmul(IntMat& m, Index dst, Index src, const Int& c) {
  if (c == 0) return;
  for (Index i = 0; i < m.rows(); ++i)
    mpz_addmul(m(i, dst).get_mpz_t(), c.get_mpz_t(), m(i, src).get_mpz_t());
}

// ---- Smith normal form over Z ----------------------------------------------

struct IntSnf {
  std::vector<Int> diag;  // divisibility chain, nonnegative, zeros trailing
  Index rank = 0;
  IntMat u, v, w;  // u*a*v = s and w = v^{-1}; sized only when tracked
};

// Classical reduction with minimal-absolute-value pivoting: repeatedly move
// the smallest nonzero entry of the working submatrix into the pivot slot,
// reduce its row and column by nearest division, and repair the divisibility
// chain by folding offending rows into the pivot row.
IntSnf snf_int(IntMat a, bool tu, bool tv, bool tw) {
  const Index m = a.rows();
  const Index n = a.cols();
  IntSnf r;
  if (tu) r.u = IntMat::Identity(m, m);
  if (tv) r.v = IntMat::Identity(n, n);
  if (tw) r.w = IntMat::Identity(n, n);

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if (tu) r.u.row(i).swap(r.u.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    if (tv) r.v.col(i).swap(r.v.col(j));
    if (tw) r.w.row(i).swap(r.w.row(j));
  };
  auto row_addmul = [&](Index dst, Index src, const Int& c) {
    int_row_addmul(a, dst, src, c);
    if (tu) int_row_addmul(r.u, dst, src, c);
  };
  auto col_addmul = [&](Index dst, Index src, const Int& c) {
    int_col_addmul(a, dst, src, c);
    if (tv) int_col_addmul(r.v, dst, src, c);
    if (tw) int_row_addmul(r.w, src, dst, -c);
  };
  auto negate_row = [&](Index i) {
    for (Index j = 0; j < n; ++j) a(i, j) = -a(i, j);
    if (tu)
      for (Index j = 0; j < m; ++j) r.u(i, j) = -r.u(i, j);
  };

  const Index lim = std::min(m, n);
  Index t = 0;
  for (; t < lim; ++t) {
    Index pi = -1, pj = -1;
    Int best;
    for (Index i = t; i < m && best != 1; ++i)
      for (Index j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Int mag = abs(a(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
          if (best == 1) break;  // a unit pivot cannot be improved
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = div_nearest(a(i, t), a(t, t));
        if (q != 0) row_addmul(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = div_nearest(a(t, j), a(t, t));
        if (q != 0) col_addmul(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        Index bi = t, bj = t;
        Int b = abs(a(t, t));
        for (Index i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < b) {
            b = abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (Index j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < b) {
            b = abs(a(t, j));
            bi = t;
            bj = j;
          }
        if (bi != t)
          swap_rows(t, bi);
        else if (bj != t)
          swap_cols(t, bj);
        continue;
      }
      const Int d = a(t, t);
      if (d == 1 || d == -1) break;  // units divide the whole block
      Index offender = -1;
      for (Index i = t + 1; i < m && offender < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (a(i, j) % d != 0) {
            offender = i;
            break;
          }
      if (offender < 0) break;
      row_addmul(t, offender, 1);
    }
    if (a(t, t) < 0) negate_row(t);
  }

  r.diag.resize(lim);
  for (Index k = 0; k < lim; ++k) {
    r.diag[k] = a(k, k);
    if (r.diag[k] != 0) ++r.rank;
  }
  return r;
}

// ---- field elimination ------------------------------------------------------

// Scalar helpers for exact Gauss-Jordan over Q or over Z/p. Residues stay in
// canonical form [0, p) after every operation.
struct FieldOps {
  RingSpec ring;

  explicit FieldOps(const RingSpec& r) : ring(r) {
    require(r.is_field(), "NonFieldRing", "field arithmetic over " + r.name());
  }

  Rat norm(const Rat& x) const {
    if (ring.kind() != RingSpec::Kind::prime_field) return x;
    return Rat(mod_reduce(x.get_num(), ring.modulus()));
  }

  Rat inv(const Rat& x) const {
    if (ring.kind() != RingSpec::Kind::prime_field) return 1 / x;
    Int out;
    int ok = mpz_invert(out.get_mpz_t(), x.get_num().get_mpz_t(),
                        ring.modulus().get_mpz_t());
    require(ok != 0, "NotInvertible", "residue has no inverse");
    return Rat(out);
  }
};

struct Rref {
  RatMat m;
  std::vector<Index> pivots;  // pivot column per pivot row
  RatMat t;                   // t * original = m, when tracked
};

Rref rref(RatMat a, const FieldOps& ops, bool want_t) {
  const Index rows = a.rows();
  const Index n = a.cols();
  Rref out;
  if (want_t) out.t = RatMat::Identity(rows, rows);
  Index r = 0;
  for (Index j = 0; j < n && r < rows; ++j) {
    Index pi = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, j) != 0) {
        pi = i;
        break;
      }
    if (pi < 0) continue;
    if (pi != r) {
      a.row(r).swap(a.row(pi));
      if (want_t) out.t.row(r).swap(out.t.row(pi));
    }
    const Rat piv_inv = ops.inv(a(r, j));
    for (Index c = j; c < n; ++c) a(r, c) = ops.norm(a(r, c) * piv_inv);
    if (want_t)
      for (Index c = 0; c < rows; ++c)
        out.t(r, c) = ops.norm(out.t(r, c) * piv_inv);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, j) == 0) continue;
      const Rat f = a(i, j);
      for (Index c = j; c < n; ++c) a(i, c) = ops.norm(a(i, c) - f * a(r, c));
      if (want_t)
        for (Index c = 0; c < rows; ++c)
          out.t(i, c) = ops.norm(out.t(i, c) - f * out.t(r, c));
    }
    out.pivots.push_back(j);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

FieldOps elimination_ops(const RingSpec& ring) {
  // Z embeds in Q for rank purposes.
  if (ring.kind() == RingSpec::Kind::integers)
    return FieldOps(RingSpec::rationals());
  return FieldOps(ring);
}

std::vector<Int> torsion_from_diag(const std::vector<Int>& diag) {
  std::vector<Int> torsion;
  for (const Int& d : diag)
    if (d > 1) torsion.push_back(d);
  return torsion;
}

}  // namespace

SmithResult smith_normal_form(const Matrix& m) {
  const RingSpec& ring = m.ring();
  if (ring.kind() == RingSpec::Kind::integers) {
    IntSnf s = snf_int(to_int(m), true, true, false);
    IntMat diag = IntMat::Zero(m.rows(), m.cols());
    for (size_t k = 0; k < s.diag.size(); ++k)
      diag(static_cast<Index>(k), static_cast<Index>(k)) = s.diag[k];
    return SmithResult{from_int(ring, s.u), from_int(ring, diag),
                       from_int(ring, s.v)};
  }

  // Over a field: Gauss-Jordan to reduced echelon form, then column
  // operations to sweep the pivots into the identity block.
  const FieldOps ops(ring);
  Rref red = rref(m.raw(), ops, true);
  const Index rows = m.rows();
  const Index n = m.cols();
  const Index rk = static_cast<Index>(red.pivots.size());
  RatMat a = red.m;
  RatMat v = RatMat::Identity(n, n);
  std::vector<Index> pos(red.pivots.begin(), red.pivots.end());
  for (Index k = 0; k < rk; ++k) {
    const Index from = pos[k];
    if (from != k) {
      a.col(k).swap(a.col(from));
      v.col(k).swap(v.col(from));
      for (Index i = k + 1; i < rk; ++i)
        if (pos[i] == k) pos[i] = from;
    }
  }
  for (Index k = 0; k < rk; ++k)
    for (Index j = rk; j < n; ++j) {
      if (a(k, j) == 0) continue;
      const Rat f = a(k, j);
      for (Index i = 0; i < rows; ++i) a(i, j) = ops.norm(a(i, j) - f * a(i, k));
      for (Index i = 0; i < n; ++i) v(i, j) = ops.norm(v(i, j) - f * v(i, k));
    }
  return SmithResult{Matrix::from_raw(ring, std::move(red.t)),
                     Matrix::from_raw(ring, std::move(a)),
                     Matrix::from_raw(ring, std::move(v))};
}

Index rank(const Matrix& m) {
  const FieldOps ops = elimination_ops(m.ring());
  return static_cast<Index>(rref(m.raw(), ops, false).pivots.size());
}

Rat determinant(const Matrix& m) {
  require(m.is_square(), "DimensionMismatch", "determinant of non-square");
  const FieldOps ops = elimination_ops(m.ring());
  RatMat a = m.raw();
  const Index n = a.rows();
  Rat det = 1;
  for (Index j = 0; j < n; ++j) {
    Index pi = -1;
    for (Index i = j; i < n; ++i)
      if (a(i, j) != 0) {
        pi = i;
        break;
      }
    if (pi < 0) return Rat(0);
    if (pi != j) {
      a.row(j).swap(a.row(pi));
      det = -det;
    }
    det = ops.norm(det * a(j, j));
    const Rat piv_inv = ops.inv(a(j, j));
    for (Index i = j + 1; i < n; ++i) {
      if (a(i, j) == 0) continue;
      const Rat f = ops.norm(a(i, j) * piv_inv);
      for (Index c = j; c < n; ++c) a(i, c) = ops.norm(a(i, c) - f * a(j, c));
    }
  }
  return ops.norm(det);
}

bool is_invertible(const Matrix& m) {
  if (!m.is_square()) return false;
  const Rat d = determinant(m);
  if (m.ring().kind() == RingSpec::Kind::integers)
    return d == 1 || d == -1;
  return d != 0;
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), "NotInvertible", "non-square matrix");
  const Index n = m.rows();
  const FieldOps ops = elimination_ops(m.ring());
  RatMat wide(n, 2 * n);
  wide << m.raw(), RatMat::Identity(n, n);
  Rref red = rref(std::move(wide), ops, false);
  require(static_cast<Index>(red.pivots.size()) == n &&
              (n == 0 || red.pivots.back() == n - 1),
          "NotInvertible", "matrix is singular");
  RatMat inv = red.m.rightCols(n);
  if (m.ring().kind() == RingSpec::Kind::integers)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        require(is_integral(inv(i, j)), "NotInvertible",
                "inverse is not integral");
  return Matrix::from_raw(m.ring(), std::move(inv));
}

Matrix kernel_basis(const Matrix& m) {
  const Index n = m.cols();
  if (m.ring().kind() == RingSpec::Kind::integers) {
    IntSnf s = snf_int(to_int(m), false, true, false);
    return from_int(m.ring(), s.v.rightCols(n - s.rank));
  }
  const FieldOps ops(m.ring());
  Rref red = rref(m.raw(), ops, false);
  const Index rk = static_cast<Index>(red.pivots.size());
  std::vector<Index> free_cols;
  {
    size_t next = 0;
    for (Index j = 0; j < n; ++j) {
      if (next < red.pivots.size() && red.pivots[next] == j)
        ++next;
      else
        free_cols.push_back(j);
    }
  }
  RatMat basis = RatMat::Zero(n, n - rk);
  for (size_t c = 0; c < free_cols.size(); ++c) {
    const Index f = free_cols[c];
    basis(f, static_cast<Index>(c)) = 1;
    for (Index k = 0; k < rk; ++k)
      basis(red.pivots[k], static_cast<Index>(c)) = ops.norm(-red.m(k, f));
  }
  return Matrix::from_raw(m.ring(), std::move(basis));
}

Matrix column_space_basis(const Matrix& m) {
  require(m.ring().is_field(), "NonFieldRing",
          "column space basis needs a field");
  const FieldOps ops(m.ring());
  Rref red = rref(m.raw(), ops, false);
  RatMat basis(m.rows(), static_cast<Index>(red.pivots.size()));
  for (size_t k = 0; k < red.pivots.size(); ++k)
    basis.col(static_cast<Index>(k)) = m.raw().col(red.pivots[k]);
  return Matrix::from_raw(m.ring(), std::move(basis));
}

bool solve_exact(const Matrix& a, const Matrix& b, Matrix* x) {
  require(a.ring() == b.ring(), "RingMismatch", "solve ring mismatch");
  require(a.rows() == b.rows(), "DimensionMismatch", "solve shape mismatch");
  const FieldOps ops = elimination_ops(a.ring());
  Rref red = rref(a.raw(), ops, true);
  const Index rk = static_cast<Index>(red.pivots.size());
  RatMat tb(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Rat acc = 0;
      for (Index k = 0; k < a.rows(); ++k) acc += red.t(i, k) * b.raw()(k, j);
      tb(i, j) = ops.norm(acc);
    }
  for (Index i = rk; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      if (tb(i, j) != 0) return false;
  RatMat sol = RatMat::Zero(a.cols(), b.cols());
  for (Index k = 0; k < rk; ++k) sol.row(red.pivots[k]) = tb.row(k);
  if (a.ring().kind() == RingSpec::Kind::integers)
    for (Index i = 0; i < sol.rows(); ++i)
      for (Index j = 0; j < sol.cols(); ++j)
        if (!is_integral(sol(i, j))) return false;
  if (x) *x = Matrix::from_raw(a.ring(), std::move(sol));
  return true;
}

FpModule fp_module(const Matrix& presentation) {
  const Index ambient = presentation.rows();
  if (presentation.ring().is_field())
    return FpModule(presentation.ring(), ambient - rank(presentation), {});
  IntSnf s = snf_int(to_int(presentation), false, false, false);
  return FpModule(presentation.ring(), ambient - s.rank,
                  torsion_from_diag(s.diag));
}

FpModule subquotient(const Matrix& a, const Matrix& b) {
  require(a.ring() == b.ring(), "RingMismatch", "subquotient ring mismatch");
  require(a.cols() == b.rows(), "DimensionMismatch",
          "subquotient shape mismatch");
  const RingSpec& ring = a.ring();
  if (ring.is_field()) {
    require((a * b).is_zero(), "NotAComplex", "image not contained in kernel");
    const Index free = (a.cols() - rank(a)) - rank(b);
    return FpModule(ring, free, {});
  }
  IntSnf s = snf_int(to_int(a), false, false, true);
  const Index n = a.cols();
  const Index k = n - s.rank;
  IntMat y = s.w * to_int(b);
  for (Index i = 0; i < s.rank; ++i)
    for (Index j = 0; j < y.cols(); ++j)
      require(y(i, j) == 0, "NotAComplex", "image not contained in kernel");
  IntMat x = y.bottomRows(k);
  IntSnf s2 = snf_int(std::move(x), false, false, false);
  return FpModule(ring, k - s2.rank, torsion_from_diag(s2.diag));
}

}  // namespace sheafbn
