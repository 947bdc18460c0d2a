#include "cubictk/zmat.hpp"

#include <algorithm>
#include <sstream>

namespace ctk {

ZMat zmat_identity(size_t n) {
  ZMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  size_t n = nrows(a), k = ncols(a), mm = ncols(b);
  if (k != nrows(b)) throw input_error("zmat_mul: shape mismatch");
  ZMat c(n, std::vector<Int>(mm, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < mm; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

std::vector<Int> zmat_apply(const ZMat& m, const std::vector<Int>& v) {
  if (ncols(m) != v.size()) throw input_error("zmat_apply: shape mismatch");
  std::vector<Int> r(nrows(m), 0);
  for (size_t i = 0; i < nrows(m); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

bool zmat_is_zero(const ZMat& m) {
  for (auto& r : m) for (auto& x : r) if (x != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hermite form

ZMat hnf(const ZMat& m_in) {
  ZMat m = m_in;
  size_t R = nrows(m), C = ncols(m);
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    // find a row at or below `row` with nonzero entry in this column,
    // preferring the smallest absolute value to slow coefficient growth
    size_t best = R;
    for (size_t i = row; i < R; ++i) {
      if (m[i][col] == 0) continue;
      if (best == R || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == R) continue;
    std::swap(m[row], m[best]);
    // euclid out all entries below
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = row + 1; i < R; ++i) {
        if (m[i][col] == 0) continue;
        Int q = fdiv(m[i][col], m[row][col]);
        if (q != 0)
          for (size_t j = col; j < C; ++j) m[i][j] -= q * m[row][j];
        if (m[i][col] != 0) {
          // remainder smaller than pivot; swap up and continue
          std::swap(m[row], m[i]);
          again = true;
        }
      }
    }
    if (m[row][col] < 0)
      for (size_t j = col; j < C; ++j) m[row][j] = -m[row][j];
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < row; ++i) {
      Int q = fdiv(m[i][col], m[row][col]);
      if (q != 0)
        for (size_t j = 0; j < C; ++j) m[i][j] -= q * m[row][j];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

ZMat hnf_mod(const ZMat& m_in, const Int& mod) {
  if (mod <= 0) throw input_error("hnf_mod: modulus must be positive");
  size_t C = ncols(m_in);
  ZMat m = m_in;
  for (auto& r : m) for (auto& x : r) x = fmod(x, mod);
  for (size_t i = 0; i < C; ++i) {
    std::vector<Int> e(C, 0);
    e[i] = mod;
    m.push_back(std::move(e));
  }
  // same elimination as hnf(), except entries are reduced into [0, mod)
  // after every row operation. the mod*e_j row for a column j sits
  // untouched below the frontier until column j is processed, so reducing
  // an entry in column j is an ordinary row operation against it and the
  // row lattice never changes. this keeps all entries single-limb sized
  // where the plain routine can blow up to thousands of bits.
  size_t R = nrows(m);
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t best = R;
    for (size_t i = row; i < R; ++i) {
      if (m[i][col] == 0) continue;
      if (best == R || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == R) continue;
    std::swap(m[row], m[best]);
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = row + 1; i < R; ++i) {
        if (m[i][col] == 0) continue;
        Int q = fdiv(m[i][col], m[row][col]);
        if (q != 0)
          for (size_t j = col; j < C; ++j) {
            m[i][j] -= q * m[row][j];
            if (j > col) m[i][j] = fmod(m[i][j], mod);
          }
        if (m[i][col] != 0) {
          std::swap(m[row], m[i]);
          again = true;
        }
      }
    }
    if (m[row][col] < 0)
      for (size_t j = col; j < C; ++j) m[row][j] = -m[row][j];
    for (size_t i = 0; i < row; ++i) {
      Int q = fdiv(m[i][col], m[row][col]);
      if (q != 0)
        for (size_t j = 0; j < C; ++j) {
          m[i][j] -= q * m[row][j];
          if (j > col) m[i][j] = fmod(m[i][j], mod);
        }
    }
    ++row;
  }
  m.resize(row);
  if (nrows(m) != C) throw math_error("hnf_mod: unexpected rank deficiency");
  return m;
}

bool hnf_member(const ZMat& h, const std::vector<Int>& v, std::vector<Int>* coeffs) {
  // h rows are echelon; locate pivot columns
  size_t R = nrows(h), C = ncols(h);
  if (v.size() != C) throw input_error("hnf_member: shape mismatch");
  std::vector<Int> rem = v, cf(R, 0);
  size_t row = 0;
  for (size_t col = 0; col < C; ++col) {
    if (row < R && h[row][col] != 0) {
      Int q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[col].get_mpz_t(), h[row][col].get_mpz_t());
      if (r != 0) return false;
      if (q != 0)
        for (size_t j = col; j < C; ++j) rem[j] -= q * h[row][j];
      cf[row] = q;
      ++row;
    } else if (rem[col] != 0) {
      return false;
    }
  }
  if (coeffs) *coeffs = cf;
  return true;
}

Int zmat_det(const ZMat& m_in) {
  size_t n = nrows(m_in);
  if (n != ncols(m_in)) throw input_error("zmat_det: not square");
  if (n == 0) return 1;
  ZMat a = m_in;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Smith form

namespace {

struct SnfWork {
  ZMat a;
  ZMat V;     // accumulated column ops
  ZMat Vinv;  // inverse, maintained by the mirrored row ops
  bool track;
  size_t R, C;

  void col_sub(size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < R; ++i) a[i][dst] -= q * a[i][src];
    if (track) {
      for (size_t i = 0; i < C; ++i) V[i][dst] -= q * V[i][src];
      // (I - q e_src e_dst^T)^{-1} = I + q e_src e_dst^T acting on the left
      for (size_t j = 0; j < C; ++j) Vinv[src][j] += q * Vinv[dst][j];
    }
  }
  void col_swap(size_t x, size_t y) {
    for (size_t i = 0; i < R; ++i) std::swap(a[i][x], a[i][y]);
    if (track) {
      for (size_t i = 0; i < C; ++i) std::swap(V[i][x], V[i][y]);
      std::swap(Vinv[x], Vinv[y]);
    }
  }
  void col_neg(size_t x) {
    for (size_t i = 0; i < R; ++i) a[i][x] = -a[i][x];
    if (track) {
      for (size_t i = 0; i < C; ++i) V[i][x] = -V[i][x];
      for (size_t j = 0; j < C; ++j) Vinv[x][j] = -Vinv[x][j];
    }
  }
  void row_sub(size_t dst, size_t src, const Int& q) {
    for (size_t j = 0; j < C; ++j) a[dst][j] -= q * a[src][j];
  }
};

}  // namespace

SnfResult snf(const ZMat& m_in, bool want_transform) {
  SnfWork w;
  w.a = m_in;
  w.R = nrows(m_in);
  w.C = ncols(m_in);
  w.track = want_transform;
  if (w.track) { w.V = zmat_identity(w.C); w.Vinv = zmat_identity(w.C); }

  size_t n = std::min(w.R, w.C);
  size_t t = 0;
  for (; t < n; ++t) {
    // find smallest nonzero entry in the remaining block to use as pivot
    size_t pi = w.R, pj = 0;
    for (size_t i = t; i < w.R; ++i)
      for (size_t j = t; j < w.C; ++j) {
        if (w.a[i][j] == 0) continue;
        if (pi == w.R || mpz_cmpabs(w.a[i][j].get_mpz_t(), w.a[pi][pj].get_mpz_t()) < 0) { pi = i; pj = j; }
      }
    if (pi == w.R) break;  // block is zero
    if (pi != t) std::swap(w.a[t], w.a[pi]);
    if (pj != t) w.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < w.R; ++i)
        if (w.a[i][t] != 0) {
          Int q = fdiv(w.a[i][t], w.a[t][t]);
          w.row_sub(i, t, q);
          if (w.a[i][t] != 0) { std::swap(w.a[t], w.a[i]); clean = false; }
        }
      for (size_t j = t + 1; j < w.C; ++j)
        if (w.a[t][j] != 0) {
          Int q = fdiv(w.a[t][j], w.a[t][t]);
          w.col_sub(j, t, q);
          if (w.a[t][j] != 0) { w.col_swap(t, j); clean = false; }
        }
      if (!clean) continue;
      // pivot divides everything in its row and column now; enforce
      // divisibility of the rest of the block
      bool fixed = false;
      for (size_t i = t + 1; i < w.R && !fixed; ++i)
        for (size_t j = t + 1; j < w.C && !fixed; ++j)
          if (fmod(w.a[i][j], w.a[t][t]) != 0) {
            // add row i to row t, restart pivot cleanup
            w.row_sub(t, i, Int(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.a[t][t] < 0) w.col_neg(t);
  }

  SnfResult res;
  res.rank = t;
  for (size_t i = 0; i < t; ++i) res.diag.push_back(w.a[i][i]);
  if (want_transform) { res.V = std::move(w.V); res.Vinv = std::move(w.Vinv); }
  return res;
}

ZMat zmat_right_kernel(const ZMat& m) {
  // column-reduce [m; I] stacked: work on the transpose with row HNF and
  // read off the rows of the transform that map to zero. simpler: run HNF on
  // the transpose augmented with identity.
  size_t R = nrows(m), C = ncols(m);
  ZMat aug(C, std::vector<Int>(R + C, 0));
  for (size_t i = 0; i < C; ++i) {
    for (size_t j = 0; j < R; ++j) aug[i][j] = m[j][i];
    aug[i][R + i] = 1;
  }
  ZMat h = hnf(aug);
  // rows whose first R entries vanish give kernel vectors in the last C cols
  ZMat ker;
  for (auto& row : h) {
    bool zero = true;
    for (size_t j = 0; j < R; ++j)
      if (row[j] != 0) { zero = false; break; }
    if (zero) ker.emplace_back(row.begin() + R, row.end());
  }
  return ker;
}

std::string zmat_str(const ZMat& m) {
  std::ostringstream os;
  for (auto& r : m) {
    for (size_t j = 0; j < r.size(); ++j) os << (j ? " " : "[") << r[j].get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace ctk
