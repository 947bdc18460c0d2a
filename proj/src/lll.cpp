#include "cubictk/lll.hpp"

namespace ctk {

ZMat gram_of(const ZMat& basis, const ZMat& gram0) {
  size_t n = nrows(basis), d = ncols(basis);
  if (nrows(gram0) != d || ncols(gram0) != d) throw input_error("gram_of: shape mismatch");
  // t = basis * gram0
  ZMat t(n, std::vector<Int>(d, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (basis[i][k] == 0) continue;
      for (size_t j = 0; j < d; ++j) t[i][j] += basis[i][k] * gram0[k][j];
    }
  ZMat g(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < d; ++k) g[i][j] += t[i][k] * basis[j][k];
  return g;
}

// textbook LLL with exact rational Gram-Schmidt data recomputed
// incrementally. dimensions here are at most ~22 so this is plenty fast.
LllResult lll_reduce(const ZMat& basis_in, const ZMat& gram0) {
  ZMat b = basis_in;
  size_t n = nrows(b);
  if (n == 0) return {b, {}};
  ZMat g = gram_of(b, gram0);

  const Rat delta(99, 100);
  // mu[i][j] for j < i, B[i] = |b_i*|^2
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> B(n, Rat(0));

  auto recompute_gs = [&](size_t upto) {
    // recompute rows [0, upto] of mu and B from the integer gram matrix
    for (size_t i = 0; i <= upto; ++i) {
      for (size_t j = 0; j < i; ++j) {
        Rat s(g[i][j]);
        for (size_t k = 0; k < j; ++k) s -= mu[i][k] * mu[j][k] * B[k];
        if (B[j] == 0) throw math_error("lll: dependent basis rows");
        mu[i][j] = s / B[j];
      }
      Rat s(g[i][i]);
      for (size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * B[k];
      B[i] = s;
      if (B[i] <= 0) throw math_error("lll: gram not positive definite on basis");
    }
  };
  recompute_gs(n - 1);

  auto row_op = [&](size_t i, size_t j, const Int& q) {
    // b_i -= q b_j, update integer gram exactly
    if (q == 0) return;
    for (size_t k = 0; k < ncols(b); ++k) b[i][k] -= q * b[j][k];
    for (size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      g[i][k] -= q * g[j][k];
      g[k][i] = g[i][k];
    }
    // g_ii' = g_ii - 2 q g_ij' ... compute directly: (bi - q bj).(bi - q bj)
    // using updated cross terms is fiddly; recompute from old values:
    // new g_ii = old g_ii - 2 q old g_ij + q^2 g_jj, but g[i][j] was already
    // updated above, so track via formula with the updated value:
    // updated g[i][j] = old g_ij - q g_jj  =>  old g_ij = g[i][j] + q g_jj
    Int old_gij = g[i][j] + q * g[j][j];
    g[i][i] = g[i][i] - 2 * q * old_gij + q * q * g[j][j];
  };

  auto size_reduce = [&](size_t i, size_t j) {
    // make |mu_ij| <= 1/2
    Rat half(1, 2);
    Rat m = mu[i][j];
    if (m <= half && m >= -half) return;
    // nearest integer to m
    Int q = fdiv(m.get_num() * 2 + m.get_den(), m.get_den() * 2);
    row_op(i, j, q);
    for (size_t k = 0; k <= j; ++k) {
      if (k < j) mu[i][k] -= Rat(q) * mu[j][k];
    }
    mu[i][j] -= Rat(q);
  };

  size_t k = 1;
  while (k < n) {
    for (size_t j = k; j-- > 0;) size_reduce(k, j);
    // Lovasz condition
    Rat lhs = B[k];
    Rat rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(g[k], g[k - 1]);
      for (size_t i = 0; i < n; ++i) std::swap(g[i][k], g[i][k - 1]);
      recompute_gs(n - 1);
      if (k > 1) --k;
    }
  }
  return {b, g};
}

}  // namespace ctk
