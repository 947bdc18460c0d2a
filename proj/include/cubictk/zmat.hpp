#pragma once
// dense integer matrix algebra: Hermite and Smith normal forms, kernels,
// determinants. sizes here stay small (a few hundred rows at most) so the
// implementations are classical elimination with full reduction after each
// pivot to keep entries from exploding.

#include "cubictk/rat.hpp"

namespace ctk {

using ZMat = std::vector<std::vector<Int>>;

inline size_t nrows(const ZMat& m) { return m.size(); }
inline size_t ncols(const ZMat& m) { return m.empty() ? 0 : m[0].size(); }

ZMat zmat_identity(size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
std::vector<Int> zmat_apply(const ZMat& m, const std::vector<Int>& v);  // m * v
bool zmat_is_zero(const ZMat& m);

// row-style Hermite normal form: returns H with the same row span as m,
// in row echelon form with positive pivots and entries above each pivot
// reduced into [0, pivot). zero rows are dropped.
ZMat hnf(const ZMat& m);

// HNF of the lattice spanned by the rows of m together with mod * I.
// used for ideal lattices where a known multiple of the index keeps
// all intermediate entries bounded. result is square ncols x ncols.
ZMat hnf_mod(const ZMat& m, const Int& mod);

// solves x * H = v over the integers for H a square upper triangular HNF
// basis (rows); returns false if v is not in the row lattice.
bool hnf_member(const ZMat& h, const std::vector<Int>& v, std::vector<Int>* coeffs = nullptr);

// determinant by fraction free Gaussian elimination (Bareiss)
Int zmat_det(const ZMat& m);

// Smith normal form of m. returns the invariant factors d1 | d2 | ... (only
// the nonzero ones) and, optionally, the unimodular column transform V with
// row_span(m * V) diagonal: the class of a row vector w in Z^n / row_span(m)
// is read off from w * V componentwise mod the diagonal entries.
struct SnfResult {
  std::vector<Int> diag;   // nonzero invariant factors, d1 | d2 | ...
  ZMat V;                  // n x n unimodular, columns ordered as diag then free
  ZMat Vinv;               // inverse transform, rows lift quotient coordinates
  size_t rank = 0;
};
SnfResult snf(const ZMat& m, bool want_transform);

// basis for the right kernel {x : m x = 0}, as rows of the result
ZMat zmat_right_kernel(const ZMat& m);

std::string zmat_str(const ZMat& m);  // debugging aid

}  // namespace ctk
