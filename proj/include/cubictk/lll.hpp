#pragma once
// exact rational LLL on a lattice given by an integer Gram matrix. basis
// vectors are tracked abstractly through a transform matrix, so callers can
// reduce ideal lattices under the trace pairing without ever leaving Z.

#include "cubictk/zmat.hpp"

namespace ctk {

struct LllResult {
  ZMat basis;   // reduced basis rows, coordinates in the caller's basis
  ZMat gram;    // gram matrix of the reduced basis
};

// rows of `basis` span the lattice; `gram0` is the gram matrix of the
// *ambient* coordinates, so gram(b_i, b_j) = b_i gram0 b_j^T. gram0 must be
// symmetric positive definite. delta = 99/100 by default.
LllResult lll_reduce(const ZMat& basis, const ZMat& gram0);

// gram matrix of given rows under gram0
ZMat gram_of(const ZMat& basis, const ZMat& gram0);

}  // namespace ctk
