#pragma once
// Teichmuller lifts, the linear and modified quadratic Stickelberger
// elements, their action on cyclotomic class groups, eigenspace splitting of
// the class group under the Galois action, and exact Gauss sum certificates.

#include "cubictk/classgroup.hpp"

namespace ctk {

// the unique (r-1)-st root of unity in Z_r congruent to a mod r, as an
// integer mod r^k, computed by iterating x -> x^r. throws if r | a.
Int teichmuller(long r, long a, long k);

// group ring element Sum_a coeff(a) sigma_a^{-1} over (Z/r)^*, with the
// coefficient expanded per target prime ell since theta2 has denominators
// that only clear ell-adically.
struct StickelbergerElt {
  enum Kind { theta1, theta2 };
  Kind kind = theta1;
  long r = 0;
  long p = 0;                    // theta2 only
  bool weak_hypothesis = false;  // theta2 accepted with r | p-1 but 2r not

  // coefficient of sigma_a^{-1} as an element of Z/ell^k
  Int coeff(long a, const Int& ell, long k) const;
};

StickelbergerElt theta1_build(long r);
// requires p = 1 mod 24 and r | p-1; the full hypothesis is p = 1 mod 24r
// and anything weaker sets weak_hypothesis
StickelbergerElt theta2_build(long r, long p);

// Sum_a coeff(a) sigma_a^{-1}(c), coefficients reduced per prime power
// component of the class group exponent and recombined by CRT
ClsVec apply_stickelberger(const StickelbergerElt& th, const ClsVec& c, const ClassGroup& cg);

// true when r divides the numerator of the Bernoulli number B_k
bool herbrand_test(long r, long k);

// ---------------------------------------------------------------------------
// eigenspace decomposition of the ell-part of the class group under sigma_a

struct EigenComponent {
  long j = 0;         // sigma_a acts on the component by the j-th power
                      // of the canonical order-(r-1) character value
  ClsVec generator;   // generator of the component
  Int order;          // component order ell^m
  Int theta_scalar;   // scalar action of the supplied element, mod order
};

struct EigenDecomp {
  Int ell;
  std::vector<EigenComponent> components;  // nonzero components only
};

// supported when the ell-part is cyclic (every case this library certifies);
// throws math_error otherwise. throws input_error when ell does not divide
// the group order.
EigenDecomp eigen_decompose(const ClassGroup& cg, const Int& ell, const StickelbergerElt& th);

// ---------------------------------------------------------------------------
// the ring Z[zeta_p] tensor Z[zeta_r], gcd(p, r) = 1, on the basis
// zeta_p^i zeta_r^j with i < p-1, j < r-1. isomorphic to Z[zeta_pr], which
// is where Gauss sums live before descending to Z[zeta_r].

struct TensorCyc {
  long p = 0, r = 0;
  std::vector<Int> c;  // (p-1)(r-1) coordinates, index i*(r-1)+j

  Int& at(long i, long j) { return c[(size_t)i * (r - 1) + j]; }
  const Int& at(long i, long j) const { return c[(size_t)i * (r - 1) + j]; }
  bool is_zero() const {
    for (auto& x : c) if (x != 0) return false;
    return true;
  }
  bool operator==(const TensorCyc& o) const { return p == o.p && r == o.r && c == o.c; }
};

TensorCyc tc_zero(long p, long r);
TensorCyc tc_from_long(long p, long r, long v);
TensorCyc tc_add(const TensorCyc& a, const TensorCyc& b);
TensorCyc tc_sub(const TensorCyc& a, const TensorCyc& b);
TensorCyc tc_mul(const TensorCyc& a, const TensorCyc& b);
TensorCyc tc_pow(const TensorCyc& a, unsigned long e);

// an element with no zeta_p contribution lives in Z[zeta_r]; throws
// math_error when coordinates outside that span are nonzero
CycInt tc_descend_r(const TensorCyc& a);

// tau(psi_u) = Sum_{j in (Z/p)^*} psi_u(j) zeta_p^j where psi_u(g^t) =
// zeta_r^{ut} for g the smallest primitive root mod p. u = 0 gives -1.
TensorCyc gauss_sum(long p, long r, long u);

// exact verification that tau(psi) tau(psi-bar) psi(-1) = p, plus the prime
// factorization of the descended power tau^r over Z[zeta_r]
struct GaussReport {
  long p = 0, r = 0;
  bool product_identity = false;    // tau tau-bar psi(-1) == p
  bool support_above_p = false;     // |N(tau^r)| is a power of p
  CycInt tau_power;                 // tau(psi_1)^r in Z[zeta_r]
  Int norm;                         // N(tau_power)
  std::vector<long> roots;          // split roots above p, ascending
  std::vector<long> valuations;     // v at the matching prime
  bool exponent_pattern = false;    // valuations realize a, indexed by a
                                    // twisted discrete log of the root
  long pattern_base = -1;           // witness root c0: v at P_{c0^a} is a
  bool ok = false;
};
GaussReport gauss_sum_check(long p, long r, long degree_budget = 60);

// explicit principality certificate for the Stickelberger combination of
// the primes above q in Z[zeta_r]: produces tau^r together with its norm
// and per-prime valuations, checking v(P_{c0^a}) = a for a witness root c0.
struct PrincipalityCertificate {
  long q = 0, r = 0;
  CycInt generator;             // tau(psi_1)^r
  Int norm;
  std::vector<long> roots;      // ascending
  std::vector<long> valuations;
  long pattern_base = -1;
  bool ok = false;
};
PrincipalityCertificate stickelberger_ideal_certificate(long q, long r);

}  // namespace ctk
