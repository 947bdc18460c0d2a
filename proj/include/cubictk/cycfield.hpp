#pragma once
// the ring Z[zeta_r] for prime r: elements on the power basis
// 1, zeta, ..., zeta^{r-2}, ideals as HNF lattices, prime construction above
// rational primes, and exact valuations. this is the substrate for the class
// group engine and the Stickelberger action.

#include "cubictk/fp.hpp"
#include "cubictk/lll.hpp"
#include "cubictk/zmat.hpp"

namespace ctk {

struct CycInt {
  long r = 0;
  std::vector<Int> c;  // length r-1

  bool is_zero() const {
    for (auto& x : c) if (x != 0) return false;
    return true;
  }
  bool operator==(const CycInt& o) const { return r == o.r && c == o.c; }
  std::string str() const;
};

CycInt cyc_zero(long r);
CycInt cyc_one(long r);
CycInt cyc_from_long(long r, long v);
CycInt cyc_zeta_pow(long r, long k);
CycInt cyc_from_coords(long r, std::vector<Int> coords);

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_mul_zeta_pow(const CycInt& a, long k);
CycInt cyc_galois(const CycInt& a, long s);  // zeta -> zeta^s, gcd(s, r) = 1
CycInt cyc_conj(const CycInt& a);

// field norm to Z, by subresultant against Phi_r
Int cyc_norm(const CycInt& a);

// gram matrix of the conjugation trace pairing on the power basis:
// Tr(zeta^i zeta^{-j}) = r [i = j] - 1. positive definite.
ZMat trace_gram(long r);

// ---------------------------------------------------------------------------

struct CycIdeal {
  long r = 0;
  ZMat h;    // (r-1) x (r-1) HNF basis rows in power coordinates
  Int nrm;   // absolute norm = det(h)

  bool operator==(const CycIdeal& o) const { return r == o.r && h == o.h; }
};

CycIdeal ideal_whole_ring(long r);
CycIdeal ideal_from_elem(const CycInt& g);
CycIdeal ideal_from_gens(long r, const std::vector<CycInt>& gens);
CycIdeal ideal_mul(const CycIdeal& a, const CycIdeal& b);
CycIdeal ideal_mul_elem(const CycIdeal& a, const CycInt& g);
CycIdeal ideal_pow(const CycIdeal& a, unsigned long e);
CycIdeal ideal_galois(const CycIdeal& a, long s);
bool ideal_contains(const CycIdeal& I, const CycInt& x);

// prime (q, g(zeta)) above the rational prime q, g an irreducible factor of
// Phi_r mod q; norm q^deg(g)
CycIdeal prime_from_poly(long r, long q, const FpPoly& g);
// split case shortcut (q, zeta - c)
CycIdeal prime_from_root(long r, long q, uint64_t c);
// the ramified prime (1 - zeta) above r
CycIdeal lambda_ideal(long r);

// full factorization of (p): the primes above a rational prime p != r, in a
// deterministic order (ascending roots when split, lex factor order
// otherwise). p = r returns the single ramified prime (1 - zeta).
std::vector<CycIdeal> split_prime(long r, long p);

// the prime above p (p = 1 mod r) singled out by a character of (Z/p)^* of
// order r: with g the least primitive root mod p and chi(g) = zeta_r^u, the
// prime is (p, zeta - c) where c^u = g^{(p-1)/r} mod p, so that reduction
// mod the prime turns chi into the (p-1)/r power of the identity character
CycIdeal p_chi(long r, long p, long u);

// determinant of a small square matrix over Z[zeta_r], cofactor expansion
CycInt cyc_det(const std::vector<std::vector<CycInt>>& m);

// exact valuations of a nonzero element
long val_at_lambda(const CycInt& x);                                // at (1-zeta)
long val_at_split(long r, long q, uint64_t root, const CycInt& x);  // f = 1 primes
long val_by_membership(const CycIdeal& P, const CycInt& x);         // any prime

// LLL-reduce the ideal lattice under the trace pairing and return short
// elements: the reduced basis rows plus small +-1 combinations of the first
// few rows, deduplicated, in deterministic order. max_combo controls the
// combination depth.
std::vector<CycInt> short_elements(const CycIdeal& I, int max_combo, long limit);

}  // namespace ctk
