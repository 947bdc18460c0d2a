#pragma once
// arithmetic mod small primes p < 2^62 and factorization of the cyclotomic
// polynomial Phi_r over F_p. the factors all share the same degree
// f = ord_r(p), so a Cantor-Zassenhaus equal degree split suffices.

#include "cubictk/rat.hpp"

namespace ctk {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}
uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m);

// polynomial over F_p, ascending coefficients, normalized (no zero lead)
struct FpPoly {
  uint64_t p;
  std::vector<uint64_t> c;
  size_t deg() const { return c.empty() ? 0 : c.size() - 1; }
  bool is_zero() const { return c.empty(); }
};

FpPoly fp_poly(uint64_t p, const std::vector<uint64_t>& coeffs);
FpPoly fp_from_int_poly(uint64_t p, const std::vector<Int>& coeffs);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_rem(const FpPoly& a, const FpPoly& mod);
FpPoly fp_gcd(FpPoly a, FpPoly b);           // monic gcd
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod);
FpPoly fp_monic(FpPoly a);

// all monic irreducible factors of Phi_r mod p (p != r, both prime).
// each factor has degree ord_r(p); sorted lexicographically by coefficient
// list so the ordering is reproducible.
std::vector<FpPoly> split_cyclotomic_mod_p(long r, uint64_t p);

// roots of Phi_r mod p in the fully split case (ord_r(p) = 1), ascending
std::vector<uint64_t> cyclotomic_roots_mod_p(long r, uint64_t p);

// smallest primitive root mod p
uint64_t primitive_root(uint64_t p);

}  // namespace ctk
