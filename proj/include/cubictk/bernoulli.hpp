#pragma once
// Bernoulli numbers, generalized Bernoulli numbers attached to characters of
// (Z/f)^*, irregular index data and the annihilator exponent table used by
// the kernel bound.

#include "cubictk/cyclopoly.hpp"

namespace ctk {

// exact B_k (B_1 = -1/2), cached
const Rat& bernoulli(long k);

// B_k mod m for an odd prime m not dividing the denominator, computed by the
// power sum congruence; requires m >= k + 3 so the Faulhaber tail vanishes
// mod m^2. falls back to exact arithmetic otherwise.
Int bernoulli_mod(long k, long m);

// von Staudt-Clausen: denominator of B_k (k even > 0) equals the product of
// the primes p with (p-1) | k
bool von_staudt_clausen_check(long k);

// a character of (Z/f)^* with values in Q(zeta_n): chi(gen^t) = zeta_n^{j t}
// for a fixed generator when (Z/f)^* is cyclic. general f uses exponent
// vectors on the unit group generators.
struct DirichletChar {
  long f = 1;                      // modulus
  long n = 1;                      // value root order
  std::vector<long> log_table;     // a -> exponent of zeta_n, or -1 if gcd(a, f) > 1
  bool is_trivial() const;
  CycF value(long a) const;        // 0 if not coprime
};

// order-n characters of (Z/f)^* for prime f: chi_j(g^t) = zeta_{f-1}^{jt}
// with g the smallest primitive root; j indexes the character
DirichletChar char_mod_prime(long f, long j);
// quadratic character mod odd prime f (Legendre symbol)
DirichletChar quadratic_char(long f);

// generalized Bernoulli number B_{k,chi} = f^{k-1} sum_a chi(a) B_k(a/f),
// exact value in Q(zeta_n). for the trivial character of conductor 1 this
// is B_k except k = 1 where the sign flips to +1/2.
CycF gen_bernoulli(long k, const DirichletChar& chi);

// odd-part class number of Q(zeta_r): h^- = Q w prod_{chi odd} (-B_{1,chi}/2)
// with Q = 1 and w = 2r for prime r > 2. exact integer.
Int h_minus(long r);

// irregular pairs (r, k): r divides numerator(B_k), k even, 2 <= k <= r - 3
std::vector<std::pair<long, long>> irregular_pairs_below(long bound);

// annihilator exponent e(k): e(1) = 1; k even: |numerator(B_k / k)|;
// k odd >= 3: 1 under the vandiver flag, otherwise unknown (throws)
Int annihilator_exponent(long k, bool vandiver);

}  // namespace ctk
