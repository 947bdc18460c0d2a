#pragma once
// exact arithmetic base types and small helpers shared by everything else.
// all math in this library is done over mpz/mpq; no doubles anywhere.

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctk {

using Int = mpz_class;
using Rat = mpq_class;

// thrown on mathematically invalid input (bad JSON shapes, non-divisor chains, ...)
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};
// thrown when a computation concludes the requested statement is false or
// a certification/budget genuinely fails
struct math_error : std::runtime_error {
  explicit math_error(const std::string& m) : std::runtime_error(m) {}
};

inline Int to_int(long v) { return Int(v); }

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw math_error("integer too large for machine word: " + z.get_str());
  return z.get_si();
}

// canonical "a/b" form, denominator omitted when 1
inline std::string rat_str(const Rat& q) {
  Rat c(q); c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int den(s.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator: " + s);
    Rat q(Int(s.substr(0, slash)), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw input_error("bad rational literal: " + s);
  }
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// floor division helpers (mpz_fdiv)
inline Int fdiv(const Int& a, const Int& b) {
  Int q; mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); return q;
}
inline Int fmod(const Int& a, const Int& b) {
  Int r; mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); return r;
}
inline long lmod(long a, long m) { long r = a % m; return r < 0 ? r + m : r; }

inline Int gcd(const Int& a, const Int& b) {
  Int g; mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); return g;
}
inline Int lcm(const Int& a, const Int& b) {
  Int l; mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); return l;
}

// modular inverse, throws if not invertible
inline Int invmod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw math_error("not invertible mod " + m.get_str() + ": " + a.get_str());
  return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
  Int r; mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t()); return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r; mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e); return r;
}

// p-adic valuation of a nonzero integer
inline long val_p(Int n, const Int& p) {
  if (n == 0) throw math_error("valuation of zero");
  long v = 0;
  Int r, q;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q; ++v;
  }
  return v;
}
inline long val_p(const Rat& q, const Int& p) {
  if (q == 0) throw math_error("valuation of zero");
  long v = val_p(Int(q.get_num()), p);
  if (q.get_den() != 1) v -= val_p(Int(q.get_den()), p);
  return v;
}

inline bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }
inline bool is_prime(long n) { return is_prime(Int(n)); }

// trial division factorization; fine for the operand sizes in this library
inline std::vector<std::pair<Int, long>> factor(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw math_error("factor(0)");
  std::vector<std::pair<Int, long>> out;
  auto strip = [&](const Int& p) {
    long e = 0;
    while (fmod(n, p) == 0) { n /= p; ++e; }
    if (e) out.push_back({p, e});
  };
  strip(2); strip(3);
  Int p = 5;
  while (p * p <= n) {
    if (is_prime(p)) strip(p);
    p += (fmod(p, 6) == 5) ? 2 : 4;
    if (out.size() > 64) throw math_error("factor: too many primes");
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline long ord_mod(long a, long m) {
  // multiplicative order of a mod m; throws if gcd(a,m) != 1
  if (std::gcd(lmod(a, m), m) != 1) throw input_error("ord_mod: not a unit");
  long x = lmod(a, m), cur = x, o = 1;
  while (cur != 1) { cur = (long)((__int128)cur * x % m); ++o; if (o > m) throw math_error("ord_mod overflow"); }
  return o;
}

inline long euler_phi(long m) {
  long r = m;
  for (auto& [p, e] : factor(Int(m))) { (void)e; long pl = to_long(p); r -= r / pl; }
  return r;
}

// deterministic xorshift rng; all randomized searches in the library draw
// from this so runs are reproducible
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ULL) : s(seed ? seed : 1) {}
  uint64_t next() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return s;
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  long range(long lo, long hi) { return lo + (long)below((uint64_t)(hi - lo + 1)); }
};

// iteration budget scale, settable via CUBICTK_BUDGET (default 1)
long budget_scale();

}  // namespace ctk
