#include "cubictk/fp.hpp"
#include "cubictk/cyclopoly.hpp"

#include <algorithm>

namespace ctk {

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

static void fp_trim(FpPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FpPoly fp_poly(uint64_t p, const std::vector<uint64_t>& coeffs) {
  FpPoly r{p, coeffs};
  for (auto& x : r.c) x %= p;
  fp_trim(r);
  return r;
}

FpPoly fp_from_int_poly(uint64_t p, const std::vector<Int>& coeffs) {
  FpPoly r{p, {}};
  r.c.reserve(coeffs.size());
  for (auto& z : coeffs) r.c.push_back(mpz_fdiv_ui(z.get_mpz_t(), p));
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.p != b.p) throw input_error("fp_mul: mixed moduli");
  FpPoly r{a.p, {}};
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.p)) % a.p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& mod) {
  if (a.p != mod.p) throw input_error("fp_rem: mixed moduli");
  if (mod.is_zero()) throw input_error("fp_rem: zero modulus");
  FpPoly r = a;
  uint64_t p = a.p;
  uint64_t inv_lead = powmod_u64(mod.c.back(), p - 2, p);
  while (!r.is_zero() && r.c.size() >= mod.c.size()) {
    uint64_t q = mulmod_u64(r.c.back(), inv_lead, p);
    size_t shift = r.c.size() - mod.c.size();
    for (size_t i = 0; i < mod.c.size(); ++i) {
      uint64_t s = mulmod_u64(q, mod.c[i], p);
      r.c[shift + i] = (r.c[shift + i] + p - s) % p;
    }
    fp_trim(r);
  }
  return r;
}

FpPoly fp_monic(FpPoly a) {
  if (a.is_zero()) return a;
  uint64_t inv = powmod_u64(a.c.back(), a.p - 2, a.p);
  for (auto& x : a.c) x = mulmod_u64(x, inv, a.p);
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a));
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
  FpPoly acc = fp_poly(mod.p, {1});
  FpPoly b = fp_rem(base, mod);
  Int k = e;
  if (k < 0) throw input_error("fp_powmod: negative exponent");
  while (k > 0) {
    if (fmod(k, 2) == 1) acc = fp_rem(fp_mul(acc, b), mod);
    k >>= 1;
    if (k > 0) b = fp_rem(fp_mul(b, b), mod);
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

// equal degree splitting, Cantor-Zassenhaus. poly is squarefree with all
// irreducible factors of degree f. deterministic rng seed for reproducibility.
void edf(const FpPoly& poly, size_t f, Rng& rng, std::vector<FpPoly>& out) {
  if (poly.deg() == f) {
    out.push_back(fp_monic(poly));
    return;
  }
  uint64_t p = poly.p;
  Int q = pow_int(Int((unsigned long)p), (unsigned long)f);
  Int half = (q - 1) / 2;
  for (;;) {
    // random poly of degree < deg(poly)
    FpPoly a{p, {}};
    a.c.resize(poly.deg());
    for (auto& x : a.c) x = rng.next() % p;
    fp_trim(a);
    if (a.is_zero()) continue;
    FpPoly g = fp_gcd(poly, a);
    if (g.deg() > 0 && g.deg() < poly.deg()) {
      // lucky split
    } else if (p == 2) {
      // char 2: use the F_2 trace map a + a^2 + a^4 + ... instead of the
      // odd characteristic power trick
      FpPoly t = fp_rem(a, poly), acc = t;
      for (size_t i = 1; i < f; ++i) {
        t = fp_rem(fp_mul(t, t), poly);
        if (acc.c.size() < t.c.size()) acc.c.resize(t.c.size(), 0);
        for (size_t j = 0; j < t.c.size(); ++j) acc.c[j] ^= t.c[j];
        fp_trim(acc);
      }
      if (acc.is_zero()) continue;
      g = fp_gcd(poly, acc);
      if (g.deg() == 0 || g.deg() == poly.deg()) continue;
    } else {
      FpPoly b = fp_powmod(a, half, poly);
      if (b.is_zero()) continue;
      b.c[0] = (b.c[0] + p - 1) % p;  // b - 1
      fp_trim(b);
      g = fp_gcd(poly, b);
      if (g.deg() == 0 || g.deg() == poly.deg()) continue;
    }
    // divide poly by g via repeated remainder: compute quotient
    // by synthetic division (g monic after fp_monic inside gcd)
    FpPoly h = poly;
    FpPoly quot{p, std::vector<uint64_t>(poly.deg() - g.deg() + 1, 0)};
    while (!h.is_zero() && h.c.size() >= g.c.size()) {
      uint64_t c = h.c.back();  // g monic
      size_t shift = h.c.size() - g.c.size();
      quot.c[shift] = c;
      for (size_t i = 0; i < g.c.size(); ++i) {
        uint64_t s = mulmod_u64(c, g.c[i], p);
        h.c[shift + i] = (h.c[shift + i] + p - s) % p;
      }
      fp_trim(h);
    }
    if (!h.is_zero()) throw math_error("edf: division by factor not exact");
    fp_trim(quot);
    edf(g, f, rng, out);
    edf(quot, f, rng, out);
    return;
  }
}

}  // namespace

std::vector<FpPoly> split_cyclotomic_mod_p(long r, uint64_t p) {
  if (!is_prime(Int((unsigned long)p)) || !is_prime(r)) throw input_error("split_cyclotomic_mod_p: needs primes");
  if ((uint64_t)r == p) throw input_error("split_cyclotomic_mod_p: p = r is ramified");
  FpPoly phi = fp_from_int_poly(p, cyclotomic_poly(r));
  long f = ord_mod((long)(p % (uint64_t)r), r);
  Rng rng(0xC0FFEE ^ (uint64_t)r ^ (p << 16));
  std::vector<FpPoly> out;
  edf(phi, (size_t)f, rng, out);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) { return a.c < b.c; });
  if (out.size() != (size_t)((r - 1) / f)) throw math_error("split_cyclotomic_mod_p: wrong factor count");
  return out;
}

std::vector<uint64_t> cyclotomic_roots_mod_p(long r, uint64_t p) {
  if (p % (uint64_t)r != 1) throw input_error("cyclotomic_roots_mod_p: p must be 1 mod r");
  // roots are the elements of exact order r: g^{k(p-1)/r}, gcd(k, r) = 1
  uint64_t g = primitive_root(p);
  uint64_t h = powmod_u64(g, (p - 1) / (uint64_t)r, p);
  std::vector<uint64_t> roots;
  uint64_t cur = h;
  for (long k = 1; k < r; ++k) {
    roots.push_back(cur);
    cur = mulmod_u64(cur, h, p);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

uint64_t primitive_root(uint64_t p) {
  if (p == 2) return 1;
  auto fac = factor(Int((unsigned long)(p - 1)));
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& [q, e] : fac) {
      (void)e;
      uint64_t qq = (uint64_t)q.get_ui();
      if (powmod_u64(g, (p - 1) / qq, p) == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  throw math_error("primitive_root: none found (p not prime?)");
}

}  // namespace ctk
