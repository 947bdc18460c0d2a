#include "cubictk/stickelberger.hpp"

#include <algorithm>

namespace ctk {

Int teichmuller(long r, long a, long k) {
  if (k < 1) throw input_error("teichmuller: precision must be positive");
  long aa = lmod(a, r);
  if (aa == 0) throw input_error("teichmuller: argument divisible by r");
  Int mod = pow_int(Int(r), (unsigned long)k);
  Int x = aa;
  for (long i = 1; i < k; ++i) x = powmod(x, Int(r), mod);
  return x;
}

// ---------------------------------------------------------------------------

Int StickelbergerElt::coeff(long a, const Int& ell, long k) const {
  if (k < 1) throw input_error("coeff: precision must be positive");
  long aa = lmod(a, r);
  if (aa == 0) throw input_error("coeff: argument divisible by r");
  Int lk = pow_int(ell, (unsigned long)k);
  if (kind == theta1) return fmod(Int(aa), lk);

  // theta2
  if (ell == r) {
    // (p-1)({a}^2 - w(a)^2)/(24 r^2): both factors pick up one power of r,
    // so the division is exact. w needs two guard digits for the square.
    Int m = Int(p - 1) / 24;
    Int om = teichmuller(r, aa, k + 2);
    Int d = m * (Int(aa) * aa - om * om);
    Int rsq = Int(r) * r;
    if (d % rsq != 0)
      throw math_error("theta2 coefficient not r-integral (hypothesis violated)");
    return fmod(d / rsq, lk);
  }
  // away from r the denominator is prime to ell once 24 cancels into p-1
  Rat val = Rat(Int(p - 1) * aa * aa) / Rat(Int(24) * r * r);
  val.canonicalize();
  Int num = val.get_num(), den = val.get_den();
  if (gcd(den, ell) != 1)
    throw math_error("theta2 denominator not invertible at the target prime");
  return fmod(num * invmod(fmod(den, lk), lk), lk);
}

StickelbergerElt theta1_build(long r) {
  if (r < 3 || !is_prime(r)) throw input_error("theta1_build: r must be an odd prime");
  StickelbergerElt t;
  t.kind = StickelbergerElt::theta1;
  t.r = r;
  return t;
}

StickelbergerElt theta2_build(long r, long p) {
  if (r < 3 || !is_prime(r)) throw input_error("theta2_build: r must be an odd prime");
  if (p < 5 || !is_prime(p)) throw input_error("theta2_build: p must be prime");
  if ((p - 1) % 24 != 0) throw input_error("theta2_build: p = 1 mod 24 required");
  if ((p - 1) % r != 0) throw input_error("theta2_build: r | p - 1 required");
  StickelbergerElt t;
  t.kind = StickelbergerElt::theta2;
  t.r = r;
  t.p = p;
  t.weak_hypothesis = ((p - 1) % (24 * r)) != 0;
  return t;
}

ClsVec apply_stickelberger(const StickelbergerElt& th, const ClsVec& c, const ClassGroup& cg) {
  if (th.r != cg.r) throw input_error("apply_stickelberger: group ring mismatch");
  if (c.size() != cg.nontrivial.size()) throw input_error("apply_stickelberger: class length");
  ClsVec acc = cg.zero_class();
  if (cg.nontrivial.empty() || cg.is_zero(c)) return acc;

  Int E = cg.exponent();
  auto fac = factor(E);
  for (long a = 1; a < cg.r; ++a) {
    // combine the per-prime coefficients into one integer mod E
    Int ca = 0, mod = 1;
    for (auto& [ell, m] : fac) {
      Int pk = pow_int(ell, (unsigned long)m);
      Int ci = th.coeff(a, ell, m);
      Int t = fmod((ci - ca) * invmod(fmod(mod, pk), pk), pk);
      ca += mod * t;
      mod *= pk;
    }
    long s = to_long(invmod(Int(a), Int(cg.r)));
    acc = cg.add(acc, cg.scale(ca, cg.galois_on_class(s, c)));
  }
  return acc;
}

bool herbrand_test(long r, long k) {
  if (r < 5 || !is_prime(r)) throw input_error("herbrand_test: r must be a prime >= 5");
  if (k < 2 || k > r - 3 || k % 2 != 0)
    throw input_error("herbrand_test: need even k with 2 <= k <= r - 3");
  return bernoulli_mod(k, r) == 0;
}

// ---------------------------------------------------------------------------
// eigenspace decomposition

// smallest generator of (Z/m)^* for m an odd prime power
static Int unit_group_generator(const Int& ell, long m) {
  Int mod = pow_int(ell, (unsigned long)m);
  Int phi = mod / ell * (ell - 1);
  std::vector<Int> prime_parts;
  for (auto& [q, e] : factor(phi)) {
    (void)e;
    prime_parts.push_back(phi / q);
  }
  for (Int w = 2; w < mod; ++w) {
    if (gcd(w, ell) != 1) continue;
    bool gen = true;
    for (auto& e : prime_parts)
      if (powmod(w, e, mod) == 1) { gen = false; break; }
    if (gen) return w;
  }
  throw math_error("unit_group_generator: no generator found");
}

EigenDecomp eigen_decompose(const ClassGroup& cg, const Int& ell, const StickelbergerElt& th) {
  if (!is_prime(ell)) throw input_error("eigen_decompose: ell must be prime");
  EigenDecomp out;
  out.ell = ell;
  if (cg.h == 1) return out;
  if (cg.h % ell != 0) throw input_error("eigen_decompose: ell does not divide the order");

  std::vector<size_t> slots;
  for (size_t t = 0; t < cg.nontrivial.size(); ++t)
    if (cg.diag[cg.nontrivial[t]] % ell == 0) slots.push_back(t);
  if (slots.size() != 1)
    throw math_error("eigen_decompose: only cyclic ell-parts are supported");

  size_t t0 = slots[0];
  Int d = cg.diag[cg.nontrivial[t0]];
  long m = val_p(d, ell);
  Int lm = pow_int(ell, (unsigned long)m);

  ClsVec gen = cg.zero_class();
  gen[t0] = d / lm;

  long g = (long)primitive_root((uint64_t)cg.r);
  ClsVec img = cg.galois_on_class(g, gen);
  Int s = -1;
  for (Int cand = 0; cand < lm; ++cand)
    if (cg.scale(cand, gen) == img) { s = cand; break; }
  if (s < 0 || gcd(s, ell) != 1)
    throw math_error("eigen_decompose: galois action left the component");

  // order of the scalar, which must divide r - 1
  long e = 1;
  Int cur = s;
  while (cur != 1) {
    cur = fmod(cur * s, lm);
    if (++e > cg.r) throw math_error("eigen_decompose: scalar order out of range");
  }
  if ((cg.r - 1) % e != 0) throw math_error("eigen_decompose: scalar order does not divide r - 1");

  // index the character: the canonical scalar of order e is w^{phi/e} for
  // the smallest unit group generator w, and j = dlog * (r-1)/e
  Int w = unit_group_generator(ell, m);
  Int phi = lm / ell * (ell - 1);
  Int shat = powmod(w, phi / e, lm);
  long dlog = -1;
  Int pw = 1;
  for (long t = 0; t < e; ++t) {
    if (pw == s) { dlog = t; break; }
    pw = fmod(pw * shat, lm);
  }
  if (dlog < 0) throw math_error("eigen_decompose: scalar not a power of the canonical root");

  EigenComponent comp;
  comp.j = lmod(dlog * ((cg.r - 1) / e), cg.r - 1);
  comp.generator = gen;
  comp.order = lm;

  ClsVec timg = apply_stickelberger(th, gen, cg);
  Int u = -1;
  for (Int cand = 0; cand < lm; ++cand)
    if (cg.scale(cand, gen) == timg) { u = cand; break; }
  if (u < 0) throw math_error("eigen_decompose: theta action left the component");
  comp.theta_scalar = u;

  out.components.push_back(std::move(comp));
  return out;
}

// ---------------------------------------------------------------------------
// tensor ring and Gauss sums

TensorCyc tc_zero(long p, long r) {
  TensorCyc t;
  t.p = p;
  t.r = r;
  t.c.assign((size_t)(p - 1) * (r - 1), 0);
  return t;
}

TensorCyc tc_from_long(long p, long r, long v) {
  TensorCyc t = tc_zero(p, r);
  t.c[0] = v;
  return t;
}

TensorCyc tc_add(const TensorCyc& a, const TensorCyc& b) {
  if (a.p != b.p || a.r != b.r) throw input_error("tc_add: ring mismatch");
  TensorCyc t = a;
  for (size_t i = 0; i < t.c.size(); ++i) t.c[i] += b.c[i];
  return t;
}

TensorCyc tc_sub(const TensorCyc& a, const TensorCyc& b) {
  if (a.p != b.p || a.r != b.r) throw input_error("tc_sub: ring mismatch");
  TensorCyc t = a;
  for (size_t i = 0; i < t.c.size(); ++i) t.c[i] -= b.c[i];
  return t;
}

// reduce a coefficient grid with x-degree < xn, y-degree < yn down to the
// basis degrees via zeta^{m-1} = -(1 + zeta + ... + zeta^{m-2}) per variable
static TensorCyc tc_fold(long p, long r, std::vector<std::vector<Int>>& grid) {
  long xn = (long)grid.size();
  long yn = (long)grid[0].size();
  for (long i = xn - 1; i >= p - 1; --i)
    for (long j = 0; j < yn; ++j) {
      if (grid[i][j] == 0) continue;
      Int c = grid[i][j];
      grid[i][j] = 0;
      for (long k = 0; k <= p - 2; ++k) grid[i - (p - 1) + k][j] -= c;
    }
  for (long j = yn - 1; j >= r - 1; --j)
    for (long i = 0; i <= p - 2; ++i) {
      if (grid[i][j] == 0) continue;
      Int c = grid[i][j];
      grid[i][j] = 0;
      for (long k = 0; k <= r - 2; ++k) grid[i][j - (r - 1) + k] -= c;
    }
  TensorCyc t = tc_zero(p, r);
  for (long i = 0; i <= p - 2; ++i)
    for (long j = 0; j <= r - 2; ++j) t.at(i, j) = std::move(grid[i][j]);
  return t;
}

TensorCyc tc_mul(const TensorCyc& a, const TensorCyc& b) {
  if (a.p != b.p || a.r != b.r) throw input_error("tc_mul: ring mismatch");
  long p = a.p, r = a.r;
  std::vector<std::vector<Int>> grid((size_t)(2 * p - 3), std::vector<Int>((size_t)(2 * r - 3), 0));
  for (long i1 = 0; i1 <= p - 2; ++i1)
    for (long j1 = 0; j1 <= r - 2; ++j1) {
      const Int& av = a.at(i1, j1);
      if (av == 0) continue;
      for (long i2 = 0; i2 <= p - 2; ++i2)
        for (long j2 = 0; j2 <= r - 2; ++j2) {
          const Int& bv = b.at(i2, j2);
          if (bv == 0) continue;
          grid[i1 + i2][j1 + j2] += av * bv;
        }
    }
  return tc_fold(p, r, grid);
}

TensorCyc tc_pow(const TensorCyc& a, unsigned long e) {
  TensorCyc acc = tc_from_long(a.p, a.r, 1);
  if (e == 0) return acc;
  TensorCyc base = a;
  bool first = true;
  while (e) {
    if (e & 1) {
      acc = first ? base : tc_mul(acc, base);
      first = false;
    }
    e >>= 1;
    if (e) base = tc_mul(base, base);
  }
  return acc;
}

CycInt tc_descend_r(const TensorCyc& a) {
  for (long i = 1; i <= a.p - 2; ++i)
    for (long j = 0; j <= a.r - 2; ++j)
      if (a.at(i, j) != 0) throw math_error("tc_descend_r: element has zeta_p content");
  CycInt out = cyc_zero(a.r);
  for (long j = 0; j <= a.r - 2; ++j) out.c[j] = a.at(0, j);
  return out;
}

TensorCyc gauss_sum(long p, long r, long u) {
  if (!is_prime(p) || !is_prime(r) || p == r) throw input_error("gauss_sum: need distinct primes");
  u = lmod(u, r);
  if (u == 0) return tc_from_long(p, r, -1);
  if ((p - 1) % r != 0) throw input_error("gauss_sum: character order must divide p - 1");

  uint64_t g = primitive_root((uint64_t)p);
  std::vector<long> ind((size_t)p, 0);
  uint64_t pw = 1;
  for (long t = 0; t < p - 1; ++t) {
    ind[(size_t)pw] = t;
    pw = mulmod_u64(pw, g, (uint64_t)p);
  }
  std::vector<std::vector<Int>> grid((size_t)p, std::vector<Int>((size_t)r, 0));
  for (long j = 1; j <= p - 1; ++j) {
    long e = lmod(u * ind[(size_t)j], r);
    grid[(size_t)j][(size_t)e] += 1;
  }
  return tc_fold(p, r, grid);
}

// shared tail of the two Gauss sum reports: descend tau^r, take its norm,
// read valuations above q, and search for the base root realizing v = a
struct DescentFacts {
  CycInt g;
  Int norm;
  bool norm_is_pure_power = false;
  std::vector<long> roots;
  std::vector<long> vals;
  long base = -1;
  bool pattern = false;
};

static DescentFacts descend_and_factor(long q, long r) {
  TensorCyc tau = gauss_sum(q, r, 1);
  DescentFacts d;
  d.g = tc_descend_r(tc_pow(tau, (unsigned long)r));
  d.norm = cyc_norm(d.g);
  Int expect = pow_int(Int(q), (unsigned long)((long)r * (r - 1) / 2));
  Int an = d.norm < 0 ? Int(-d.norm) : d.norm;
  d.norm_is_pure_power = (an == expect);

  for (uint64_t c : cyclotomic_roots_mod_p(r, (uint64_t)q)) d.roots.push_back((long)c);
  for (long c : d.roots) d.vals.push_back(val_at_split(r, q, (uint64_t)c, d.g));

  auto val_of_root = [&](long c) -> long {
    for (size_t i = 0; i < d.roots.size(); ++i)
      if (d.roots[i] == c) return d.vals[i];
    return -1;
  };
  for (long c0 : d.roots) {
    bool match = true;
    uint64_t cp = 1;
    for (long a = 1; a <= r - 1 && match; ++a) {
      cp = mulmod_u64(cp, (uint64_t)c0, (uint64_t)q);
      if (val_of_root((long)cp) != a) match = false;
    }
    if (match) { d.base = c0; d.pattern = true; break; }
  }
  return d;
}

GaussReport gauss_sum_check(long p, long r, long degree_budget) {
  if (!is_prime(p) || !is_prime(r) || p == r) throw input_error("gauss_sum_check: need distinct primes");
  if ((p - 1) % r != 0) throw input_error("gauss_sum_check: r | p - 1 required");
  if ((long)(p - 1) * (r - 1) > degree_budget)
    throw input_error("gauss_sum_check: degree budget exceeded");

  GaussReport rep;
  rep.p = p;
  rep.r = r;

  TensorCyc tau = gauss_sum(p, r, 1);
  TensorCyc taubar = gauss_sum(p, r, r - 1);
  TensorCyc prod = tc_mul(tau, taubar);
  // psi(-1) = zeta_r^{ind(-1)} with ind(-1) = (p-1)/2
  long e0 = lmod((p - 1) / 2, r);
  if (e0 != 0) {
    std::vector<std::vector<Int>> mono((size_t)(p - 1), std::vector<Int>((size_t)r, 0));
    mono[0][(size_t)e0] = 1;
    prod = tc_mul(prod, tc_fold(p, r, mono));
  }
  rep.product_identity = (prod == tc_from_long(p, r, p));

  DescentFacts d = descend_and_factor(p, r);
  rep.tau_power = d.g;
  rep.norm = d.norm;
  rep.support_above_p = d.norm_is_pure_power;
  rep.roots = d.roots;
  rep.valuations = d.vals;
  rep.exponent_pattern = d.pattern;
  rep.pattern_base = d.base;
  rep.ok = rep.product_identity && rep.support_above_p && rep.exponent_pattern;
  return rep;
}

PrincipalityCertificate stickelberger_ideal_certificate(long q, long r) {
  if (!is_prime(q) || !is_prime(r) || q == r)
    throw input_error("stickelberger_ideal_certificate: need distinct primes");
  if ((q - 1) % r != 0) throw input_error("stickelberger_ideal_certificate: r | q - 1 required");

  PrincipalityCertificate cert;
  cert.q = q;
  cert.r = r;
  DescentFacts d = descend_and_factor(q, r);
  cert.generator = d.g;
  cert.norm = d.norm;
  cert.roots = d.roots;
  cert.valuations = d.vals;
  cert.pattern_base = d.base;
  cert.ok = d.norm_is_pure_power && d.pattern;
  return cert;
}

}  // namespace ctk
