#include "cubictk/cycfield.hpp"
#include "cubictk/cyclopoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ctk {

static void need_prime_r(long r) {
  if (r < 3 || !is_prime(r)) throw input_error("Z[zeta_r]: odd prime r required");
}

CycInt cyc_zero(long r) {
  need_prime_r(r);
  CycInt x;
  x.r = r;
  x.c.assign(r - 1, 0);
  return x;
}

CycInt cyc_one(long r) {
  CycInt x = cyc_zero(r);
  x.c[0] = 1;
  return x;
}

CycInt cyc_from_long(long r, long v) {
  CycInt x = cyc_zero(r);
  x.c[0] = v;
  return x;
}

CycInt cyc_zeta_pow(long r, long k) {
  CycInt x = cyc_zero(r);
  k = lmod(k, r);
  if (k <= r - 2) {
    x.c[k] = 1;
  } else {
    // zeta^{r-1} = -(1 + zeta + ... + zeta^{r-2})
    for (auto& v : x.c) v = -1;
  }
  return x;
}

CycInt cyc_from_coords(long r, std::vector<Int> coords) {
  need_prime_r(r);
  if ((long)coords.size() != r - 1) throw input_error("cyc_from_coords: wrong length");
  CycInt x;
  x.r = r;
  x.c = std::move(coords);
  return x;
}

static void match(const CycInt& a, const CycInt& b) {
  if (a.r != b.r) throw input_error("CycInt: mixed rings");
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  match(a, b);
  CycInt x = a;
  for (long i = 0; i < a.r - 1; ++i) x.c[i] += b.c[i];
  return x;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  match(a, b);
  CycInt x = a;
  for (long i = 0; i < a.r - 1; ++i) x.c[i] -= b.c[i];
  return x;
}

CycInt cyc_neg(const CycInt& a) {
  CycInt x = a;
  for (auto& v : x.c) v = -v;
  return x;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  match(a, b);
  long r = a.r;
  // schoolbook product, degree up to 2r-4, then fold zeta^k for k >= r-1
  std::vector<Int> t(2 * r - 3, 0);
  for (long i = 0; i < r - 1; ++i) {
    if (a.c[i] == 0) continue;
    for (long j = 0; j < r - 1; ++j) {
      if (b.c[j] == 0) continue;
      t[i + j] += a.c[i] * b.c[j];
    }
  }
  // fold top degrees down: zeta^k = zeta^{k mod r}, and zeta^{r-1} relation
  CycInt x = cyc_zero(r);
  for (long k = (long)t.size() - 1; k >= 0; --k) {
    if (t[k] == 0) continue;
    long kk = k % r;
    if (kk <= r - 2) {
      x.c[kk] += t[k];
    } else {
      for (long i = 0; i < r - 1; ++i) x.c[i] -= t[k];
    }
  }
  return x;
}

CycInt cyc_mul_zeta_pow(const CycInt& a, long k) {
  k = lmod(k, a.r);
  if (k == 0) return a;
  CycInt x = cyc_zero(a.r);
  for (long i = 0; i < a.r - 1; ++i) {
    if (a.c[i] == 0) continue;
    long kk = (i + k) % a.r;
    if (kk <= a.r - 2) x.c[kk] += a.c[i];
    else
      for (long j = 0; j < a.r - 1; ++j) x.c[j] -= a.c[i];
  }
  return x;
}

CycInt cyc_galois(const CycInt& a, long s) {
  s = lmod(s, a.r);
  if (s == 0) throw input_error("cyc_galois: exponent divisible by r");
  CycInt x = cyc_zero(a.r);
  for (long i = 0; i < a.r - 1; ++i) {
    if (a.c[i] == 0) continue;
    long k = (long)(((__int128)i * s) % a.r);
    if (k <= a.r - 2) x.c[k] += a.c[i];
    else
      for (long j = 0; j < a.r - 1; ++j) x.c[j] -= a.c[i];
  }
  return x;
}

CycInt cyc_conj(const CycInt& a) { return cyc_galois(a, a.r - 1); }

std::string CycInt::str() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < r - 1; ++i) os << (i ? "," : "") << c[i].get_str();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// norm by subresultant PRS of Phi_r and the element polynomial.
// Res(Phi_r, f) = prod over roots zeta of f(zeta) = Norm(f(zeta)) since
// Phi_r is monic.

namespace {

using ZPoly = std::vector<Int>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b
ZPoly prem(ZPoly a, const ZPoly& b) {
  long da = (long)a.size() - 1, db = (long)b.size() - 1;
  if (db < 0) throw math_error("prem: zero divisor");
  Int lb = b.back();
  long k = da - db + 1;
  // multiply a by lb^k progressively while eliminating
  while ((long)a.size() - 1 >= db && !a.empty()) {
    Int coef = a.back();
    long shift = (long)a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (long i = 0; i <= db; ++i) a[shift + i] -= coef * b[i];
    trim(a);
    --k;
  }
  // ensure the full lb^(da-db+1) factor regardless of how many steps ran
  while (k-- > 0)
    for (auto& x : a) x *= lb;
  return a;
}

Int resultant_z(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Int g = 1, h = 1, s = 1;
  for (;;) {
    long da = (long)a.size() - 1, db = (long)b.size() - 1;
    if (db == 0) {
      // res = s lc(b)^da / h^{da-1}
      Int num = 1;
      for (long i = 0; i < da; ++i) num *= b[0];
      Int den = 1;
      for (long i = 0; i + 1 < da; ++i) den *= h;
      if (den != 1) {
        if (fmod(num, den) != 0) throw math_error("resultant: final division inexact");
        num /= den;
      }
      return s * num;
    }
    long d = da - db;
    if ((da % 2) && (db % 2)) s = -s;
    ZPoly r = prem(a, b);
    if (r.empty()) return 0;
    a = b;
    b = r;
    // divide b by g h^d
    Int div = g;
    for (long i = 0; i < d; ++i) div *= h;
    for (auto& x : b) {
      if (fmod(x, div) != 0) throw math_error("resultant: inexact subresultant division");
      x /= div;
    }
    g = a.back();
    // h = h^{1-d} g^d
    if (d == 0) {
      // h unchanged times g^0... h stays
    } else {
      Int gn = 1;
      for (long i = 0; i < d; ++i) gn *= g;
      Int hd = 1;
      for (long i = 0; i + 1 < d; ++i) hd *= h;
      if (d == 1) h = gn;
      else {
        if (fmod(gn, hd) != 0) throw math_error("resultant: h update inexact");
        h = gn / hd;
      }
    }
  }
}

}  // namespace

Int cyc_norm(const CycInt& a) {
  if (a.is_zero()) return 0;
  const auto& phi = cyclotomic_poly(a.r);
  ZPoly f(a.c);
  trim(f);
  ZPoly p(phi);
  return resultant_z(p, f);
}

ZMat trace_gram(long r) {
  need_prime_r(r);
  size_t n = r - 1;
  ZMat g(n, std::vector<Int>(n, -1));
  for (size_t i = 0; i < n; ++i) g[i][i] = r - 1;
  return g;
}

// ---------------------------------------------------------------------------
// ideals

CycIdeal ideal_whole_ring(long r) {
  need_prime_r(r);
  CycIdeal I;
  I.r = r;
  I.h = zmat_identity(r - 1);
  I.nrm = 1;
  return I;
}

static CycIdeal ideal_from_rows(long r, ZMat rows, const Int& mod) {
  CycIdeal I;
  I.r = r;
  I.h = hnf_mod(rows, mod);
  I.nrm = 1;
  for (size_t i = 0; i < nrows(I.h); ++i) I.nrm *= I.h[i][i];
  return I;
}

static void append_elem_rows(ZMat& rows, const CycInt& g) {
  // lattice rows for g, g zeta, ..., g zeta^{r-2}
  CycInt cur = g;
  for (long k = 0; k < g.r - 1; ++k) {
    rows.push_back(cur.c);
    if (k + 1 < g.r - 1) cur = cyc_mul_zeta_pow(cur, 1);
  }
}

CycIdeal ideal_from_elem(const CycInt& g) {
  if (g.is_zero()) throw input_error("ideal_from_elem: zero element");
  ZMat rows;
  append_elem_rows(rows, g);
  Int n = cyc_norm(g);
  if (n < 0) n = -n;
  return ideal_from_rows(g.r, std::move(rows), n);
}

CycIdeal ideal_from_gens(long r, const std::vector<CycInt>& gens) {
  ZMat rows;
  Int mod = 0;
  for (auto& g : gens) {
    if (g.r != r) throw input_error("ideal_from_gens: mixed rings");
    if (g.is_zero()) continue;
    append_elem_rows(rows, g);
    Int n = cyc_norm(g);
    if (n < 0) n = -n;
    mod = (mod == 0) ? n : gcd(mod, n);
  }
  if (rows.empty() || mod == 0) throw input_error("ideal_from_gens: no nonzero generators");
  return ideal_from_rows(r, std::move(rows), mod);
}

CycIdeal ideal_mul(const CycIdeal& a, const CycIdeal& b) {
  if (a.r != b.r) throw input_error("ideal_mul: mixed rings");
  long r = a.r;
  ZMat rows;
  rows.reserve((r - 1) * (r - 1));
  for (size_t i = 0; i < nrows(a.h); ++i) {
    CycInt ai = cyc_from_coords(r, a.h[i]);
    for (size_t j = 0; j < nrows(b.h); ++j) {
      CycInt prod = cyc_mul(ai, cyc_from_coords(r, b.h[j]));
      rows.push_back(std::move(prod.c));
    }
  }
  return ideal_from_rows(r, std::move(rows), a.nrm * b.nrm);
}

CycIdeal ideal_mul_elem(const CycIdeal& a, const CycInt& g) {
  if (a.r != g.r) throw input_error("ideal_mul_elem: mixed rings");
  if (g.is_zero()) throw input_error("ideal_mul_elem: zero element");
  ZMat rows;
  for (size_t i = 0; i < nrows(a.h); ++i)
    rows.push_back(cyc_mul(cyc_from_coords(a.r, a.h[i]), g).c);
  Int n = cyc_norm(g);
  if (n < 0) n = -n;
  return ideal_from_rows(a.r, std::move(rows), a.nrm * n);
}

CycIdeal ideal_pow(const CycIdeal& a, unsigned long e) {
  CycIdeal acc = ideal_whole_ring(a.r), base = a;
  while (e) {
    if (e & 1) acc = ideal_mul(acc, base);
    e >>= 1;
    if (e) base = ideal_mul(base, base);
  }
  return acc;
}

CycIdeal ideal_galois(const CycIdeal& a, long s) {
  ZMat rows;
  for (size_t i = 0; i < nrows(a.h); ++i)
    rows.push_back(cyc_galois(cyc_from_coords(a.r, a.h[i]), s).c);
  return ideal_from_rows(a.r, std::move(rows), a.nrm);
}

bool ideal_contains(const CycIdeal& I, const CycInt& x) {
  if (I.r != x.r) throw input_error("ideal_contains: mixed rings");
  return hnf_member(I.h, x.c);
}

CycIdeal prime_from_poly(long r, long q, const FpPoly& g) {
  need_prime_r(r);
  if (g.p != (uint64_t)q) throw input_error("prime_from_poly: modulus mismatch");
  ZMat rows;
  // q Z[zeta] rows
  for (long i = 0; i < r - 1; ++i) {
    std::vector<Int> e(r - 1, 0);
    e[i] = q;
    rows.push_back(std::move(e));
  }
  // g(zeta) Z[zeta] rows
  CycInt gz = cyc_zero(r);
  for (size_t i = 0; i < g.c.size(); ++i) {
    CycInt t = cyc_zeta_pow(r, (long)i);
    for (auto& v : t.c) v *= Int((unsigned long)g.c[i]);
    gz = cyc_add(gz, t);
  }
  append_elem_rows(rows, gz);
  CycIdeal I = ideal_from_rows(r, std::move(rows), Int(q));
  Int expect = pow_int(Int(q), g.deg());
  if (I.nrm != expect) throw math_error("prime_from_poly: norm mismatch (factor not irreducible?)");
  return I;
}

CycIdeal prime_from_root(long r, long q, uint64_t c) {
  FpPoly g{(uint64_t)q, {(uint64_t)((q - (long)(c % (uint64_t)q)) % q), 1}};  // zeta - c
  return prime_from_poly(r, q, g);
}

CycIdeal lambda_ideal(long r) {
  CycInt lam = cyc_sub(cyc_one(r), cyc_zeta_pow(r, 1));
  return ideal_from_elem(lam);
}

std::vector<CycIdeal> split_prime(long r, long p) {
  need_prime_r(r);
  if (p < 2 || !is_prime(p)) throw input_error("split_prime: p not prime");
  if (p == r) return {lambda_ideal(r)};
  std::vector<CycIdeal> out;
  if (ord_mod(p, r) == 1) {
    for (uint64_t c : cyclotomic_roots_mod_p(r, (uint64_t)p))
      out.push_back(prime_from_root(r, p, c));
  } else {
    for (const FpPoly& g : split_cyclotomic_mod_p(r, (uint64_t)p))
      out.push_back(prime_from_poly(r, p, g));
  }
  return out;
}

CycIdeal p_chi(long r, long p, long u) {
  need_prime_r(r);
  if (!is_prime(p)) throw input_error("p_chi: p not prime");
  if (p == r || lmod(p, r) != 1) throw input_error("p_chi: need p = 1 mod r");
  if (lmod(u, r) == 0) throw input_error("p_chi: character not of order r");
  uint64_t lam = powmod_u64(primitive_root((uint64_t)p), (uint64_t)((p - 1) / r), (uint64_t)p);
  uint64_t c = powmod_u64(lam, (uint64_t)to_long(invmod(Int(u), Int(r))), (uint64_t)p);
  return prime_from_root(r, p, c);
}

CycInt cyc_det(const std::vector<std::vector<CycInt>>& m) {
  size_t n = m.size();
  if (n == 0) throw input_error("cyc_det: empty matrix");
  for (auto& row : m)
    if (row.size() != n) throw input_error("cyc_det: not square");
  long r = m[0][0].r;
  if (n == 1) return m[0][0];
  // expand along the first row; fine for the small sizes we ever see here
  CycInt acc = cyc_zero(r);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<CycInt>> sub;
    sub.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<CycInt> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    CycInt term = cyc_mul(m[0][j], cyc_det(sub));
    acc = (j % 2 == 0) ? cyc_add(acc, term) : cyc_sub(acc, term);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// valuations

long val_at_lambda(const CycInt& x) {
  // (r) = (1-zeta)^{r-1} and the residue degree is 1, so
  // v_lambda(x) = v_r(Norm(x))
  Int n = cyc_norm(x);
  if (n == 0) throw math_error("val_at_lambda: zero element");
  return val_p(n, Int(x.r));
}

long val_at_split(long r, long q, uint64_t root, const CycInt& x) {
  if (x.r != r) throw input_error("val_at_split: wrong ring");
  Int n = cyc_norm(x);
  if (n == 0) throw math_error("val_at_split: zero element");
  long cap = val_p(n, Int(q));  // v_P(x) <= v_q(N(x))
  if (cap == 0) return 0;
  // lift the root of Phi_r mod q to mod q^{cap+1} by Newton iteration, then
  // evaluate x at the lifted root; the q-valuation of the result is v_P(x)
  Int qk = pow_int(Int(q), (unsigned long)cap + 1);
  const auto& phi = cyclotomic_poly(r);
  Int c((unsigned long)root);
  // newton: precision doubles each round
  Int prec = q;
  while (prec < qk) {
    prec = prec * prec;
    if (prec > qk) prec = qk;
    // phi(c) and phi'(c) mod prec
    Int pv = 0, dv = 0;
    for (long i = (long)phi.size() - 1; i >= 0; --i) {
      dv = fmod(dv * c + pv, prec);
      pv = fmod(pv * c + phi[i], prec);
    }
    c = fmod(c - pv * invmod(dv, prec), prec);
  }
  // horner evaluate x at c mod q^{cap+1}
  Int v = 0;
  for (long i = r - 2; i >= 0; --i) v = fmod(v * c + x.c[i], qk);
  if (v == 0) return cap;  // all of the norm's q-part sits at this prime
  long val = val_p(v, Int(q));
  return std::min(val, cap);
}

long val_by_membership(const CycIdeal& P, const CycInt& x) {
  if (x.is_zero()) throw math_error("val_by_membership: zero element");
  long v = 0;
  CycIdeal pk = P;
  while (ideal_contains(pk, x)) {
    ++v;
    pk = ideal_mul(pk, P);
    if (v > 4096) throw math_error("val_by_membership: runaway valuation");
  }
  return v;
}

// ---------------------------------------------------------------------------

std::vector<CycInt> short_elements(const CycIdeal& I, int max_combo, long limit) {
  long r = I.r;
  LllResult red = lll_reduce(I.h, trace_gram(r));
  std::vector<CycInt> out;
  std::vector<std::vector<Int>> seen;
  auto push = [&](std::vector<Int> v) {
    // normalize sign: first nonzero coordinate positive
    for (auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    bool zero = true;
    for (auto& x : v)
      if (x != 0) { zero = false; break; }
    if (zero) return;
    for (auto& s : seen)
      if (s == v) return;
    seen.push_back(v);
    out.push_back(cyc_from_coords(r, std::move(v)));
  };

  size_t n = nrows(red.basis);
  for (size_t i = 0; i < n && (long)out.size() < limit; ++i) push(red.basis[i]);

  // pairwise and small signed combinations of the shortest rows
  size_t lead = std::min(n, (size_t)(max_combo <= 1 ? 4 : 8));
  for (size_t i = 0; i < lead && (long)out.size() < limit; ++i)
    for (size_t j = i + 1; j < lead && (long)out.size() < limit; ++j) {
      for (int si = -1; si <= 1; si += 2) {
        std::vector<Int> v(red.basis[i]);
        for (size_t k = 0; k < v.size(); ++k) v[k] += si * red.basis[j][k];
        push(std::move(v));
      }
      if (max_combo >= 2) {
        for (size_t l = j + 1; l < lead && (long)out.size() < limit; ++l)
          for (int sj = -1; sj <= 1; sj += 2)
            for (int sl = -1; sl <= 1; sl += 2) {
              std::vector<Int> v(red.basis[i]);
              for (size_t k = 0; k < v.size(); ++k)
                v[k] += sj * red.basis[j][k] + sl * red.basis[l][k];
              push(std::move(v));
            }
      }
    }
  return out;
}

}  // namespace ctk
