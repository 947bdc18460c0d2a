#include "cubictk/classgroup.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace ctk {

long budget_scale() {
  static long cached = [] {
    const char* s = std::getenv("CUBICTK_BUDGET");
    if (!s) return 1L;
    long v = std::atol(s);
    return v >= 1 ? v : 1L;
  }();
  return cached;
}

// ---------------------------------------------------------------------------
// factor base

static std::vector<FBPrime> build_factor_base(long r, long fb_bound) {
  long bound = fb_bound > 0 ? fb_bound : std::max(200L, 2 * r * r);
  std::vector<FBPrime> fb;

  // the ramified slot comes first
  FBPrime lam;
  lam.q = r;
  lam.f = 1;
  lam.ramified = true;
  lam.ideal = lambda_ideal(r);
  fb.push_back(std::move(lam));

  for (long q = 2; q <= bound; ++q) {
    if (q == r || !is_prime(q)) continue;
    long f = ord_mod(q % r, r);
    if (pow_int(Int(q), (unsigned long)f) > bound) continue;
    if (f == 1) {
      for (uint64_t c : cyclotomic_roots_mod_p(r, (uint64_t)q)) {
        FBPrime p;
        p.q = q;
        p.f = 1;
        p.root = (long)c;
        p.ideal = prime_from_root(r, q, c);
        fb.push_back(std::move(p));
      }
    } else {
      for (auto& g : split_cyclotomic_mod_p(r, (uint64_t)q)) {
        FBPrime p;
        p.q = q;
        p.f = f;
        p.gpoly = g.c;
        p.ideal = prime_from_poly(r, q, g);
        fb.push_back(std::move(p));
      }
    }
  }
  return fb;
}

// valuation of the element x at the factor base prime fb[i]
static long fb_val(const ClassGroup& cg, size_t i, const CycInt& x) {
  const FBPrime& p = cg.fb[i];
  if (p.ramified) return val_at_lambda(x);
  if (p.f == 1) return val_at_split(cg.r, p.q, (uint64_t)p.root, x);
  return val_by_membership(p.ideal, x);
}

// largest k with A contained in P^k
static long ideal_val(const CycIdeal& A, const CycIdeal& P) {
  long v = 0;
  CycIdeal pk = P;
  for (;;) {
    bool inside = true;
    for (size_t row = 0; row < nrows(A.h); ++row)
      if (!hnf_member(pk.h, A.h[row])) { inside = false; break; }
    if (!inside) return v;
    ++v;
    if (v > 4096) throw math_error("ideal_val: runaway valuation");
    pk = ideal_mul(pk, P);
  }
}

// ---------------------------------------------------------------------------
// class group struct plumbing

std::vector<Int> ClassGroup::shape() const {
  std::vector<Int> s;
  for (size_t i : nontrivial) s.push_back(diag[i]);
  return s;
}

ClsVec ClassGroup::class_of_fb_vector(const std::vector<Int>& exps) const {
  if (exps.size() != fb.size()) throw input_error("class_of_fb_vector: wrong length");
  ClsVec out;
  out.reserve(nontrivial.size());
  for (size_t i : nontrivial) {
    Int acc = 0;
    for (size_t j = 0; j < exps.size(); ++j)
      if (exps[j] != 0 && V[j][i] != 0) acc += exps[j] * V[j][i];
    out.push_back(fmod(acc, diag[i]));
  }
  return out;
}

ClsVec ClassGroup::class_of_fb_prime(size_t idx) const {
  std::vector<Int> e(fb.size(), 0);
  e.at(idx) = 1;
  return class_of_fb_vector(e);
}

bool ClassGroup::is_zero(const ClsVec& c) const {
  for (auto& x : c)
    if (x != 0) return false;
  return true;
}

ClsVec ClassGroup::add(const ClsVec& a, const ClsVec& b) const {
  ClsVec out(a);
  for (size_t i = 0; i < nontrivial.size(); ++i)
    out[i] = fmod(out[i] + b[i], diag[nontrivial[i]]);
  return out;
}

ClsVec ClassGroup::neg(const ClsVec& a) const {
  ClsVec out(a);
  for (size_t i = 0; i < nontrivial.size(); ++i) out[i] = fmod(-out[i], diag[nontrivial[i]]);
  return out;
}

ClsVec ClassGroup::scale(const Int& k, const ClsVec& a) const {
  ClsVec out(a);
  for (size_t i = 0; i < nontrivial.size(); ++i) out[i] = fmod(k * out[i], diag[nontrivial[i]]);
  return out;
}

std::vector<Int> ClassGroup::lift(const ClsVec& c) const {
  if (c.size() != nontrivial.size()) throw input_error("lift: wrong length");
  std::vector<Int> w(fb.size(), 0);
  for (size_t t = 0; t < nontrivial.size(); ++t) {
    size_t i = nontrivial[t];
    if (c[t] == 0) continue;
    for (size_t j = 0; j < fb.size(); ++j) w[j] += c[t] * Vinv[i][j];
  }
  return w;
}

Int ClassGroup::exponent() const {
  Int e = 1;
  for (size_t i : nontrivial) e = lcm(e, diag[i]);
  return e;
}

std::vector<size_t> ClassGroup::galois_perm(long s) const {
  s = lmod(s, r);
  if (s == 0) throw input_error("galois_perm: exponent divisible by the ramified prime");
  long sinv = to_long(invmod(Int(s), Int(r)));
  std::vector<size_t> perm(fb.size());
  for (size_t i = 0; i < fb.size(); ++i) {
    const FBPrime& p = fb[i];
    if (p.ramified) {
      // (1 - zeta^s) differs from (1 - zeta) by a cyclotomic unit
      perm[i] = i;
      continue;
    }
    bool found = false;
    if (p.f == 1) {
      // zeta maps to zeta^s, so the residue of zeta moves from c to c^{1/s}
      uint64_t croot = powmod_u64((uint64_t)p.root, (uint64_t)sinv, (uint64_t)p.q);
      for (size_t k = 0; k < fb.size(); ++k)
        if (fb[k].q == p.q && fb[k].root == (long)croot) { perm[i] = k; found = true; break; }
    } else {
      CycIdeal img = ideal_galois(p.ideal, s);
      for (size_t k = 0; k < fb.size(); ++k)
        if (fb[k].q == p.q && fb[k].ideal == img) { perm[i] = k; found = true; break; }
    }
    if (!found) throw math_error("galois_perm: conjugate prime missing from base");
  }
  return perm;
}

ClsVec ClassGroup::galois_on_class(long s, const ClsVec& c) const {
  std::vector<Int> w = lift(c);
  std::vector<size_t> perm = galois_perm(s);
  std::vector<Int> w2(fb.size(), 0);
  for (size_t i = 0; i < fb.size(); ++i) w2[perm[i]] += w[i];
  return class_of_fb_vector(w2);
}

// ---------------------------------------------------------------------------
// relation machinery

std::optional<std::vector<Int>> factor_over_fb(const ClassGroup& cg, const CycInt& x) {
  Int n = cyc_norm(x);
  if (n == 0) throw math_error("factor_over_fb: zero element");
  if (n < 0) n = -n;

  std::vector<std::pair<long, long>> support;  // (q, v_q of the norm)
  Int rem = n;
  long lastq = 0;
  for (auto& p : cg.fb) {
    if (p.q == lastq) continue;
    lastq = p.q;
    long v = 0;
    while (rem % p.q == 0) { rem /= p.q; ++v; }
    if (v) support.push_back({p.q, v});
  }
  if (rem != 1) return std::nullopt;

  std::vector<Int> exps(cg.fb.size(), 0);
  for (auto& [q, vq] : support) {
    long seen = 0;
    for (size_t i = 0; i < cg.fb.size(); ++i) {
      if (cg.fb[i].q != q) continue;
      long v = fb_val(cg, i, x);
      exps[i] = v;
      seen += cg.fb[i].f * v;
    }
    if (seen != vq) throw math_error("factor_over_fb: valuation bookkeeping mismatch");
  }
  return exps;
}

ClassGroup compute_class_group(long r, long fb_bound) {
  if (r < 3 || !is_prime(r)) throw input_error("compute_class_group: r must be an odd prime");
  ClassGroup cg;
  cg.r = r;
  cg.fb = build_factor_base(r, fb_bound);
  cg.hminus = h_minus(r);
  cg.hplus_assumed = true;

  const size_t nfb = cg.fb.size();

  std::vector<std::vector<size_t>> perms;
  for (long s = 1; s < r; ++s) perms.push_back(cg.galois_perm(s));

  // relation rows live in an HNF-compressed echelon so the matrix never
  // grows past nfb rows no matter how many relations come in
  ZMat echelon;
  std::vector<std::vector<Int>> pending;
  auto push_with_conjugates = [&](const std::vector<Int>& row) {
    for (auto& perm : perms) {
      std::vector<Int> img(nfb, 0);
      for (size_t i = 0; i < nfb; ++i)
        if (row[i] != 0) img[perm[i]] += row[i];
      pending.push_back(std::move(img));
    }
  };
  auto absorb = [&]() {
    if (pending.empty()) return;
    ZMat all = echelon;
    for (auto& row : pending) all.push_back(std::move(row));
    pending.clear();
    echelon = hnf(all);
  };

  // (1 - zeta) is generated by a single element
  {
    std::vector<Int> row(nfb, 0);
    row[0] = 1;
    pending.push_back(std::move(row));
  }
  // every rational prime whose slots all sit in the base factors completely,
  // so the product of its slots is principal
  {
    long lastq = 0;
    for (size_t i = 1; i < nfb; ++i) {
      if (cg.fb[i].q == lastq) continue;
      lastq = cg.fb[i].q;
      std::vector<Int> row(nfb, 0);
      for (size_t j = 0; j < nfb; ++j)
        if (cg.fb[j].q == lastq) row[j] = 1;
      pending.push_back(std::move(row));
    }
  }
  absorb();

  auto try_accept = [&]() -> bool {
    if (nrows(echelon) < nfb) return false;
    SnfResult s = snf(echelon, true);
    if (s.rank < nfb) return false;
    Int order = 1;
    for (auto& d : s.diag) order *= d;
    if (order != cg.hminus) return false;
    cg.diag = s.diag;
    cg.V = std::move(s.V);
    cg.Vinv = std::move(s.Vinv);
    cg.nontrivial.clear();
    for (size_t i = 0; i < cg.diag.size(); ++i)
      if (cg.diag[i] > 1) cg.nontrivial.push_back(i);
    cg.h = order;
    return true;
  };

  const bool trace = std::getenv("CUBICTK_TRACE") != nullptr;
  Rng rng(0x5eedULL ^ (uint64_t)r);
  long max_rounds = 6 * budget_scale();
  for (long round = 0; round < max_rounds; ++round) {
    auto t0 = std::chrono::steady_clock::now();
    long tried = 0, smooth = 0;
    long lastq = 0;
    for (size_t i = 1; i < nfb; ++i) {
      if (cg.fb[i].q == lastq) continue;
      lastq = cg.fb[i].q;
      CycIdeal target = cg.fb[i].ideal;
      if (round > 0) {
        size_t j = 1 + rng.below(nfb - 1);
        target = ideal_mul(target, cg.fb[j].ideal);
      }
      long limit = 40 + 40 * round;
      for (auto& x : short_elements(target, round == 0 ? 1 : 2, limit)) {
        ++tried;
        auto ex = factor_over_fb(cg, x);
        if (ex) { ++smooth; push_with_conjugates(*ex); }
      }
    }
    absorb();
    if (trace) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0).count();
      std::cerr << "round " << round << ": " << smooth << "/" << tried << " smooth, echelon "
                << nrows(echelon) << "/" << nfb << ", " << ms << " ms" << std::endl;
    }
    if (try_accept()) return cg;
  }
  throw math_error("compute_class_group: relation budget exhausted for r = " + std::to_string(r));
}

const ClassGroup& class_group_cached(long r) {
  static std::map<long, ClassGroup> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, compute_class_group(r)).first;
  return it->second;
}

// ---------------------------------------------------------------------------

ClsVec class_of_ideal(const ClassGroup& cg, const CycIdeal& I) {
  if (I.r != cg.r) throw input_error("class_of_ideal: wrong ring");
  if (I.nrm == 1) return cg.zero_class();
  for (size_t i = 0; i < cg.fb.size(); ++i)
    if (cg.fb[i].ideal == I) return cg.class_of_fb_prime(i);

  // split the rational support of N(I) into base primes and outside primes.
  // base valuations of I get subtracted at the end; outside primes must have
  // their valuations matched exactly by the short element so nothing beyond
  // the base survives in the cofactor.
  std::vector<Int> ivals(cg.fb.size(), 0);
  struct AuxPrime {
    long q;
    long f;
    long root;  // f = 1 only
    CycIdeal ideal;
    long v_in_I;
  };
  std::vector<AuxPrime> aux;
  for (auto& [qi, e] : factor(I.nrm)) {
    (void)e;
    long q = to_long(qi);
    bool in_fb = false;
    for (size_t i = 0; i < cg.fb.size(); ++i)
      if (cg.fb[i].q == q) {
        ivals[i] = ideal_val(I, cg.fb[i].ideal);
        in_fb = true;
      }
    if (in_fb) continue;
    if (q == cg.r) throw math_error("class_of_ideal: ramified prime outside the base");
    long f = ord_mod(q % cg.r, cg.r);
    if (f == 1) {
      for (uint64_t c : cyclotomic_roots_mod_p(cg.r, (uint64_t)q)) {
        CycIdeal P = prime_from_root(cg.r, q, c);
        long v = ideal_val(I, P);
        aux.push_back({q, 1, (long)c, P, v});
      }
    } else {
      for (auto& g : split_cyclotomic_mod_p(cg.r, (uint64_t)q)) {
        CycIdeal P = prime_from_poly(cg.r, q, g);
        long v = ideal_val(I, P);
        aux.push_back({q, f, -1, P, v});
      }
    }
  }

  Rng rng(0xAB1DEULL ^ (uint64_t)to_long(I.nrm % (Int(1) << 31)));
  long rounds = 48 * budget_scale();
  for (long round = 0; round < rounds; ++round) {
    CycIdeal J = I;
    for (long t = 0; t < round / 8; ++t) {
      size_t j = 1 + rng.below(cg.fb.size() - 1);
      J = ideal_mul(J, cg.fb[j].ideal);
    }
    long limit = 60 + 20 * (round % 8);
    for (auto& x : short_elements(J, round < 8 ? 1 : 2, limit)) {
      Int n = cyc_norm(x);
      if (n < 0) n = -n;

      // cheap smoothness filter on the rational support
      Int rem = n;
      for (auto& ap : aux)
        while (rem % ap.q == 0) rem /= ap.q;
      long lastq = 0;
      for (auto& p : cg.fb) {
        if (p.q == lastq) continue;
        lastq = p.q;
        while (rem % p.q == 0) rem /= p.q;
      }
      if (rem != 1) continue;

      // outside primes must carry exactly the valuations of I itself
      bool ok = true;
      for (auto& ap : aux) {
        long v = ap.f == 1 ? val_at_split(cg.r, ap.q, (uint64_t)ap.root, x)
                           : val_by_membership(ap.ideal, x);
        if (v != ap.v_in_I) { ok = false; break; }
      }
      if (!ok) continue;

      std::vector<Int> exps(cg.fb.size(), 0);
      for (size_t i = 0; i < cg.fb.size(); ++i)
        if (n % cg.fb[i].q == 0) exps[i] = fb_val(cg, i, x);

      // completeness: the recorded valuations must account for the whole norm
      Int check = 1;
      for (size_t i = 0; i < cg.fb.size(); ++i)
        for (long t = 0; t < to_long(exps[i]); ++t) check *= cg.fb[i].ideal.nrm;
      for (auto& ap : aux)
        for (long t = 0; t < ap.v_in_I; ++t) check *= ap.ideal.nrm;
      if (check != n) continue;

      // (x) = I * extras * cofactor, and everything except I itself is
      // supported on the base, so [I] = [base part of I] - [base part of x]
      return cg.add(cg.class_of_fb_vector(ivals), cg.neg(cg.class_of_fb_vector(exps)));
    }
  }
  throw math_error("class_of_ideal: smooth element budget exhausted");
}

std::optional<CycInt> principal_generator(const CycIdeal& I) {
  long rounds = 3 * budget_scale();
  for (long round = 0; round < rounds; ++round) {
    long limit = 200 + 400 * round;
    for (auto& x : short_elements(I, (int)round + 1, limit)) {
      Int n = cyc_norm(x);
      if (n < 0) n = -n;
      if (n == I.nrm) return x;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<Int> ClassQuotient::shape() const {
  std::vector<Int> s;
  for (size_t i : nontrivial) s.push_back(diag[i]);
  return s;
}

Int ClassQuotient::order() const {
  Int o = 1;
  for (size_t i : nontrivial) o *= diag[i];
  return o;
}

ClsVec ClassQuotient::project(const ClsVec& c) const {
  if (c.size() != nrows(V)) throw input_error("project: wrong length");
  ClsVec out;
  for (size_t i : nontrivial) {
    Int acc = 0;
    for (size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) acc += c[j] * V[j][i];
    out.push_back(fmod(acc, diag[i]));
  }
  return out;
}

ClassQuotient invert_two(const ClassGroup& cg) {
  size_t t = cg.nontrivial.size();
  if (t == 0) return {};
  ZMat rel;
  for (size_t i = 0; i < t; ++i) {
    std::vector<Int> row(t, 0);
    row[i] = cg.diag[cg.nontrivial[i]];
    rel.push_back(std::move(row));
  }
  for (auto& P : split_prime(cg.r, 2)) {
    ClsVec c;
    bool found = false;
    for (size_t i = 0; i < cg.fb.size(); ++i)
      if (cg.fb[i].ideal == P) { c = cg.class_of_fb_prime(i); found = true; break; }
    if (!found) c = class_of_ideal(cg, P);
    rel.push_back(c);
  }
  SnfResult s = snf(rel, true);
  ClassQuotient q;
  q.diag = s.diag;
  q.V = std::move(s.V);
  q.Vinv = std::move(s.Vinv);
  for (size_t i = 0; i < q.diag.size(); ++i)
    if (q.diag[i] > 1) q.nontrivial.push_back(i);
  return q;
}

ClsVec ClassQuotient::lift(const std::vector<Int>& q) const {
  if (q.size() != nontrivial.size()) throw input_error("quotient lift: wrong length");
  std::vector<Int> w(nrows(Vinv), 0);
  for (size_t t = 0; t < nontrivial.size(); ++t) {
    size_t i = nontrivial[t];
    if (q[t] == 0) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] += q[t] * Vinv[i][j];
  }
  return w;
}

std::vector<Int> quotient_conj(const ClassGroup& cg, const ClassQuotient& quo,
                               const std::vector<Int>& q) {
  if (quo.nontrivial.empty()) return q;
  // lift to parent coordinates, conjugate there, project back. the lifted
  // representative is only defined up to inverted classes, which sigma_{-1}
  // permutes, so the projection is independent of the choice.
  ClsVec rep = quo.lift(q);
  for (size_t i = 0; i < rep.size(); ++i)
    rep[i] = fmod(rep[i], cg.diag[cg.nontrivial[i]]);
  return quo.project(cg.galois_on_class(cg.r - 1, rep));
}

// ---------------------------------------------------------------------------
// Steinitz class maps

void glattice_validate(const GLattice& m) {
  size_t ng = m.group.ngens();
  if (m.action.size() != ng) throw input_error("glattice: one action matrix per generator");
  size_t n = m.action.empty() ? 0 : nrows(m.action[0]);
  ZMat id = zmat_identity(n);
  for (size_t i = 0; i < ng; ++i) {
    if (nrows(m.action[i]) != n || (n && ncols(m.action[i]) != n))
      throw input_error("glattice: action matrices must be square of equal size");
    ZMat pw = id;
    for (long k = 0; k < m.group.factors()[i]; ++k) pw = zmat_mul(pw, m.action[i]);
    if (pw != id) throw input_error("glattice: generator order relation fails");
    for (size_t j = 0; j < i; ++j)
      if (zmat_mul(m.action[i], m.action[j]) != zmat_mul(m.action[j], m.action[i]))
        throw input_error("glattice: action matrices do not commute");
  }
}

GLattice glattice_regular(long r) {
  GLattice m;
  m.group = AbGroup::invariant_factors({r});
  ZMat a(r, std::vector<Int>(r, 0));
  // permutation matrix of g acting on the basis 1, g, ..., g^{r-1}
  for (long i = 0; i < r; ++i) a[i][(i + 1) % r] = 1;
  m.action.push_back(std::move(a));
  return m;
}

GLattice glattice_direct_sum(const GLattice& a, const GLattice& b) {
  if (!(a.group.factors() == b.group.factors()))
    throw input_error("glattice sum: group mismatch");
  GLattice out;
  out.group = a.group;
  size_t na = a.action.empty() ? 0 : nrows(a.action[0]);
  size_t nb = b.action.empty() ? 0 : nrows(b.action[0]);
  for (size_t g = 0; g < a.action.size(); ++g) {
    ZMat m(na + nb, std::vector<Int>(na + nb, 0));
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < na; ++j) m[i][j] = a.action[g][i][j];
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = 0; j < nb; ++j) m[na + i][na + j] = b.action[g][i][j];
    out.action.push_back(std::move(m));
  }
  return out;
}

GLattice glattice_from_ideal(const CycIdeal& I, long t) {
  long r = I.r;
  GLattice m;
  m.group = AbGroup::invariant_factors({r});
  // rows of the HNF basis are a Z-basis; the generator acts as zeta^t
  size_t n = r - 1;
  ZMat a;
  for (size_t i = 0; i < n; ++i) {
    CycInt row = cyc_mul_zeta_pow(cyc_from_coords(r, I.h[i]), t);
    std::vector<Int> co;
    if (!hnf_member(I.h, row.c, &co)) throw math_error("glattice_from_ideal: not zeta-stable");
    a.push_back(std::move(co));
  }
  m.action.push_back(std::move(a));
  return m;
}

namespace {

// multiplication by zeta^u on power basis coordinates: column j' holds the
// coordinates of zeta^{u+j'}
ZMat zeta_mult_matrix(long r, long u) {
  ZMat z(r - 1, std::vector<Int>(r - 1, 0));
  for (long j = 0; j < r - 1; ++j) {
    CycInt w = cyc_zeta_pow(r, lmod(u + j, r));
    for (long i = 0; i < r - 1; ++i) z[i][j] = w.c[i];
  }
  return z;
}

}  // namespace

SteinitzResult steinitz_rim(const ClassGroup& cg, const GLattice& m, long u) {
  glattice_validate(m);
  long r = cg.r;
  if (!(m.group.factors() == std::vector<long>{r}))
    throw input_error("steinitz_rim: group must be cyclic of order r");
  if (lmod(u, r) == 0) throw input_error("steinitz_rim: character must have order r");
  size_t n = m.action.empty() ? 0 : nrows(m.action[0]);
  SteinitzResult res;
  res.cls = cg.zero_class();
  if (n == 0) return res;

  // dual action on row coordinate vectors is transpose(S^{-1}) = transpose(S^{r-1})
  const ZMat& s = m.action[0];
  ZMat sinv = zmat_identity(n);
  for (long k = 0; k < r - 1; ++k) sinv = zmat_mul(sinv, s);
  ZMat d(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d[i][j] = sinv[j][i];

  // solve x d = zeta^u x over Z[zeta_r]^n by stacking power basis coordinates:
  // unknown (j', col) at index j'*n + col
  ZMat zu = zeta_mult_matrix(r, u);
  size_t big = n * (size_t)(r - 1);
  ZMat b(big, std::vector<Int>(big, 0));
  for (long j = 0; j < r - 1; ++j)
    for (size_t col = 0; col < n; ++col) {
      size_t row = (size_t)j * n + col;
      for (size_t mm = 0; mm < n; ++mm) b[row][(size_t)j * n + mm] += d[mm][col];
      for (long jp = 0; jp < r - 1; ++jp) b[row][(size_t)jp * n + col] -= zu[j][jp];
    }
  ZMat ker = zmat_right_kernel(b);
  if (ker.empty()) return res;
  if (nrows(ker) % (size_t)(r - 1) != 0)
    throw math_error("steinitz_rim: kernel rank not a multiple of r - 1");
  size_t rank = nrows(ker) / (size_t)(r - 1);

  // fold each kernel row into a vector over Z[zeta_r]
  std::vector<std::vector<CycInt>> gens;
  for (const auto& row : ker) {
    std::vector<CycInt> w;
    w.reserve(n);
    for (size_t col = 0; col < n; ++col) {
      std::vector<Int> co(r - 1);
      for (long j = 0; j < r - 1; ++j) co[j] = row[(size_t)j * n + col];
      w.push_back(cyc_from_coords(r, std::move(co)));
    }
    gens.push_back(std::move(w));
  }

  // the top wedge of the module embeds in Q(zeta) through any coordinate
  // subset where some minor survives; the minors over all generator subsets
  // then generate a fractional ideal in the Steinitz class
  std::vector<size_t> cols;
  std::vector<size_t> pick(rank);
  std::vector<CycInt> minors;
  auto minor_at = [&](const std::vector<size_t>& rowsel, const std::vector<size_t>& colsel) {
    std::vector<std::vector<CycInt>> sub(rank, std::vector<CycInt>(rank));
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = 0; j < rank; ++j) sub[i][j] = gens[rowsel[i]][colsel[j]];
    return cyc_det(sub);
  };
  auto next_subset = [](std::vector<size_t>& v, size_t bound) {
    size_t k = v.size();
    for (size_t i = k; i-- > 0;) {
      if (v[i] + (k - i) < bound) {
        ++v[i];
        for (size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  // reference column subset: first one giving any nonzero minor
  std::vector<size_t> csel(rank);
  for (size_t i = 0; i < rank; ++i) csel[i] = i;
  bool found = false;
  do {
    std::vector<size_t> rsel(rank);
    for (size_t i = 0; i < rank; ++i) rsel[i] = i;
    do {
      if (!minor_at(rsel, csel).is_zero()) { found = true; break; }
    } while (next_subset(rsel, nrows(ker)));
    if (found) break;
  } while (next_subset(csel, n));
  if (!found) throw math_error("steinitz_rim: kernel rank collapsed");

  std::vector<size_t> rsel(rank);
  for (size_t i = 0; i < rank; ++i) rsel[i] = i;
  do {
    CycInt mi = minor_at(rsel, csel);
    if (!mi.is_zero()) minors.push_back(std::move(mi));
  } while (next_subset(rsel, nrows(ker)));

  // strip integer content: principal, so the class is unchanged
  Int content = 0;
  for (const auto& mi : minors)
    for (const auto& co : mi.c) content = gcd(content, co);
  if (content > 1)
    for (auto& mi : minors)
      for (auto& co : mi.c) co /= content;

  res.rank = (long)rank;
  res.cls = class_of_ideal(cg, ideal_from_gens(r, minors));
  return res;
}

namespace {

CycInt chi_push(long r, long u, const GrpRingElt& e) {
  if (e.size() != (size_t)r) throw input_error("group ring element needs r coefficients");
  CycInt acc = cyc_zero(r);
  for (long i = 0; i < r; ++i) {
    if (e[i] == 0) continue;
    CycInt t = cyc_zeta_pow(r, lmod(u * i, r));
    for (auto& co : t.c) co *= e[i];
    acc = cyc_add(acc, t);
  }
  return acc;
}

}  // namespace

SChiClass s_chi_finite(const ClassGroup& cg, const ClassQuotient& quo,
                       const GrpRingMat& pres, long u) {
  long r = cg.r;
  if (lmod(u, r) == 0) throw input_error("s_chi_finite: character must have order r");
  size_t nrel = pres.size();
  if (nrel == 0) throw input_error("s_chi_finite: empty presentation");
  size_t ngen = pres[0].size();
  for (const auto& row : pres)
    if (row.size() != ngen) throw input_error("s_chi_finite: ragged presentation");
  if (ngen == 0 || nrel < ngen)
    throw input_error("s_chi_finite: presentation cannot have full rank");

  std::vector<std::vector<CycInt>> pushed(nrel, std::vector<CycInt>(ngen));
  for (size_t i = 0; i < nrel; ++i)
    for (size_t j = 0; j < ngen; ++j) pushed[i][j] = chi_push(r, u, pres[i][j]);

  // 0th Fitting ideal: determinants of all maximal square row selections
  std::vector<CycInt> dets;
  std::vector<size_t> sel(ngen);
  for (size_t i = 0; i < ngen; ++i) sel[i] = i;
  auto next_subset = [&](std::vector<size_t>& v) {
    size_t k = v.size();
    for (size_t i = k; i-- > 0;) {
      if (v[i] + (k - i) < nrel) {
        ++v[i];
        for (size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<std::vector<CycInt>> sub(ngen, std::vector<CycInt>(ngen));
    for (size_t i = 0; i < ngen; ++i) sub[i] = pushed[sel[i]];
    CycInt dd = cyc_det(sub);
    if (!dd.is_zero()) dets.push_back(std::move(dd));
  } while (next_subset(sel));
  if (dets.empty()) throw input_error("s_chi_finite: pushed module is infinite");

  SChiClass out;
  out.full = class_of_ideal(cg, ideal_from_gens(r, dets));
  out.localized = quo.project(out.full);
  return out;
}

FormalClass formal_symbol(long r) {
  FormalClass x;
  x.r = r;
  x.terms[1] = 1;
  return x;
}

FormalClass formal_conj(const FormalClass& x) {
  FormalClass out;
  out.r = x.r;
  for (const auto& [a, c] : x.terms) {
    if (c == 0) continue;
    out.terms[lmod(-a, x.r)] += c;
  }
  return out;
}

FormalClass dual_class(const FormalClass& x) {
  FormalClass out = formal_conj(x);
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it->second = -it->second;
    if (it->second == 0) it = out.terms.erase(it);
    else ++it;
  }
  return out;
}

ClsVec eval_formal(const ClassGroup& cg, const FormalClass& x, const ClsVec& base) {
  if (x.r != cg.r) throw input_error("eval_formal: wrong cyclotomic level");
  ClsVec acc = cg.zero_class();
  for (const auto& [a, c] : x.terms) {
    if (c == 0) continue;
    acc = cg.add(acc, cg.scale(c, cg.galois_on_class(a, base)));
  }
  return acc;
}

}  // namespace ctk
