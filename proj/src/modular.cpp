#include "cubictk/modular.hpp"

namespace ctk {

namespace {

void need_modular_pair(long p, long r) {
  if (r < 5 || !is_prime(r)) throw input_error("modular cover: r must be a prime >= 5");
  if (!is_prime(p)) throw input_error("modular cover: p must be prime");
  if (lmod(p, 24) != 1) throw input_error("modular cover: need p = 1 mod 24");
  if (((p - 1) / 2) % r != 0) throw input_error("modular cover: need r | (p-1)/2");
}

}  // namespace

BranchData build_modular_branch(long p, long r) {
  need_modular_pair(p, r);
  Int m((p - 1) / 12);
  long g0 = (p - 13) / 12;

  BranchData bd;
  bd.group = AbGroup::invariant_factors({r});
  bd.d = 1;
  bd.residue_prime = p;

  BranchComponent d0;
  d0.name = "D0";
  d0.inertia_order = r;
  d0.inertia_gen = {1};
  // the cotangent character sends the generator to zeta_r^{-1}: this is what
  // makes g(chi0^{-a}, D0) = -{a}/r and reproduces the closed formula
  d0.phi_exponent = r - 1;
  d0.self_intersection = -m;
  d0.euler_char = 1;

  BranchComponent dinf;
  dinf.name = "Dinf";
  dinf.inertia_order = 1;
  dinf.self_intersection = -m;
  dinf.euler_char = 1;

  bd.components = {d0, dinf};
  bd.inter = {{-m, m}, {m, -m}};
  bd.fiber_multiplicities = {Int(1), Int(1)};
  bd.usual_euler_char = Int(1 - g0);
  branch_validate(bd);
  return bd;
}

Rat t_equ1(long p, long r, long a) {
  long aa = lmod(a, r);
  Rat quad(Int(aa) * aa, Int(2) * r * r);
  Rat lin(Int(aa), Int(2) * r);
  Rat v = Rat(Int(1 - p), Int(12)) * (quad - lin) - Rat(Int(aa), Int(r));
  v.canonicalize();
  return v;
}

TCorrections t_corrections(long p, long r, long a, long k) {
  need_modular_pair(p, r);
  if (lmod(p, 24 * r) != 1) throw input_error("t_corrections: need p = 1 mod 24r");
  if (k < 1) throw input_error("t_corrections: precision must be positive");
  TCorrections out;
  out.a = lmod(a, r);
  out.k = k;
  if (out.a == 0) {
    out.t2 = Rat(0);
    out.t1_scaled = 0;
    out.r_t2 = 0;
    return out;
  }
  out.t2 = Rat(Int(-out.a), Int(r));
  out.t2.canonicalize();
  out.r_t2 = Int(-out.a);
  Int am = Int(1 - p) / 24;  // exact: 24 | p-1
  Int om = teichmuller(r, out.a, k + 2);
  out.t1_scaled = fmod(am * om * om, pow_int(Int(r), (unsigned long)k));
  // r | (1-p)/24 under the running congruence, so r^2 T1 has positive
  // r-valuation; anything else means the hypothesis check above is broken
  if (out.t1_scaled % r != 0) throw math_error("t_corrections: r-integrality lost");
  return out;
}

BetaIdele beta_idele(long p, long r, long k) {
  need_modular_pair(p, r);
  if (lmod(p, 24 * r) != 1) throw input_error("beta_idele: need p = 1 mod 24r");
  if (k < 1) throw input_error("beta_idele: precision must be positive");
  Int am = Int(1 - p) / 24;
  Int r2 = Int(r) * r;
  Int rk = pow_int(Int(r), (unsigned long)k);
  if (am % r != 0) throw math_error("beta_idele: hypothesis bookkeeping broken");

  BetaIdele b;
  b.p = p;
  b.r = r;
  b.k = k;
  for (long a = 0; a < r; ++a) {
    BetaExponent e;
    e.a = a;
    if (a == 0) {
      e.away_from_r = Rat(0);
      e.at_r = 0;
      b.exps.push_back(std::move(e));
      continue;
    }
    Rat away = -t_equ1(p, r, a) + Rat(Int(-a), Int(r));
    away.canonicalize();
    if (r2 % away.get_den() != 0)
      throw math_error("beta_idele: exponent not integral away from r");
    e.away_from_r = away;

    // at r the corrected total is am (om^2 - a^2)/r^2 + (am/r) a, both terms
    // exactly integral under the congruence
    Int om = teichmuller(r, a, k + 2);
    Int d = am * (om * om - Int(a) * a);
    if (d % r2 != 0) throw math_error("beta_idele: exponent not r-integral");
    e.at_r = fmod(d / r2 + (am / r) * a, rk);
    b.exps.push_back(std::move(e));
  }
  return b;
}

BetaProductExponent beta_product_exponent(const BetaIdele& b, const std::vector<long>& as) {
  size_t n = as.size();
  if (n == 0 || n > 24) throw input_error("beta_product_exponent: bad tuple length");
  BetaProductExponent out;
  out.away_from_r = Rat(0);
  out.at_r = 0;
  Int rk = pow_int(Int(b.r), (unsigned long)b.k);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    long tot = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) tot += lmod(as[i], b.r);
    const BetaExponent& e = b.exps[(size_t)lmod(tot, b.r)];
    int sgn = ((n - (size_t)__builtin_popcountl(mask)) & 1) ? -1 : 1;
    out.away_from_r += sgn * e.away_from_r;
    out.at_r += sgn * e.at_r;
  }
  out.away_from_r.canonicalize();
  if (out.away_from_r.get_den() != 1)
    throw math_error("beta_product_exponent: theta product exponent not integral");
  out.at_r = fmod(out.at_r, rk);
  return out;
}

LatticeClassResult lattice_steinitz_class(long p, long r, long u) {
  need_modular_pair(p, r);
  LatticeClassResult res;
  res.p = p;
  res.r = r;
  res.n_chi = Int(p - 25) / 12;

  const ClassGroup& cg = class_group_cached(r);
  StickelbergerElt th = theta2_build(r, p);
  CycIdeal pc = p_chi(r, p, u);
  ClsVec base = class_of_ideal(cg, pc);
  res.ideal_class = apply_stickelberger(th, base, cg);
  res.is_free = cg.is_zero(res.ideal_class);
  res.class_group_shape = cg.shape();
  res.hplus_assumed = cg.hplus_assumed;
  res.weak_hypothesis = th.weak_hypothesis;
  return res;
}

namespace {

std::vector<long> group_neg(const AbGroup& g, const std::vector<long>& x) {
  std::vector<long> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = lmod(-x[i], g.factors()[i]);
  return out;
}

}  // namespace

bool bsd_relation_raw(const AbGroup& cl, const std::vector<long>& theta,
                      const std::vector<long>& sha, const std::vector<long>& mw,
                      const GroupHom& conj) {
  if (conj.src != cl.factors() || conj.tgt != cl.factors())
    throw input_error("bsd_relation: involution not an endomorphism of the class group");
  size_t n = cl.factors().size();
  if (theta.size() != n || sha.size() != n || mw.size() != n)
    throw input_error("bsd_relation: class coordinate length mismatch");
  std::vector<long> lhs = conj.apply(theta);
  std::vector<long> rhs = cl.add(sha, group_neg(cl, conj.apply(mw)));
  rhs = cl.add(rhs, group_neg(cl, mw));
  return lhs == rhs;
}

bool bsd_relation(const ClassGroup& cg, const ClassQuotient& quo, long p, long r,
                  const std::vector<Int>& sha, const std::vector<Int>& mw) {
  if (cg.r != r) throw input_error("bsd_relation: class group level mismatch");
  size_t n = quo.nontrivial.size();
  if (sha.size() != n || mw.size() != n)
    throw input_error("bsd_relation: classes must live in the localized quotient");
  StickelbergerElt th = theta2_build(r, p);
  ClsVec base = class_of_ideal(cg, p_chi(r, p, 1));
  std::vector<Int> theta_q = quo.project(apply_stickelberger(th, base, cg));

  auto qneg = [&](const std::vector<Int>& x) {
    std::vector<Int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = fmod(-x[i], quo.diag[quo.nontrivial[i]]);
    return out;
  };
  auto qadd = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = fmod(x[i] + y[i], quo.diag[quo.nontrivial[i]]);
    return out;
  };
  std::vector<Int> lhs = quotient_conj(cg, quo, theta_q);
  std::vector<Int> rhs = qadd(sha, qadd(qneg(quotient_conj(cg, quo, mw)), qneg(mw)));
  return lhs == rhs;
}

}  // namespace ctk
