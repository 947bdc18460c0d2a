#include "cubictk/rroch.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ctk {

namespace {

long element_order(const AbGroup& g, const std::vector<long>& x) {
  const auto& f = g.factors();
  long ord = 1;
  for (size_t j = 0; j < f.size(); ++j) {
    long xy = lmod(j < x.size() ? x[j] : 0, f[j]);
    ord = std::lcm(ord, f[j] / std::gcd(f[j], xy));
  }
  return ord;
}

}  // namespace

void branch_validate(const BranchData& bd) {
  if (bd.d < 1) throw input_error("branch data: dimension must be at least 1");
  size_t nc = bd.components.size();
  if (nrows(bd.inter) != nc)
    throw input_error("branch data: intersection matrix has wrong row count");
  for (size_t i = 0; i < nc; ++i) {
    if (bd.inter[i].size() != nc)
      throw input_error("branch data: intersection matrix not square");
    if (bd.inter[i][i] != bd.components[i].self_intersection)
      throw input_error("branch data: diagonal disagrees with self intersections");
    for (size_t j = 0; j < i; ++j)
      if (bd.inter[i][j] != bd.inter[j][i])
        throw input_error("branch data: intersection matrix not symmetric");
  }
  Int gorder = bd.group.order();
  for (const auto& y : bd.components) {
    if (y.inertia_order < 1)
      throw input_error("branch data: inertia order must be positive");
    if (y.inertia_order == 1) {
      if (!y.inertia_gen.empty() && element_order(bd.group, y.inertia_gen) != 1)
        throw input_error("branch data: unramified component carries a nontrivial generator");
      continue;
    }
    if (y.inertia_gen.size() != (size_t)bd.group.ngens())
      throw input_error("branch data: inertia generator has wrong coordinate count");
    if (element_order(bd.group, y.inertia_gen) != y.inertia_order)
      throw input_error("branch data: inertia generator order mismatch");
    if (gcd(y.phi_exponent, y.inertia_order) != 1)
      throw input_error("branch data: cotangent character not faithful on inertia");
    if (gorder % y.inertia_order != 0)
      throw input_error("branch data: inertia order does not divide the group order");
  }
  if (!bd.fiber_multiplicities.empty()) {
    if (bd.fiber_multiplicities.size() != nc)
      throw input_error("branch data: fiber multiplicity count mismatch");
    for (size_t i = 0; i < nc; ++i) {
      Int s = 0;
      for (size_t j = 0; j < nc; ++j) s += bd.fiber_multiplicities[j] * bd.inter[i][j];
      if (s != 0) throw input_error("branch data: fibral intersection relation fails");
    }
  }
}

Rat g_value(const BranchData& bd, size_t comp, const GChar& chi) {
  if (comp >= bd.components.size())
    throw input_error("g_value: component index out of range");
  const BranchComponent& y = bd.components[comp];
  long e = y.inertia_order;
  if (e == 1) return Rat(0);
  long m = bd.group.exponent();
  long k = chi.value_exponent(y.inertia_gen, m);
  // chi(gen) is an e-th root of unity because gen has order e, so k e/m is
  // the exponent of chi(gen) on zeta_e
  if ((k * e) % m != 0)
    throw math_error("g_value: character value not an inertia-order root of unity");
  long t = lmod(k * e / m, e);
  long nn = to_long(fmod(Int(t) * invmod(Int(y.phi_exponent), Int(e)), Int(e)));
  Rat g(-nn, e);
  g.canonicalize();
  return g;
}

std::vector<Int> f_divisor(const BranchData& bd, const GChar& chi) {
  branch_validate(bd);
  Int gorder = bd.group.order();
  std::vector<Int> coeffs;
  coeffs.reserve(bd.components.size());
  for (size_t i = 0; i < bd.components.size(); ++i) {
    Rat c = g_value(bd, i, chi) * Rat(gorder);
    c.canonicalize();
    if (c.get_den() != 1)
      throw math_error("f_divisor: non-integral coefficient, inertia data invalid");
    coeffs.push_back(c.get_num());
  }
  return coeffs;
}

Rat t_pi_surface(const BranchData& bd, const GChar& chi) {
  if (bd.d != 1) throw input_error("t_pi_surface: needs d = 1");
  branch_validate(bd);
  size_t nc = bd.components.size();
  std::vector<Rat> gs(nc);
  for (size_t i = 0; i < nc; ++i) gs[i] = g_value(bd, i, chi);
  Rat acc(0);
  // ordered pairs, diagonal included
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j)
      acc += gs[i] * gs[j] * Rat(bd.inter[i][j]);
  for (size_t i = 0; i < nc; ++i)
    acc += gs[i] * Rat(bd.inter[i][i] + 2 * bd.components[i].euler_char);
  acc /= 2;
  acc.canonicalize();
  return acc;
}

DegreeTable structure_sheaf_table(const BranchData& bd) {
  if (bd.d != 1) throw input_error("structure_sheaf_table: needs d = 1");
  branch_validate(bd);
  DegreeTable table;
  size_t nc = bd.components.size();
  for (size_t i = 0; i < nc; ++i) {
    Rat todd1(bd.inter[i][i] + 2 * bd.components[i].euler_char, 2);
    todd1.canonicalize();
    table[{0, {i}}] = todd1;
    table[{1, {i}}] = Rat(0);
    for (size_t j = i; j < nc; ++j) table[{0, {i, j}}] = Rat(bd.inter[i][j]);
  }
  return table;
}

Rat t_pi_general(const BranchData& bd, const DegreeTable& table, const GChar& chi) {
  branch_validate(bd);
  size_t nc = bd.components.size();
  std::vector<Rat> gs(nc);
  for (size_t i = 0; i < nc; ++i) gs[i] = g_value(bd, i, chi);
  Rat total(0);
  Int fact = 1;
  for (long l = 1; l <= bd.d + 1; ++l) {
    fact *= l;
    if (nc == 0) break;
    std::vector<size_t> idx(l, 0);
    for (;;) {
      Rat prod(1);
      bool zero = false;
      for (long k = 0; k < l; ++k) {
        if (gs[idx[k]] == 0) { zero = true; break; }
        prod *= gs[idx[k]];
      }
      if (!zero) {
        std::vector<size_t> key(idx.begin(), idx.end());
        std::sort(key.begin(), key.end());
        Rat inner(0);
        for (long t = 0; t + l <= bd.d + 1; ++t) {
          auto it = table.find({t, key});
          if (it == table.end())
            throw input_error("t_pi_general: degree table incomplete");
          inner += it->second;
        }
        total += prod * inner / Rat(fact);
      }
      long k = l - 1;
      while (k >= 0 && ++idx[k] == nc) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  total.canonicalize();
  return total;
}

ThetaIdele main_theorem_idele(const BranchData& bd, const DegreeTable& table,
                              bool squared) {
  branch_validate(bd);
  long c = squared ? 2 : 1;
  if (!squared && bd.usual_euler_char && fmod(*bd.usual_euler_char, Int(2)) != 0)
    throw input_error("main_theorem_idele: unsquared form needs an even Euler characteristic");
  RatCharFun tf = RatCharFun::zeros(bd.group);
  Int nch = char_count(bd.group);
  for (Int i = 0; i < nch; ++i) {
    GChar chi = char_at(bd.group, i);
    tf.value_mut(chi) = t_pi_general(bd, table, chi);
  }
  long n = bd.d + 2;
  // the exponent at phi is -c T(prod (phi_i - 1)): pulling tf back through
  // the alternating sum of subset embeddings expands exactly that product
  RatCharFun ex = lambda_z_additive(s_elt(bd.group, n), tf, bd.group, n);
  for (auto& v : ex.vals) v *= -c;
  ThetaIdele out;
  out.residue_prime = bd.residue_prime;
  out.c = c;
  out.big_group = bd.group.power(n);
  out.exponents = std::move(ex);
  return out;
}

IntegralityReport integrality_check(const BranchData& bd, const DegreeTable& table) {
  branch_validate(bd);
  Int scale = 1;
  for (long i = 0; i <= bd.d; ++i) scale *= bd.group.order();
  IntegralityReport rep;
  Int nch = char_count(bd.group);
  for (Int i = 0; i < nch; ++i) {
    Rat v = t_pi_general(bd, table, char_at(bd.group, i)) * Rat(scale);
    v.canonicalize();
    if (v.get_den() != 1) {
      rep.all_integral = false;
      rep.violations.push_back({i, v});
    }
  }
  return rep;
}

MPoly telescope_residual(long n, long q) {
  if (n < 1 || n > 14) throw input_error("telescope: variable count out of range");
  if (q < 0 || q > 16) throw input_error("telescope: exponent out of range");
  MPoly total;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    MPoly cur;
    cur[std::vector<long>(n, 0)] = 1;
    for (long step = 0; step < q; ++step) {
      MPoly next;
      for (const auto& [e, co] : cur)
        for (long i = 0; i < n; ++i)
          if (mask >> i & 1) {
            std::vector<long> e2 = e;
            ++e2[i];
            next[e2] += co;
          }
      cur = std::move(next);
    }
    int sgn = (__builtin_popcountl(mask) & 1) ? -1 : 1;
    for (const auto& [e, co] : cur) {
      auto it = total.emplace(e, Int(0)).first;
      it->second += sgn * co;
      if (it->second == 0) total.erase(it);
    }
  }
  return total;
}

bool telescope_check(long n, long q) { return telescope_residual(n, q).empty(); }

std::string mpoly_str(const MPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, co] : p) {
    if (!first) os << (co >= 0 ? " + " : " - ");
    else if (co < 0) os << "-";
    first = false;
    Int a = abs(co);
    bool wrote = false;
    if (a != 1) { os << a.get_str(); wrote = true; }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "X" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

}  // namespace ctk
