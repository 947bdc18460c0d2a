#include "cubictk/chartable.hpp"

#include <sstream>

namespace ctk {

CharTable CharTable::ones(const AbGroup& h, long m) {
  CharTable t;
  t.group = h;
  t.m = m;
  if (m % h.exponent() != 0) throw input_error("CharTable: root order must be divisible by exponent");
  t.vals.assign((size_t)to_long(h.order()), CycF(m, Rat(1)));
  return t;
}

CharTable CharTable::from_group_ring(const AbGroup& h, long m,
                                     const std::vector<Rat>& coeffs) {
  CharTable t = ones(h, m);
  Int n = h.order();
  if ((Int)(long)coeffs.size() != n) throw input_error("from_group_ring: coefficient count");
  for (Int ci = 0; ci < n; ++ci) {
    GChar chi = char_at(h, ci);
    CycF acc(m);
    for (Int ei = 0; ei < n; ++ei) {
      const Rat& c = coeffs[(size_t)to_long(ei)];
      if (c == 0) continue;
      long ex = chi.value_exponent(h.elem_at(ei), m);
      acc = acc + c * CycF::zeta(m, ex);
    }
    t.vals[(size_t)to_long(ci)] = acc;
  }
  return t;
}

const CycF& CharTable::value(const GChar& chi) const {
  return vals[(size_t)to_long(group.elem_index(chi.e))];
}
CycF& CharTable::value_mut(const GChar& chi) {
  return vals[(size_t)to_long(group.elem_index(chi.e))];
}

bool CharTable::all_invertible() const {
  for (auto& v : vals)
    if (v.is_zero()) return false;
  return true;
}

CharTable CharTable::mul(const CharTable& o) const {
  if (!(group == o.group) || m != o.m) throw input_error("CharTable::mul: mixed domains");
  CharTable t = *this;
  for (size_t i = 0; i < vals.size(); ++i) t.vals[i] = vals[i] * o.vals[i];
  return t;
}

CharTable CharTable::inverse() const {
  CharTable t = *this;
  for (auto& v : t.vals) v = v.inverse();
  return t;
}

bool CharTable::operator==(const CharTable& o) const {
  return group == o.group && m == o.m && vals == o.vals;
}

bool CharTable::galois_equivariant(std::string* witness) const {
  Int n = group.order();
  for (long a = 1; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    for (Int ci = 0; ci < n; ++ci) {
      GChar chi = char_at(group, ci);
      GChar chia = chi.power_scalar(a);
      if (!(value(chia) == value(chi).galois(a))) {
        if (witness) {
          std::ostringstream os;
          os << "equivariance fails at character index " << ci.get_str()
             << " under zeta -> zeta^" << a;
          *witness = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

CharTable lambda_z(const SigmaElt& z, const CharTable& a, const AbGroup& base_group, long s) {
  AbGroup tgt = base_group.power(s);
  if (z.tgt != tgt.factors()) throw input_error("lambda_z: z target mismatch");
  if (z.src != a.group.factors()) throw input_error("lambda_z: table domain mismatch");
  CharTable out = CharTable::ones(tgt, a.m);
  Int n = tgt.order();
  for (Int ci = 0; ci < n; ++ci) {
    GChar psi = char_at(tgt, ci);
    CycF acc(a.m, Rat(1));
    for (auto& [h, c] : z.terms) {
      const CycF& base = a.value(h.pullback(psi));
      acc = acc * base.pow(c);
    }
    out.vals[(size_t)to_long(ci)] = acc;
  }
  return out;
}

RatCharFun RatCharFun::zeros(const AbGroup& h) {
  RatCharFun f;
  f.group = h;
  f.vals.assign((size_t)to_long(h.order()), Rat(0));
  return f;
}

const Rat& RatCharFun::value(const GChar& chi) const {
  return vals[(size_t)to_long(group.elem_index(chi.e))];
}
Rat& RatCharFun::value_mut(const GChar& chi) {
  return vals[(size_t)to_long(group.elem_index(chi.e))];
}

RatCharFun lambda_z_additive(const SigmaElt& z, const RatCharFun& a,
                             const AbGroup& base_group, long s) {
  AbGroup tgt = base_group.power(s);
  if (z.tgt != tgt.factors()) throw input_error("lambda_z_additive: z target mismatch");
  if (z.src != a.group.factors()) throw input_error("lambda_z_additive: domain mismatch");
  RatCharFun out = RatCharFun::zeros(tgt);
  Int n = tgt.order();
  for (Int ci = 0; ci < n; ++ci) {
    GChar psi = char_at(tgt, ci);
    Rat acc(0);
    for (auto& [h, c] : z.terms) acc += Rat(c) * a.value(h.pullback(psi));
    out.vals[(size_t)to_long(ci)] = acc;
  }
  return out;
}

CharTable theta_direct(const CharTable& a, long n) {
  const AbGroup& g = a.group;
  AbGroup gn = g.power(n);
  CharTable out = CharTable::ones(gn, a.m);
  Int total = gn.order();
  size_t k = g.ngens();
  for (Int ci = 0; ci < total; ++ci) {
    GChar psi = char_at(gn, ci);
    // split psi into its n component characters on G
    std::vector<GChar> comp(n);
    for (long b = 0; b < n; ++b) {
      comp[b].orders = g.factors();
      comp[b].e.assign(psi.e.begin() + b * k, psi.e.begin() + (b + 1) * k);
    }
    CycF acc(a.m, Rat(1));
    for (long mask = 0; mask < (1L << n); ++mask) {
      GChar prod;
      prod.orders = g.factors();
      prod.e.assign(k, 0);
      int pc = 0;
      for (long b = 0; b < n; ++b)
        if (mask & (1L << b)) { prod = prod.mul(comp[b]); ++pc; }
      const CycF& v = a.value(prod);
      if ((n - pc) % 2 == 0) acc = acc * v;
      else acc = acc * v.inverse();
    }
    out.vals[(size_t)to_long(ci)] = acc;
  }
  return out;
}

}  // namespace ctk
