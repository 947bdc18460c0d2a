#pragma once
// finite abelian groups presented by invariant factors, their characters,
// homomorphisms between powers, and formal integer combinations of
// homomorphisms (the sigma algebra that drives pullback operators).

#include "cubictk/rat.hpp"

namespace ctk {

class AbGroup {
 public:
  AbGroup() = default;
  // validates the divisibility chain d1 | d2 | ..., each di >= 2
  static AbGroup invariant_factors(std::vector<long> d);
  // internal factor lists (powers, products); no chain requirement
  static AbGroup raw_factors(std::vector<long> d);

  const std::vector<long>& factors() const { return d_; }
  size_t ngens() const { return d_.size(); }
  Int order() const;
  long exponent() const;
  AbGroup power(long n) const;  // G^n as a factor list

  // element enumeration: mixed radix, first coordinate fastest
  Int nelems() const { return order(); }
  std::vector<long> elem_at(const Int& idx) const;
  Int elem_index(const std::vector<long>& x) const;
  std::vector<long> add(const std::vector<long>& x, const std::vector<long>& y) const;
  std::vector<long> zero() const { return std::vector<long>(d_.size(), 0); }

  bool operator==(const AbGroup& o) const { return d_ == o.d_; }
  bool operator!=(const AbGroup& o) const { return !(*this == o); }

 private:
  std::vector<long> d_;
};

// character of an AbGroup with values in mu_m, m = exponent of the group:
// chi(x) = zeta_m^{sum_i e_i x_i (m / d_i)}
struct GChar {
  std::vector<long> orders;  // group factor list
  std::vector<long> e;       // 0 <= e_i < d_i

  long value_exponent(const std::vector<long>& x, long m) const;  // exponent of zeta_m
  GChar mul(const GChar& o) const;
  GChar inv() const;
  GChar power_scalar(long a) const;  // e -> a e (galois twist)
  bool is_trivial() const;
  bool operator==(const GChar& o) const { return orders == o.orders && e == o.e; }
  bool operator<(const GChar& o) const { return e < o.e; }
};

// characters of the group as a list, mixed radix indexed
Int char_count(const AbGroup& g);
GChar char_at(const AbGroup& g, const Int& idx);
Int char_index(const AbGroup& g, const GChar& c);

// homomorphism between abelian groups given on generators: column j is the
// image of the j-th source generator. validity requires d_j * col_j = 0 in
// the target.
struct GroupHom {
  std::vector<long> src;  // source factor list
  std::vector<long> tgt;  // target factor list
  std::vector<std::vector<long>> m;  // tgt.size() x src.size()

  static GroupHom make(const AbGroup& s, const AbGroup& t, std::vector<std::vector<long>> mat);
  std::vector<long> apply(const std::vector<long>& x) const;
  GroupHom compose_after(const GroupHom& inner) const;  // this o inner
  GChar pullback(const GChar& chi) const;  // chi o this, a character of src
  bool operator==(const GroupHom& o) const { return src == o.src && tgt == o.tgt && m == o.m; }
  bool operator<(const GroupHom& o) const;
};

// embedding G -> G^n supported on a subset: g goes to g in the coordinates
// of I and 0 elsewhere
GroupHom subset_embedding(const AbGroup& g, long n, const std::vector<int>& in_subset);
// coordinate permutation G^n -> G^n
GroupHom perm_hom(const AbGroup& g, long n, const std::vector<size_t>& perm);
GroupHom identity_hom(const AbGroup& g, long n);

// formal Z-linear combination of homomorphisms G^r -> G^s. composition of
// terms with mismatched shapes is zero by convention.
struct SigmaElt {
  std::vector<long> src, tgt;
  std::vector<std::pair<GroupHom, Int>> terms;  // canonicalized: sorted homs, no zero coeffs

  static SigmaElt zero(const AbGroup& g, long r, long s);
  void add_term(const GroupHom& h, const Int& c);
  void canonicalize();
  SigmaElt compose(const SigmaElt& inner) const;  // this . inner, zero on mismatch
  bool operator==(const SigmaElt& o) const { return src == o.src && tgt == o.tgt && terms == o.terms; }
};

// the alternating sum s_n = sum_{I subset {1..n}} (-1)^{n - #I} [I] with
// [I] the subset embedding G -> G^n (empty subset contributes the zero map)
SigmaElt s_elt(const AbGroup& g, long n);
// z_sigma = [perm] - [id] for a coordinate permutation of G^n
SigmaElt z_perm(const AbGroup& g, long n, const std::vector<size_t>& perm);
// the degree-(n+1) coboundary combination used by the cocycle test:
// [merge12] - [drop1] + [drop3] - [merge23], maps G^n -> G^{n+1}
SigmaElt z_cocycle(const AbGroup& g, long n);

}  // namespace ctk
