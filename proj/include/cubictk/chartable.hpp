#pragma once
// galois equivariant functions from the character group of a finite abelian
// group into Q(zeta_m)^*, together with the pullback operator lambda_z along
// formal combinations of group homomorphisms.

#include "cubictk/cyclopoly.hpp"
#include "cubictk/group.hpp"

namespace ctk {

struct CharTable {
  AbGroup group;             // the group H whose characters are the domain
  long m = 1;                // value root order, multiple of exponent(H)
  std::vector<CycF> vals;    // indexed by char_index, all of order m

  static CharTable ones(const AbGroup& h, long m);
  // table of a group ring element sum_h coeff(h) [h]: value at chi is
  // sum_h coeff(h) chi(h). equivariant by construction. requires all values
  // nonzero to qualify as a table into K^*.
  static CharTable from_group_ring(const AbGroup& h, long m,
                                   const std::vector<Rat>& coeffs_by_elem_index);

  const CycF& value(const GChar& chi) const;
  CycF& value_mut(const GChar& chi);
  bool all_invertible() const;

  CharTable mul(const CharTable& o) const;
  CharTable inverse() const;
  bool operator==(const CharTable& o) const;

  // checks value(chi^a) = value(chi)^{sigma_a} for all a coprime to m
  bool galois_equivariant(std::string* witness = nullptr) const;
};

// lambda_z: tables on G^r -> tables on G^s for z in the hom algebra,
// value at psi = prod over terms (h, c) of a(psi o h)^c.
// requires invertible values when negative multiplicities occur.
CharTable lambda_z(const SigmaElt& z, const CharTable& a, const AbGroup& base_group, long s);

// additive counterpart: rational valued functions on the character group,
// pulled back by z with multiplicities acting by scaling. this is how
// valuation exponents and the local Riemann-Roch functions transform.
struct RatCharFun {
  AbGroup group;
  std::vector<Rat> vals;  // indexed by char_index

  static RatCharFun zeros(const AbGroup& h);
  const Rat& value(const GChar& chi) const;
  Rat& value_mut(const GChar& chi);
  bool operator==(const RatCharFun& o) const { return group == o.group && vals == o.vals; }
};
RatCharFun lambda_z_additive(const SigmaElt& z, const RatCharFun& a,
                             const AbGroup& base_group, long s);

// direct product formula for the alternating pullback: value at
// psi = (psi_1, ..., psi_n) is prod_{I subset {1..n}} a(prod_{i in I}
// psi_i)^{(-1)^{n-#I}}. computed without going through lambda_z; used to
// cross check the operator path.
CharTable theta_direct(const CharTable& a, long n);

}  // namespace ctk
