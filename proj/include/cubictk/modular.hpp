#pragma once
// the degree r modular cover pipeline: branch data over a prime p, the
// closed surface evaluation, the Teichmuller corrections and the beta idele,
// the Steinitz class of the weight two eigenlattice, and the assembler for
// the conjectural class relation.

#include "cubictk/classgroup.hpp"
#include "cubictk/rroch.hpp"
#include "cubictk/stickelberger.hpp"

namespace ctk {

// branch data of the order r quotient cover over p = 1 mod 24, r | (p-1)/2:
// the cuspidal component D0 is totally ramified with generator exponent
// pinned by g(chi0^{-a}, D0) = -{a}/r, the infinity component is unramified,
// the two form a fiber with multiplicities one, and the base curve has odd
// genus (p-13)/12 so the unsquared idele applies.
BranchData build_modular_branch(long p, long r);

// the closed form (1-p)/12 ({a}^2/(2r^2) - {a}/(2r)) - {a}/r of the surface
// character function on that data
Rat t_equ1(long p, long r, long a);

struct TCorrections {
  long a = 0;
  Rat t2;         // -{a}/r, exact rational
  Int t1_scaled;  // r^2 T1 mod r^k; divisible by r once p = 1 mod 24r
  long k = 0;
  Int r_t2;       // r T2 = -{a}: integral, recording the measured sign
};
// the two correction terms; requires p = 1 mod 24r
TCorrections t_corrections(long p, long r, long a, long k = 3);

// per character exponent of the idele at p: the component away from r is an
// exact rational whose denominator divides r^2 (hence a unit at every other
// prime), the component at r is the full corrected value, an r-adic integer
// carried mod r^k
struct BetaExponent {
  long a = 0;
  Rat away_from_r;  // -T + T2
  Int at_r;         // -T + T1 + T2 mod r^k
};
struct BetaIdele {
  long p = 0, r = 0, k = 0;
  std::vector<BetaExponent> exps;  // indexed by a, for chi0^{-a}
};
BetaIdele beta_idele(long p, long r, long k = 3);

// alternating subset expansion of the exponent over a tuple of characters
// chi0^{-a_i}: the exponent the theta product receives. the away part must
// come out integral; violations throw math_error.
struct BetaProductExponent {
  Rat away_from_r;
  Int at_r;
};
BetaProductExponent beta_product_exponent(const BetaIdele& b, const std::vector<long>& as);

struct LatticeClassResult {
  long p = 0, r = 0;
  Int n_chi;
  ClsVec ideal_class;  // the quadratic Stickelberger action on [P_chi]
  bool is_free = false;
  std::vector<Int> class_group_shape;
  bool hplus_assumed = true;
  bool weak_hypothesis = false;  // p = 1 mod 24 and r | p-1 but not p = 1 mod 24r
};

// Steinitz class of the chi eigenlattice of weight two cusp forms: the
// lattice is free of rank (p-25)/12 - 1 plus an ideal in this class. u is
// the character exponent on the least primitive root mod p.
LatticeClassResult lattice_steinitz_class(long p, long r, long u = 1);

// the relation conj(theta) = sha - conj(mw) - mw in a finite abelian group
// with a supplied involution; element coordinates per the group's factors
bool bsd_relation_raw(const AbGroup& cl, const std::vector<long>& theta,
                      const std::vector<long>& sha, const std::vector<long>& mw,
                      const GroupHom& conj);

// same relation in Cl(Z[zeta_r, 1/2]) with theta computed end to end from
// (p, r) and sha/mw given in quotient coordinates
bool bsd_relation(const ClassGroup& cg, const ClassQuotient& quo, long p, long r,
                  const std::vector<Int>& sha, const std::vector<Int>& mw);

}  // namespace ctk
