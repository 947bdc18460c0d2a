#pragma once
// class group of Q(zeta_r) by factor base relations. the factor base holds
// every prime of norm below max(200, 2 r^2); relations come from principal
// rational primes, the (1 - zeta) uniformizer, smooth short elements of
// ideal lattices, and the galois orbit of every found relation. the computed
// group is accepted only when its order equals the analytic h^- (times the
// assumed h^+ = 1, which holds for every r this library certifies).

#include "cubictk/bernoulli.hpp"
#include "cubictk/cycfield.hpp"
#include "cubictk/group.hpp"

#include <map>
#include <optional>

namespace ctk {

struct FBPrime {
  long q;                        // rational prime below
  long f;                        // residue degree
  long root = -1;                // f = 1, q != r: the root of Phi_r mod q
  std::vector<uint64_t> gpoly;   // defining polynomial when f > 1
  CycIdeal ideal;
  bool ramified = false;         // q == r, the (1 - zeta) slot
};

using ClsVec = std::vector<Int>;  // canonical class coordinates

struct ClassGroup {
  long r = 0;
  std::vector<FBPrime> fb;

  std::vector<Int> diag;            // all snf invariant factors (size = #fb)
  ZMat V, Vinv;                     // snf transforms on fb exponent vectors
  std::vector<size_t> nontrivial;   // positions with diag > 1
  Int h = 0;                        // computed class number
  Int hminus = 0;                   // analytic reference value
  bool hplus_assumed = true;

  // invariant factor list of the nontrivial part (the group shape)
  std::vector<Int> shape() const;
  ClsVec class_of_fb_vector(const std::vector<Int>& exps) const;
  ClsVec class_of_fb_prime(size_t idx) const;
  ClsVec zero_class() const { return ClsVec(nontrivial.size(), 0); }
  bool is_zero(const ClsVec& c) const;
  ClsVec add(const ClsVec& a, const ClsVec& b) const;
  ClsVec neg(const ClsVec& a) const;
  ClsVec scale(const Int& k, const ClsVec& a) const;
  // lift canonical coordinates to an fb exponent vector
  std::vector<Int> lift(const ClsVec& c) const;
  // fb index permutation under zeta -> zeta^s
  std::vector<size_t> galois_perm(long s) const;
  // induced action on classes
  ClsVec galois_on_class(long s, const ClsVec& c) const;
  // exponent of the group (1 for trivial)
  Int exponent() const;
};

// builds and certifies the class group. throws math_error if the relation
// search exhausts its budget or certification fails. fb_bound = 0 picks the
// default norm bound max(200, 2 r^2); smaller explicit bounds usually starve
// the certificate.
ClassGroup compute_class_group(long r, long fb_bound = 0);

// memoized variant for pipelines that revisit the same r
const ClassGroup& class_group_cached(long r);

// exact factorization of the principal ideal (x) over the factor base;
// returns nullopt if a prime outside the base divides (x)
std::optional<std::vector<Int>> factor_over_fb(const ClassGroup& cg, const CycInt& x);

// class of an arbitrary nonzero integral ideal. handles ideals outside the
// factor base through smooth multiples; budgeted, throws on exhaustion.
ClsVec class_of_ideal(const ClassGroup& cg, const CycIdeal& I);

// explicit generator search: returns x in I with |N(x)| = N(I), if found
// within budget
std::optional<CycInt> principal_generator(const CycIdeal& I);

// the quotient Cl / <classes of the primes above 2>, i.e. the class group
// with 2 inverted
struct ClassQuotient {
  std::vector<Int> diag;            // snf of the quotient presentation
  ZMat V, Vinv;
  std::vector<size_t> nontrivial;
  std::vector<Int> shape() const;
  Int order() const;
  ClsVec project(const ClsVec& c) const;  // from parent canonical coords
  ClsVec lift(const std::vector<Int>& q) const;  // a parent representative
};
ClassQuotient invert_two(const ClassGroup& cg);

// conjugation sigma_{-1} induced on the quotient (well defined: sigma_{-1}
// permutes the primes above 2)
std::vector<Int> quotient_conj(const ClassGroup& cg, const ClassQuotient& quo,
                               const std::vector<Int>& q);

// ---------------------------------------------------------------------------
// Steinitz class maps

// finitely generated torsion free Z[G]-lattice: row vectors of rank N, one
// action matrix per group generator (w -> w A)
struct GLattice {
  AbGroup group;
  std::vector<ZMat> action;
};
void glattice_validate(const GLattice& m);
GLattice glattice_regular(long r);  // Z[G] for G = Z/r
GLattice glattice_direct_sum(const GLattice& a, const GLattice& b);
// the ideal I of Z[zeta_r] viewed as a Z[G]-lattice, the generator of G
// acting as multiplication by zeta^t
GLattice glattice_from_ideal(const CycIdeal& I, long t);

struct SteinitzResult {
  long rank = 0;  // total Z[zeta_r]-rank of the chi-part
  ClsVec cls;     // Steinitz class of that part
};

// the chi-part of the dual lattice: K = (M^dual tensor Z[zeta_r](chi^{-1}))^G
// for G = Z/r and chi(generator) = zeta_r^u. K is computed as the integer
// kernel of the eigenvector condition, its Steinitz class from the ideal the
// top wedge generates.
SteinitzResult steinitz_rim(const ClassGroup& cg, const GLattice& m, long u);

// group ring element of Z[Z/r] on the basis 1, g, ..., g^{r-1}
using GrpRingElt = std::vector<Int>;
using GrpRingMat = std::vector<std::vector<GrpRingElt>>;

struct SChiClass {
  ClsVec full;                 // class of the Fitting ideal in Cl(Z[zeta_r])
  std::vector<Int> localized;  // its image in Cl(Z[zeta_r, 1/2])
};

// Steinitz class of a finite Z[G]-module presented by pres (rows = relations
// between the column generators): the class of the determinant ideal of the
// presentation pushed along chi = (generator -> zeta_r^u). the target group
// inverts 2; inverting r as well costs nothing because (1 - zeta) is
// principal.
SChiClass s_chi_finite(const ClassGroup& cg, const ClassQuotient& quo,
                       const GrpRingMat& pres, long u);

// formal integer combination of Galois twists sigma_a X of one abstract
// ideal class symbol X
struct FormalClass {
  long r = 0;
  std::map<long, Int> terms;  // a in (Z/r)^* -> coefficient of [sigma_a X]
  bool operator==(const FormalClass& o) const { return r == o.r && terms == o.terms; }
};
FormalClass formal_symbol(long r);              // [X]
FormalClass formal_conj(const FormalClass& x);  // complex conjugation
// the involution rule on Steinitz classes: s(M^dual) = -conj(s(M))
FormalClass dual_class(const FormalClass& x);
// substitute a concrete base class for the symbol
ClsVec eval_formal(const ClassGroup& cg, const FormalClass& x, const ClsVec& base);

}  // namespace ctk
