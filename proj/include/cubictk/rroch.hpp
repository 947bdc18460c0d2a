#pragma once
// branch data for tame abelian covers of arithmetic surfaces (and higher
// dimensional fibrations), the inertia fraction g(chi, y), ramification
// divisors, the localized character functions built from intersection
// numbers and Todd degree tables, the idele they exponentiate to, and the
// symbolic telescoping identity behind the vanishing lemma.

#include "cubictk/chartable.hpp"
#include "cubictk/zmat.hpp"

#include <map>
#include <optional>
#include <string>

namespace ctk {

// one fibral component of the branch locus. inertia_gen is the element of G
// generating the inertia group I_y (empty when unramified); the cotangent
// character of I_y sends inertia_gen to zeta_e^phi_exponent with
// e = inertia_order, so phi_exponent must be a unit mod e.
struct BranchComponent {
  std::string name;
  long inertia_order = 1;
  std::vector<long> inertia_gen;
  long phi_exponent = 1;
  Int self_intersection = 0;
  Int euler_char = 0;
};

struct BranchData {
  AbGroup group;
  long d = 1;             // relative dimension of the total space minus one
  long residue_prime = 0; // the components all sit over this residue prime
  std::vector<BranchComponent> components;

  // full symmetric intersection matrix, diagonal = self intersections
  ZMat inter;

  // optional: multiplicities of a full fiber through the listed components;
  // when present the fibral relation sum_j m_j (y_i . y_j) = 0 is enforced
  std::vector<Int> fiber_multiplicities;

  // optional: Euler characteristic of the base total space, consulted as the
  // parity gate for the unsquared idele
  std::optional<Int> usual_euler_char;
};

// checks the structural invariants above; throws input_error on violation
void branch_validate(const BranchData& bd);

// g(chi, y) = -n(chi, y)/#I_y in (-1, 0], where chi restricted to I_y equals
// the n-th power of the cotangent character. unramified components give 0.
Rat g_value(const BranchData& bd, size_t comp, const GChar& chi);

// ramification divisor F(chi) = sum_y #G g(chi, y) y, one integer per
// component. a fractional coefficient means the inertia data is inconsistent
// and raises math_error.
std::vector<Int> f_divisor(const BranchData& bd, const GChar& chi);

// the quadratic character function of a surface (d = 1):
//   T(psi) = sum over ordered pairs g(psi,y1) g(psi,y2) (y1.y2)/2
//          + sum_y g(psi,y) (y.y + 2 chi(y,O_y))/2
Rat t_pi_surface(const BranchData& bd, const GChar& chi);

// Todd degree table for a coefficient sheaf: the value at key (t, J) with a
// sorted component tuple J = (j1 <= ... <= jl) is the degree of
// ch^t intersected with the components of J and the Todd class of
// codimension t + l. tables are consulted only at tuples whose inertia
// product is nonzero.
using DegreeKey = std::pair<long, std::vector<size_t>>;
using DegreeTable = std::map<DegreeKey, Rat>;

// the table of the structure sheaf on a surface, which reproduces
// t_pi_surface through t_pi_general
DegreeTable structure_sheaf_table(const BranchData& bd);

// general form: sum over tuple lengths l = 1..d+1 of
//   sum over ordered component tuples (prod_j g(psi,y_j)) / l!
//     * sum_{t <= d+1-l} table[(t, sorted tuple)]
// missing table entries with nonzero coefficient raise input_error.
Rat t_pi_general(const BranchData& bd, const DegreeTable& table, const GChar& chi);

// the finite idele attached to the cover: at the residue prime the component
// at a character phi of G^{d+2} is residue_prime^{exponent(phi)}; every other
// place is 1. exponents = -c T(product expansion of phi), c = 2 for the
// squared form and 1 otherwise.
struct ThetaIdele {
  long residue_prime = 0;
  long c = 1;
  AbGroup big_group;
  RatCharFun exponents;
};

// squared = false is only legal when the recorded usual Euler characteristic
// (if any) is even
ThetaIdele main_theorem_idele(const BranchData& bd, const DegreeTable& table,
                              bool squared);

struct IntegralityViolation {
  Int char_index;
  Rat scaled_value;
};
struct IntegralityReport {
  bool all_integral = true;
  std::vector<IntegralityViolation> violations;
};

// verifies (#G)^{d+1} T(psi) is an integer for every character psi
IntegralityReport integrality_check(const BranchData& bd, const DegreeTable& table);

// exponent vector -> coefficient, zero coefficients never stored
using MPoly = std::map<std::vector<long>, Int>;

// sum over subsets I of {1..n} of (-1)^{#I} (sum_{i in I} X_i)^q, which
// vanishes identically for q < n; for q >= n the nonzero residual comes back
MPoly telescope_residual(long n, long q);
bool telescope_check(long n, long q);

std::string mpoly_str(const MPoly& p);

}  // namespace ctk
