#pragma once
// the n-cubic structure conditions on character tables over G^n: rigidity,
// symmetry under coordinate permutations, and the degree-(n+1) cocycle
// identity. also the idele-level pullback and the kernel annihilator bound.

#include "cubictk/bernoulli.hpp"
#include "cubictk/chartable.hpp"

#include <map>

namespace ctk {

struct CubicVerdict {
  bool rigid = false;
  bool symmetric = false;
  bool cocycle = false;
  std::string witness;  // set when a condition fails
  bool ok() const { return rigid && symmetric && cocycle; }
};

// checks the three conditions for a table on G^n, n >= 2. the cocycle test
// evaluates the coboundary combination against every character of G^{n+1}.
CubicVerdict check_cubic(const CharTable& a, const AbGroup& g, long n);

// the alternating pullback of a table on G, as a table on G^n, computed
// through the operator algebra (lambda along s_n)
CharTable theta_table(const CharTable& alpha, long n);

// idele with finitely many nontrivial local components; each component
// carries an exact unit part and a per-character rational valuation exponent
struct LocalComponent {
  CharTable unit;
  RatCharFun val;
};
struct CharIdele {
  AbGroup group;  // base group G; components live over G^n
  long n = 1;
  long m = 1;     // value root order of the unit parts
  std::map<long, LocalComponent> at;  // place (rational prime) -> component
};

// applies the alternating pullback to every local component: units
// multiplicatively, valuation exponents additively
CharIdele theta_on_idele(const CharIdele& x, long n);

// prod_{k=1}^{n-1} prod_{p | e(k)} p^{v_p(#G)}, with the unconditional
// triviality range n <= 5 short-circuited to 1. odd k >= 3 requires the
// vandiver flag, otherwise the bound is unknown and this throws.
Int kernel_annihilator_bound(long n, const AbGroup& g, bool vandiver);

}  // namespace ctk
