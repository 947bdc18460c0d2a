#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/cubic.hpp"

using namespace ctk;

namespace {

CharTable ring_table(const AbGroup& g, long m, std::vector<Rat> coeffs) {
  CharTable t = CharTable::from_group_ring(g, m, coeffs);
  REQUIRE(t.all_invertible());
  return t;
}

}  // namespace

TEST_CASE("alternating pullbacks pass the cubic conditions") {
  AbGroup g = AbGroup::invariant_factors({2, 2});
  CharTable a = ring_table(g, 4, {Rat(3), Rat(1), Rat(1), Rat(0)});
  CharTable th = theta_table(a, 2);
  CubicVerdict v = check_cubic(th, g, 2);
  CHECK(v.rigid);
  CHECK(v.symmetric);
  CHECK(v.cocycle);
  CHECK(v.ok());
  CHECK(v.witness.empty());

  AbGroup c4 = AbGroup::invariant_factors({4});
  CharTable b = ring_table(c4, 4, {Rat(2), Rat(1), Rat(0), Rat(0)});
  CHECK(check_cubic(theta_table(b, 3), c4, 3).ok());
}

TEST_CASE("a perturbed table fails with a witness") {
  AbGroup g = AbGroup::invariant_factors({2, 2});
  CharTable a = ring_table(g, 4, {Rat(3), Rat(1), Rat(1), Rat(0)});
  CharTable th = theta_table(a, 2);
  AbGroup g2 = g.power(2);
  // damage one value at a character with nontrivial first coordinate only;
  // the swap (1 2) then sees different values on the two sides
  GChar psi{g2.factors(), {1, 0, 0, 0}};
  th.value_mut(psi) = th.value(psi) * CycF::zeta(4, 1);
  CubicVerdict v = check_cubic(th, g, 2);
  CHECK(!v.ok());
  CHECK(!v.witness.empty());
}

TEST_CASE("operator path matches the direct product formula") {
  AbGroup g = AbGroup::invariant_factors({6});
  CharTable a = ring_table(g, 6, {Rat(3), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(theta_table(a, 2) == theta_direct(a, 2));
  CHECK(theta_table(a, 3) == theta_direct(a, 3));

  AbGroup h = AbGroup::invariant_factors({2, 2});
  CharTable b = ring_table(h, 4, {Rat(5), Rat(1), Rat(2), Rat(1)});
  CHECK(theta_table(b, 2) == theta_direct(b, 2));
}

TEST_CASE("the pullback of the constant table is constant") {
  AbGroup g = AbGroup::invariant_factors({3});
  CHECK(theta_table(CharTable::ones(g, 3), 2) == CharTable::ones(g.power(2), 3));
}

TEST_CASE("idele pullback acts per place") {
  AbGroup g = AbGroup::invariant_factors({2});
  CharIdele x;
  x.group = g;
  x.n = 1;
  x.m = 4;

  LocalComponent c2;
  c2.unit = ring_table(g, 4, {Rat(2), Rat(1)});
  c2.val = RatCharFun::zeros(g);
  c2.val.value_mut(char_at(g, Int(1))) = Rat(1, 2);
  x.at[2] = c2;

  LocalComponent c7;
  c7.unit = CharTable::ones(g, 4);
  c7.val = RatCharFun::zeros(g);
  c7.val.value_mut(char_at(g, Int(0))) = Rat(3);
  x.at[7] = c7;

  CharIdele y = theta_on_idele(x, 2);
  CHECK(y.n == 2);
  CHECK(y.at.size() == 2);
  AbGroup g2 = g.power(2);

  // units transform multiplicatively: value at (sgn, sgn) is
  // u(sgn^2) u(triv) / u(sgn)^2 = 3 * 3 / 1 = 9
  const CharTable& u = y.at.at(2).unit;
  CHECK(u.value(GChar{g2.factors(), {1, 1}}) == CycF(4, Rat(9)));
  CHECK(u.value(GChar{g2.factors(), {0, 0}}).is_one());

  // valuations transform additively, same hand computation as the
  // chartable test: v(triv) - 2 v(sgn) + v(triv) = -1
  CHECK(y.at.at(2).val.value(GChar{g2.factors(), {1, 1}}) == Rat(-1));
  CHECK(y.at.at(2).val.value(GChar{g2.factors(), {1, 0}}) == Rat(0));

  // the place at 7 has constant units, so they stay constant, while the
  // valuation at the trivial character telescopes: 3 - 3 - 3 + 3 = 0
  CHECK(y.at.at(7).unit.all_invertible());
  CHECK(y.at.at(7).unit == CharTable::ones(g2, 4));
  CHECK(y.at.at(7).val.value(GChar{g2.factors(), {0, 0}}) == Rat(0));
}

TEST_CASE("kernel annihilator bound") {
  AbGroup g = AbGroup::invariant_factors({691});
  for (long n = 2; n <= 5; ++n) {
    CHECK(kernel_annihilator_bound(n, g, false) == 1);
    CHECK(kernel_annihilator_bound(n, g, true) == 1);
  }

  // n = 6 needs the numerators e(1)..e(5); k = 3, 5 are odd and >= 3
  CHECK_THROWS_AS(kernel_annihilator_bound(6, g, false), math_error);

  // n = 13 reaches k = 12 with e(12) = 691, and 691 divides #G once
  CHECK(kernel_annihilator_bound(13, g, true) == 691);

  // a group of order prime to every e(k) in range gives 1
  AbGroup h = AbGroup::invariant_factors({2, 6});
  CHECK(kernel_annihilator_bound(13, h, true) == 1);
}
