#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/chartable.hpp"

using namespace ctk;

TEST_CASE("table of ones") {
  AbGroup g = AbGroup::invariant_factors({2, 4});
  CharTable t = CharTable::ones(g, 4);
  CHECK(t.all_invertible());
  CHECK(t.galois_equivariant());
  for (Int i = 0; i < char_count(g); ++i)
    CHECK(t.value(char_at(g, i)).is_one());
}

TEST_CASE("group ring tables evaluate characters") {
  AbGroup g = AbGroup::invariant_factors({3});
  // 1 [0] + 2 [1]: value at chi_e is 1 + 2 zeta_3^e
  CharTable t = CharTable::from_group_ring(g, 3, {Rat(1), Rat(2), Rat(0)});
  CHECK(t.value(char_at(g, Int(0))) == CycF(3, Rat(3)));
  CHECK(t.value(char_at(g, Int(1))) == CycF(3, Rat(1)) + Rat(2) * CycF::zeta(3, 1));
  CHECK(t.value(char_at(g, Int(2))) == CycF(3, Rat(1)) + Rat(2) * CycF::zeta(3, 2));
  CHECK(t.all_invertible());
  CHECK(t.galois_equivariant());

  // 1 [0] - 1 [1] on Z/2 vanishes at the trivial character
  AbGroup h = AbGroup::invariant_factors({2});
  CharTable z = CharTable::from_group_ring(h, 2, {Rat(1), Rat(-1)});
  CHECK(!z.all_invertible());
}

TEST_CASE("pointwise product and inverse") {
  AbGroup g = AbGroup::invariant_factors({5});
  CharTable t = CharTable::from_group_ring(g, 5, {Rat(2), Rat(1), Rat(0), Rat(0), Rat(0)});
  REQUIRE(t.all_invertible());
  CharTable prod = t.mul(t.inverse());
  CHECK(prod == CharTable::ones(g, 5));
}

TEST_CASE("equivariance failure produces a witness") {
  AbGroup g = AbGroup::invariant_factors({5});
  CharTable t = CharTable::ones(g, 5);
  t.value_mut(char_at(g, Int(2))) = CycF::zeta(5, 1);
  std::string w;
  CHECK(!t.galois_equivariant(&w));
  CHECK(!w.empty());
}

TEST_CASE("pullback along a single homomorphism term") {
  AbGroup g = AbGroup::invariant_factors({4});
  CharTable t = CharTable::from_group_ring(g, 4, {Rat(3), Rat(1), Rat(0), Rat(0)});
  REQUIRE(t.all_invertible());

  // z = [id] reproduces the table
  SigmaElt z = SigmaElt::zero(g, 1, 1);
  z.add_term(identity_hom(g, 1), 1);
  CHECK(lambda_z(z, t, g, 1) == t);

  // z = [id] - [id] gives the table of ones
  SigmaElt zz = SigmaElt::zero(g, 1, 1);
  zz.add_term(identity_hom(g, 1), 1);
  zz.add_term(identity_hom(g, 1), -1);
  CHECK(lambda_z(zz, t, g, 1) == CharTable::ones(g, 4));

  // pullback along a coordinate swap permutes the character tuple
  CharTable t2 = lambda_z(z_perm(g, 2, {1, 0}), theta_direct(t, 2), g, 2);
  // theta is symmetric, so the swap difference is trivial
  CHECK(t2 == CharTable::ones(g.power(2), 4));
}

TEST_CASE("additive pullback along the alternating element") {
  AbGroup g = AbGroup::invariant_factors({2});
  RatCharFun a = RatCharFun::zeros(g);
  GChar triv = char_at(g, Int(0)), sgn = char_at(g, Int(1));
  a.value_mut(sgn) = Rat(1, 2);

  RatCharFun th = lambda_z_additive(s_elt(g, 2), a, g, 2);
  AbGroup g2 = g.power(2);
  // at (sgn, sgn): a(triv) - 2 a(sgn) + a(triv) = -1
  CHECK(th.value(GChar{g2.factors(), {1, 1}}) == Rat(-1));
  // at (sgn, triv): a(sgn) - a(sgn) - a(triv) + a(triv) = 0
  CHECK(th.value(GChar{g2.factors(), {1, 0}}) == Rat(0));
  CHECK(th.value(GChar{g2.factors(), {0, 0}}) == Rat(0));
  CHECK(triv.is_trivial());
}

TEST_CASE("direct product formula on a group ring table") {
  AbGroup g = AbGroup::invariant_factors({3});
  CharTable t = CharTable::from_group_ring(g, 3, {Rat(1), Rat(1), Rat(0)});
  REQUIRE(t.all_invertible());
  CharTable th = theta_direct(t, 2);
  AbGroup g2 = g.power(2);

  // value at (chi, psi) is a(chi psi) a(triv) / (a(chi) a(psi))
  for (Int i = 0; i < char_count(g); ++i)
    for (Int j = 0; j < char_count(g); ++j) {
      GChar chi = char_at(g, i), psi = char_at(g, j);
      GChar pair{g2.factors(), {chi.e[0], psi.e[0]}};
      CycF expect = t.value(chi.mul(psi)) * t.value(char_at(g, Int(0))) *
                    (t.value(chi) * t.value(psi)).inverse();
      CHECK(th.value(pair) == expect);
    }
}
