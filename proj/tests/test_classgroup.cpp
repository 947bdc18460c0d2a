#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/classgroup.hpp"

using namespace ctk;

TEST_CASE("trivial class group at r = 5") {
  const ClassGroup& cg = class_group_cached(5);
  CHECK(cg.h == 1);
  CHECK(cg.hminus == 1);
  CHECK(cg.hplus_assumed);
  CHECK(cg.fb.size() == 43);
  CHECK(cg.shape().empty());
  CHECK(cg.nontrivial.empty());
  CHECK(cg.exponent() == 1);
  for (size_t i = 0; i < cg.fb.size(); ++i)
    CHECK(cg.is_zero(cg.class_of_fb_prime(i)));

  // principal ideals have trivial class however they are presented
  CycInt g = cyc_from_coords(5, {3, 1, 0, 0});
  CHECK(cg.is_zero(class_of_ideal(cg, ideal_from_elem(g))));
}

TEST_CASE("class group of the 23rd cyclotomic field") {
  const ClassGroup& cg = class_group_cached(23);
  CHECK(cg.h == 3);
  CHECK(cg.hminus == 3);
  CHECK(cg.shape() == std::vector<Int>{3});
  CHECK(cg.nontrivial.size() == 1);
  CHECK(cg.fb.size() == 199);

  // the prime cut out by the order 23 character at 47 generates
  ClsVec p47 = class_of_ideal(cg, p_chi(23, 47, 1));
  CHECK(!cg.is_zero(p47));
  CHECK(cg.is_zero(cg.scale(3, p47)));
  CHECK(!cg.is_zero(cg.scale(2, p47)));

  // class arithmetic: inverse and galois both act sensibly
  CHECK(cg.is_zero(cg.add(p47, cg.neg(p47))));
  ClsVec conj = cg.galois_on_class(22, p47);
  CHECK(cg.is_zero(cg.add(p47, cg.add(conj, cg.add(p47, conj)))));

  // principal test ideals still read as zero
  CHECK(cg.is_zero(class_of_ideal(cg, ideal_from_elem(cyc_from_coords(
      23, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})))));
}

TEST_CASE("galois permutation of the factor base") {
  const ClassGroup& cg = class_group_cached(5);
  for (long s : {2, 3, 4}) {
    std::vector<size_t> perm = cg.galois_perm(s);
    REQUIRE(perm.size() == cg.fb.size());
    for (size_t i = 0; i < perm.size(); ++i) {
      CHECK(cg.fb[perm[i]].q == cg.fb[i].q);
      CHECK(ideal_galois(cg.fb[i].ideal, s) == cg.fb[perm[i]].ideal);
    }
  }
  // sigma_1 is the identity
  std::vector<size_t> id = cg.galois_perm(1);
  for (size_t i = 0; i < id.size(); ++i) CHECK(id[i] == i);
}

TEST_CASE("lift is a section of class coordinates") {
  const ClassGroup& cg = class_group_cached(23);
  ClsVec c = class_of_ideal(cg, p_chi(23, 47, 1));
  std::vector<Int> e = cg.lift(c);
  REQUIRE(e.size() == cg.fb.size());
  CHECK(cg.class_of_fb_vector(e) == c);
  CHECK(cg.class_of_fb_vector(cg.lift(cg.zero_class())) == cg.zero_class());
}

TEST_CASE("generator search on principal ideals") {
  CycInt g = cyc_from_coords(5, {4, 1, 1, 0});
  CycIdeal I = ideal_from_elem(g);
  std::optional<CycInt> found = principal_generator(I);
  REQUIRE(found.has_value());
  CHECK(ideal_from_elem(*found) == I);

  std::optional<CycInt> p = principal_generator(prime_from_root(5, 11, 4));
  REQUIRE(p.has_value());
  CHECK(cyc_norm(*p) == 11);
}

TEST_CASE("a starved factor base fails certification") {
  CHECK_THROWS_AS(compute_class_group(23, 10), math_error);
}

TEST_CASE("inverting two") {
  // [P_2] generates Cl = Z/3 at r = 23, so the localized group collapses
  const ClassGroup& cg = class_group_cached(23);
  ClassQuotient quo = invert_two(cg);
  CHECK(quo.order() == 1);
  CHECK(quo.shape().empty());
  ClsVec p47 = class_of_ideal(cg, p_chi(23, 47, 1));
  CHECK(quo.project(p47).empty());

  // at r = 5 everything is already trivial
  ClassQuotient q5 = invert_two(class_group_cached(5));
  CHECK(q5.order() == 1);
}

TEST_CASE("lattices over the group ring") {
  const ClassGroup& cg5 = class_group_cached(5);
  GLattice reg = glattice_regular(5);
  glattice_validate(reg);
  SteinitzResult s = steinitz_rim(cg5, reg, 1);
  CHECK(s.rank == 1);
  CHECK(cg5.is_zero(s.cls));

  GLattice two = glattice_direct_sum(reg, reg);
  glattice_validate(two);
  SteinitzResult s2 = steinitz_rim(cg5, two, 2);
  CHECK(s2.rank == 2);
  CHECK(cg5.is_zero(s2.cls));

  // an ideal made into a lattice recovers its own Steinitz class
  const ClassGroup& cg23 = class_group_cached(23);
  CycIdeal P = p_chi(23, 47, 1);
  GLattice lat = glattice_from_ideal(P, 1);
  glattice_validate(lat);
  SteinitzResult sp = steinitz_rim(cg23, lat, 23 - 1);
  CHECK(sp.rank == 1);
  ClsVec direct = class_of_ideal(cg23, P);
  CHECK((sp.cls == direct || sp.cls == cg23.neg(direct)));
  CHECK(!cg23.is_zero(sp.cls));
}

TEST_CASE("classes of finite module presentations") {
  const ClassGroup& cg = class_group_cached(5);
  ClassQuotient quo = invert_two(cg);

  // Z[G]/(3) as a module on one generator: determinant ideal (3), principal
  GrpRingElt three(5, 0);
  three[0] = 3;
  GrpRingMat pres = {{three}};
  SChiClass s = s_chi_finite(cg, quo, pres, 1);
  CHECK(cg.is_zero(s.full));
  CHECK(s.localized.empty());

  // 2 x 2 diagonal presentation
  GrpRingElt g(5, 0);
  g[1] = 1;
  GrpRingElt zero(5, 0);
  GrpRingMat pres2 = {{three, zero}, {zero, g}};
  SChiClass s2 = s_chi_finite(cg, quo, pres2, 2);
  CHECK(cg.is_zero(s2.full));
}

TEST_CASE("formal class combinations") {
  FormalClass x = formal_symbol(23);
  REQUIRE(x.terms.size() == 1);
  CHECK(x.terms.at(1) == 1);

  FormalClass c = formal_conj(x);
  CHECK(c.terms.size() == 1);
  CHECK(c.terms.at(22) == 1);

  FormalClass d = dual_class(x);
  CHECK(d.terms.size() == 1);
  CHECK(d.terms.at(22) == -1);

  const ClassGroup& cg = class_group_cached(23);
  ClsVec base = class_of_ideal(cg, p_chi(23, 47, 1));
  CHECK(eval_formal(cg, x, base) == base);
  CHECK(eval_formal(cg, c, base) == cg.galois_on_class(22, base));
  CHECK(eval_formal(cg, d, base) == cg.neg(cg.galois_on_class(22, base)));

  // conjugation inverts classes here (the class group is all minus part)
  CHECK(cg.galois_on_class(22, base) == cg.neg(base));
  CHECK(eval_formal(cg, dual_class(dual_class(x)), base) == base);
}
