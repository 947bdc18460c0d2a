#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/cyclopoly.hpp"
#include "cubictk/fp.hpp"

#include <algorithm>

using namespace ctk;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_poly(5) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_poly(1).size() == 2);  // cached call stays stable
}

TEST_CASE("roots of unity relations") {
  CycF z = CycF::zeta(5, 1);
  CHECK(z.pow(5).is_one());
  CHECK((CycF(5, Rat(1)) + z + z.pow(2) + z.pow(3) + z.pow(4)).is_zero());
  CHECK(CycF::zeta(5, 7) == z.pow(2));
  CHECK(CycF::zeta(1, 0).is_one());
}

TEST_CASE("field operations") {
  CycF z = CycF::zeta(5, 1);
  CycF a = CycF(5, Rat(2)) + Rat(3) * z;

  CHECK((a * a.inverse()).is_one());
  CHECK(a - a == CycF(5));
  CHECK((-a) + a == CycF(5));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(0).is_one());

  CHECK(!a.is_rational());
  CHECK(CycF(5, Rat(7, 3)).is_rational());
  CHECK(CycF(5, Rat(7, 3)).rational_part() == Rat(7, 3));
  CHECK_THROWS_AS(a.rational_part(), math_error);

  // reduction through the minimal polynomial: x^5 reduces to 1
  std::vector<Rat> p(6, Rat(0));
  p[5] = Rat(1);
  CHECK(CycF::from_poly(5, p).is_one());

  CHECK_THROWS_AS(a + CycF::zeta(3, 1), input_error);
}

TEST_CASE("galois action and conjugation") {
  CycF z = CycF::zeta(5, 1);
  CHECK(z.galois(2) == z.pow(2));
  CHECK(z.conj() == z.pow(4));
  CycF a = CycF(5, Rat(1)) + Rat(2) * z + Rat(5) * z.pow(3);
  CHECK(a.galois(2).galois(3) == a.galois(6 % 5));
  CHECK(a.galois(2) * a.conj().galois(2) == (a * a.conj()).galois(2));
  CHECK_THROWS_AS(z.galois(5), input_error);
}

TEST_CASE("norms") {
  CycF z = CycF::zeta(5, 1);
  CHECK(z.norm() == Rat(1));
  CHECK((CycF(5, Rat(1)) - z).norm() == Rat(5));
  CHECK(CycF(5, Rat(3)).norm() == Rat(81));

  CycF a = CycF(5, Rat(2)) + z, b = CycF(5, Rat(1)) - Rat(4) * z.pow(2);
  CHECK((a * b).norm() == a.norm() * b.norm());
}

TEST_CASE("prime field helpers") {
  CHECK(powmod_u64(2, 10, 1000) == 24);
  CHECK(powmod_u64(3, 0, 7) == 1);

  // gcd of (x^2 - 1) and (x^2 + 2x + 1) over F_7 is x + 1
  FpPoly g = fp_gcd(fp_poly(7, {6, 0, 1}), fp_poly(7, {1, 2, 1}));
  CHECK(g.c == std::vector<uint64_t>{1, 1});

  FpPoly prod = fp_mul(fp_poly(7, {1, 1}), fp_poly(7, {6, 1}));
  CHECK(prod.c == std::vector<uint64_t>{6, 0, 1});
  CHECK(fp_rem(prod, fp_poly(7, {1, 1})).is_zero());
}

TEST_CASE("splitting the cyclotomic polynomial mod p") {
  // 11 = 1 mod 5: four linear factors whose product recovers Phi_5
  std::vector<FpPoly> fs = split_cyclotomic_mod_p(5, 11);
  REQUIRE(fs.size() == 4);
  FpPoly prod = fp_poly(11, {1});
  for (const FpPoly& f : fs) {
    CHECK(f.deg() == 1);
    CHECK(f.c.back() == 1);
    prod = fp_mul(prod, f);
  }
  CHECK(prod.c == std::vector<uint64_t>{1, 1, 1, 1, 1});

  // 2 has order 4 mod 5: Phi_5 stays irreducible
  std::vector<FpPoly> f2 = split_cyclotomic_mod_p(5, 2);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].deg() == 4);

  // 7 has order 4 mod 5 as well
  CHECK(split_cyclotomic_mod_p(5, 7).size() == 1);

  // deterministic ordering
  std::vector<FpPoly> again = split_cyclotomic_mod_p(5, 11);
  REQUIRE(again.size() == fs.size());
  for (size_t i = 0; i < fs.size(); ++i) CHECK(again[i].c == fs[i].c);
}

TEST_CASE("roots in the split case") {
  std::vector<uint64_t> roots = cyclotomic_roots_mod_p(5, 11);
  REQUIRE(roots.size() == 4);
  CHECK(std::is_sorted(roots.begin(), roots.end()));
  for (uint64_t c : roots) {
    CHECK(powmod_u64(c, 5, 11) == 1);
    CHECK(c != 1);
  }
  CHECK(roots == std::vector<uint64_t>{3, 4, 5, 9});
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(2) == 1);
  uint64_t g = primitive_root(241);
  CHECK(powmod_u64(g, 240, 241) == 1);
  for (uint64_t d : {120, 80, 48}) CHECK(powmod_u64(g, d, 241) != 1);
}
