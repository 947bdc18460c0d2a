#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/bernoulli.hpp"

using namespace ctk;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(12) == Rat(-691, 2730));
  for (long k = 3; k < 20; k += 2) CHECK(bernoulli(k) == 0);
}

TEST_CASE("von staudt clausen denominators") {
  for (long k = 2; k <= 30; k += 2) CHECK(von_staudt_clausen_check(k));
}

TEST_CASE("bernoulli numbers mod p") {
  CHECK(bernoulli_mod(12, 37) == 17);

  auto exact_mod = [](long k, long m) {
    Rat b = bernoulli(k);
    return fmod(Int(b.get_num()) * invmod(Int(b.get_den()), m), m);
  };
  // the power sum congruence (m >= k + 3) and the exact fallback
  for (auto [k, m] : {std::pair<long, long>{12, 37}, {8, 11}, {20, 101}, {12, 11}, {16, 13}})
    CHECK(bernoulli_mod(k, m) == exact_mod(k, m));

  // Kummer congruence at p = 7: k = 2 and k = 8 agree with B_k/k scaled
  Int b2 = fmod(bernoulli_mod(2, 7) * invmod(2, 7), 7);
  Int b8 = fmod(bernoulli_mod(8, 7) * invmod(8, 7), 7);
  CHECK(b2 == 3);
  CHECK(b8 == 3);
}

TEST_CASE("characters of prime modulus") {
  // smallest primitive root mod 7 is 3
  DirichletChar chi = char_mod_prime(7, 1);
  CHECK(chi.f == 7);
  CHECK(chi.value(3) == CycF::zeta(6, 1));
  CHECK(chi.value(0).is_zero());
  CHECK(chi.value(7).is_zero());
  CHECK(!chi.is_trivial());
  CHECK(char_mod_prime(7, 0).is_trivial());

  // multiplicativity on units
  for (long a = 1; a < 7; ++a)
    for (long b = 1; b < 7; ++b)
      CHECK(chi.value(lmod(a * b, 7)) == chi.value(a) * chi.value(b));

  DirichletChar leg = quadratic_char(7);
  for (long a : {1, 2, 4}) CHECK(leg.value(a).is_one());
  for (long a : {3, 5, 6}) CHECK(leg.value(a) == -CycF(leg.n, Rat(1)));
}

TEST_CASE("generalized bernoulli numbers") {
  CHECK(gen_bernoulli(1, quadratic_char(3)).rational_part() == Rat(-1, 3));

  // trivial character of conductor one: plain bernoulli except at k = 1
  DirichletChar triv;
  triv.f = 1;
  triv.n = 1;
  triv.log_table = {0};
  CHECK(gen_bernoulli(1, triv).rational_part() == Rat(1, 2));
  CHECK(gen_bernoulli(4, triv).rational_part() == bernoulli(4));
  CHECK(gen_bernoulli(12, triv).rational_part() == bernoulli(12));

  // orthogonality makes B_{k,chi} vanish when chi and k have opposite parity
  CHECK(gen_bernoulli(2, quadratic_char(3)).is_zero());
  CHECK(gen_bernoulli(1, char_mod_prime(5, 2)).is_zero());
}

TEST_CASE("odd part class numbers") {
  CHECK(h_minus(5) == 1);
  CHECK(h_minus(7) == 1);
  CHECK(h_minus(19) == 1);
  CHECK(h_minus(23) == 3);
  CHECK(h_minus(37) == 37);
}

TEST_CASE("irregular pairs") {
  auto pairs = irregular_pairs_below(100);
  std::vector<std::pair<long, long>> expect = {{37, 32}, {59, 44}, {67, 58}};
  CHECK(pairs == expect);
  CHECK(irregular_pairs_below(37).empty());
}

TEST_CASE("annihilator exponents") {
  CHECK(annihilator_exponent(1, false) == 1);
  CHECK(annihilator_exponent(2, false) == 1);
  CHECK(annihilator_exponent(12, false) == 691);
  CHECK(annihilator_exponent(16, false) == 3617);
  CHECK(annihilator_exponent(3, true) == 1);
  CHECK_THROWS_AS(annihilator_exponent(3, false), math_error);
}
