#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/cycfield.hpp"

using namespace ctk;

namespace {

CycInt random_elem(Rng& rng, long r, long lo, long hi) {
  std::vector<Int> c(r - 1);
  for (auto& x : c) x = rng.range(lo, hi);
  return cyc_from_coords(r, std::move(c));
}

}  // namespace

TEST_CASE("ring arithmetic") {
  long r = 7;
  CycInt z = cyc_zeta_pow(r, 1);
  CHECK(cyc_add(cyc_one(r), cyc_neg(cyc_one(r))).is_zero());
  CHECK(cyc_mul(z, cyc_zeta_pow(r, 6)) == cyc_one(r));
  CHECK(cyc_mul_zeta_pow(cyc_one(r), 3) == cyc_zeta_pow(r, 3));

  // 1 + zeta + ... + zeta^{r-1} = 0, so zeta^{r-1} folds to -(1 + ... + zeta^{r-2})
  CycInt acc = cyc_zero(r);
  for (long k = 0; k < r; ++k) acc = cyc_add(acc, cyc_zeta_pow(r, k));
  CHECK(acc.is_zero());

  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    CycInt a = random_elem(rng, r, -5, 5), b = random_elem(rng, r, -5, 5);
    CHECK(cyc_mul(a, b) == cyc_mul(b, a));
    CHECK(cyc_sub(a, b) == cyc_add(a, cyc_neg(b)));
  }
}

TEST_CASE("galois action is a ring map") {
  long r = 7;
  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    CycInt a = random_elem(rng, r, -4, 4), b = random_elem(rng, r, -4, 4);
    for (long s = 1; s < r; ++s) {
      CHECK(cyc_galois(cyc_mul(a, b), s) == cyc_mul(cyc_galois(a, s), cyc_galois(b, s)));
      CHECK(cyc_galois(cyc_add(a, b), s) == cyc_add(cyc_galois(a, s), cyc_galois(b, s)));
    }
    CHECK(cyc_galois(cyc_galois(a, 2), 3) == cyc_galois(a, 6));
    CHECK(cyc_conj(a) == cyc_galois(a, r - 1));
    CHECK(cyc_galois(a, 1) == a);
  }
  CHECK(cyc_galois(cyc_zeta_pow(r, 1), 3) == cyc_zeta_pow(r, 3));
}

TEST_CASE("norms multiply") {
  long r = 7;
  CHECK(cyc_norm(cyc_one(r)) == 1);
  CHECK(cyc_norm(cyc_from_long(r, 3)) == pow_int(3, 6));
  CHECK(cyc_norm(cyc_sub(cyc_one(r), cyc_zeta_pow(r, 1))) == 7);

  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    CycInt a = random_elem(rng, r, -3, 3), b = random_elem(rng, r, -3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(cyc_norm(cyc_mul(a, b)) == cyc_norm(a) * cyc_norm(b));
    CHECK(cyc_norm(cyc_galois(a, 3)) == cyc_norm(a));
  }
}

TEST_CASE("trace pairing gram matrix") {
  ZMat g = trace_gram(5);
  REQUIRE(nrows(g) == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(g[i][j] == (i == j ? Int(4) : Int(-1)));
}

TEST_CASE("ideals") {
  long r = 5;
  CycIdeal whole = ideal_whole_ring(r);
  CHECK(whole.nrm == 1);
  CHECK(ideal_contains(whole, cyc_one(r)));

  CycInt g = cyc_from_coords(r, {2, 1, 0, 0});
  CycIdeal I = ideal_from_elem(g);
  CHECK(I.nrm == cyc_norm(g));
  CHECK(ideal_contains(I, g));
  CHECK(ideal_contains(I, cyc_mul(g, cyc_zeta_pow(r, 3))));
  CHECK(!ideal_contains(I, cyc_one(r)));

  // products: norm is multiplicative, generators land inside
  CycInt h = cyc_from_coords(r, {1, 0, -1, 2});
  CycIdeal J = ideal_from_elem(h);
  CycIdeal IJ = ideal_mul(I, J);
  CHECK(IJ.nrm == I.nrm * J.nrm);
  CHECK(IJ == ideal_from_elem(cyc_mul(g, h)));
  CHECK(ideal_mul_elem(I, h) == IJ);

  // the ramified prime: (1-zeta)^{r-1} = (r)
  CHECK(ideal_pow(lambda_ideal(r), 4) == ideal_from_elem(cyc_from_long(r, 5)));
  CHECK(lambda_ideal(r).nrm == 5);

  // two generator presentation reduces to the right lattice
  CycIdeal K = ideal_from_gens(r, {cyc_from_long(r, 11), cyc_sub(cyc_zeta_pow(r, 1), cyc_from_long(r, 4))});
  CHECK(K == prime_from_root(r, 11, 4));
}

TEST_CASE("splitting rational primes") {
  // 11 = 1 mod 5 splits completely into four norm 11 primes
  std::vector<CycIdeal> above11 = split_prime(5, 11);
  REQUIRE(above11.size() == 4);
  CycIdeal prod = ideal_whole_ring(5);
  for (const CycIdeal& P : above11) {
    CHECK(P.nrm == 11);
    prod = ideal_mul(prod, P);
  }
  CHECK(prod == ideal_from_elem(cyc_from_long(5, 11)));

  // 2 is inert in Q(zeta_5)
  std::vector<CycIdeal> above2 = split_prime(5, 2);
  REQUIRE(above2.size() == 1);
  CHECK(above2[0].nrm == 16);

  // the ramified case
  std::vector<CycIdeal> above5 = split_prime(5, 5);
  REQUIRE(above5.size() == 1);
  CHECK(above5[0] == lambda_ideal(5));

  // 1657 = 1 mod 23 splits into 22 primes
  CHECK(split_prime(23, 1657).size() == 22);

  // determinism
  std::vector<CycIdeal> again = split_prime(5, 11);
  for (size_t i = 0; i < 4; ++i) CHECK(again[i] == above11[i]);
}

TEST_CASE("character distinguished primes above p") {
  // p = 11, r = 5: least primitive root mod 11 is 2, g^{(p-1)/r} = 4,
  // and the order 5 subgroup mod 11 is {4^k}. chi(g) = zeta^u picks the
  // root c with c^u = 4.
  CHECK(p_chi(5, 11, 1) == prime_from_root(5, 11, 4));
  CHECK(p_chi(5, 11, 2) == prime_from_root(5, 11, 9));
  CHECK(p_chi(5, 11, 3) == prime_from_root(5, 11, 5));
  CHECK(p_chi(5, 11, 4) == prime_from_root(5, 11, 3));
  CHECK_THROWS_AS(p_chi(5, 7, 1), input_error);  // 7 != 1 mod 5
}

TEST_CASE("valuations") {
  long r = 5;
  CycInt lam = cyc_sub(cyc_one(r), cyc_zeta_pow(r, 1));
  CHECK(val_at_lambda(lam) == 1);
  CHECK(val_at_lambda(cyc_from_long(r, 5)) == 4);
  CHECK(val_at_lambda(cyc_one(r)) == 0);

  CycInt x = cyc_sub(cyc_zeta_pow(r, 1), cyc_from_long(r, 4));
  CHECK(val_at_split(r, 11, 4, x) == 1);
  CHECK(val_at_split(r, 11, 9, x) == 0);
  CHECK(val_at_split(r, 11, 4, cyc_from_long(r, 11)) == 1);
  CHECK(val_at_split(r, 11, 4, cyc_from_long(r, 121)) == 2);

  // additivity under products
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    CycInt a = random_elem(rng, r, -4, 4), b = random_elem(rng, r, -4, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CycInt ab = cyc_mul(a, b);
    CHECK(val_at_lambda(ab) == val_at_lambda(a) + val_at_lambda(b));
    CHECK(val_at_split(r, 11, 4, ab) == val_at_split(r, 11, 4, a) + val_at_split(r, 11, 4, b));
  }

  // membership based valuation agrees on both prime shapes
  CycIdeal P = prime_from_root(r, 11, 4);
  CHECK(val_by_membership(P, x) == 1);
  CHECK(val_by_membership(P, cyc_from_long(r, 121)) == 2);
  CHECK(val_by_membership(lambda_ideal(r), cyc_from_long(r, 5)) == 4);
  CycIdeal Q = split_prime(5, 2)[0];
  CHECK(val_by_membership(Q, cyc_from_long(r, 8)) == 3);
}

TEST_CASE("short elements of an ideal lattice") {
  CycIdeal P = prime_from_root(5, 11, 4);
  std::vector<CycInt> out = short_elements(P, 2, 25);
  REQUIRE(!out.empty());
  // the limit is a loop bound, the last combination block may overshoot a bit
  CHECK(out.size() <= 25 + 8);
  for (const CycInt& x : out) {
    CHECK(!x.is_zero());
    CHECK(ideal_contains(P, x));
  }
  // deterministic
  std::vector<CycInt> rerun = short_elements(P, 2, 25);
  REQUIRE(rerun.size() == out.size());
  for (size_t i = 0; i < out.size(); ++i) CHECK(rerun[i] == out[i]);

  // the first few elements have small norms, in particular one of norm 11
  bool saw_norm_11 = false;
  for (const CycInt& x : out) saw_norm_11 = saw_norm_11 || cyc_norm(x) == 11;
  CHECK(saw_norm_11);
}

TEST_CASE("determinant over the ring") {
  long r = 5;
  CycInt one = cyc_one(r), z = cyc_zeta_pow(r, 1);
  CycInt d = cyc_det({{one, z}, {z, one}});
  CHECK(d == cyc_sub(one, cyc_mul(z, z)));
  CHECK(cyc_det({{z}}) == z);

  // row swap flips sign
  CycInt e = cyc_det({{z, one}, {one, z}});
  CHECK(cyc_add(d, e).is_zero());
}
