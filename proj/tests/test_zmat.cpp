#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubictk/zmat.hpp"

#include <set>

using namespace ctk;

namespace {

ZMat random_mat(Rng& rng, size_t r, size_t c, long lo, long hi) {
  ZMat m(r, std::vector<Int>(c));
  for (auto& row : m)
    for (auto& x : row) x = rng.range(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("hermite form of a small matrix") {
  ZMat h = hnf({{2, 4}, {6, 8}});
  CHECK(h == ZMat{{2, 0}, {0, 4}});

  // a zero row is dropped, a rank 1 matrix keeps a single row
  CHECK(hnf({{0, 0}, {3, 6}}) == ZMat{{3, 6}});
  CHECK(hnf({{2, 4}, {3, 6}}) == ZMat{{1, 2}});
  CHECK(hnf({{-5}}) == ZMat{{5}});
}

TEST_CASE("hermite form is a lattice invariant") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    ZMat m = random_mat(rng, 4, 3, -9, 9);
    ZMat h = hnf(m);
    CHECK(hnf(h) == h);

    // every original row must lie in the span of h and vice versa
    ZMat stacked = m;
    for (const auto& row : h) stacked.push_back(row);
    CHECK(hnf(stacked) == h);
  }
}

TEST_CASE("membership with coefficients") {
  ZMat h = hnf({{2, 1, 0}, {0, 3, 1}, {0, 0, 4}});
  REQUIRE(nrows(h) == 3);

  std::vector<Int> v = {4, 5, 9};  // 2*row0 + row1 + 2*row2
  std::vector<Int> coeffs;
  REQUIRE(hnf_member(h, v, &coeffs));
  std::vector<Int> back(3, 0);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) back[j] += coeffs[i] * h[i][j];
  CHECK(back == v);

  CHECK(!hnf_member(h, {1, 0, 0}));
  CHECK(hnf_member(h, {0, 0, 0}));
}

TEST_CASE("modular hermite form agrees with the stacked computation") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    size_t n = 2 + (size_t)rng.below(4);
    size_t r = 1 + (size_t)rng.below(n + 2);
    ZMat m = random_mat(rng, r, n, -50, 50);
    Int mod = 2 + rng.below(1000);

    ZMat stacked = m;
    for (size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = mod;
      stacked.push_back(e);
    }
    CHECK(hnf_mod(m, mod) == hnf(stacked));
  }
}

TEST_CASE("determinants") {
  CHECK(zmat_det({{3}}) == 3);
  CHECK(zmat_det({{1, 2}, {3, 4}}) == -2);
  CHECK(zmat_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(zmat_det({{1, 2}, {2, 4}}) == 0);

  // multiplicativity on random pairs
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ZMat a = random_mat(rng, 3, 3, -6, 6), b = random_mat(rng, 3, 3, -6, 6);
    CHECK(zmat_det(zmat_mul(a, b)) == zmat_det(a) * zmat_det(b));
  }
}

TEST_CASE("smith form invariant factors") {
  SnfResult s = snf({{2, 0}, {0, 6}}, false);
  CHECK(s.diag == std::vector<Int>{2, 6});
  CHECK(s.rank == 2);

  // the classic 2x2 with determinant 12 and content 1
  SnfResult t = snf({{2, 4}, {4, 2}}, false);
  CHECK(t.diag == std::vector<Int>{2, 6});

  // invariant factors of random matrices obey the divisibility chain
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    ZMat m = random_mat(rng, 3, 4, -8, 8);
    SnfResult u = snf(m, false);
    for (size_t i = 0; i + 1 < u.diag.size(); ++i) {
      CHECK(u.diag[i] > 0);
      CHECK(u.diag[i + 1] % u.diag[i] == 0);
    }
    CHECK(u.rank == u.diag.size());
  }
}

TEST_CASE("smith transform reads off quotient coordinates") {
  ZMat m = {{2, 4}, {4, 2}};
  SnfResult s = snf(m, true);
  REQUIRE(s.diag == std::vector<Int>{2, 6});
  CHECK(zmat_mul(s.V, s.Vinv) == zmat_identity(2));
  CHECK(zmat_mul(s.Vinv, s.V) == zmat_identity(2));

  auto coords = [&](const std::vector<Int>& w) {
    std::vector<Int> c(2, 0);
    for (size_t j = 0; j < 2; ++j) {
      for (size_t i = 0; i < 2; ++i) c[j] += w[i] * s.V[i][j];
      c[j] = fmod(c[j], s.diag[j]);
    }
    return c;
  };

  // rows of m are trivial in the quotient, and coordinates are additive
  CHECK(coords({2, 4}) == std::vector<Int>{0, 0});
  CHECK(coords({4, 2}) == std::vector<Int>{0, 0});
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> w = {rng.range(-20, 20), rng.range(-20, 20)};
    std::vector<Int> shifted = {w[0] + 3 * m[0][0] - m[1][0], w[1] + 3 * m[0][1] - m[1][1]};
    CHECK(coords(w) == coords(shifted));
  }

  // the quotient here is Z/2 x Z/6 of order 12: count distinct classes
  std::set<std::vector<Int>> seen;
  for (long a = 0; a < 12; ++a)
    for (long b = 0; b < 12; ++b) seen.insert(coords({a, b}));
  CHECK(seen.size() == 12);
}

TEST_CASE("right kernel") {
  ZMat m = {{1, 2, 3}, {2, 4, 6}};
  ZMat k = zmat_right_kernel(m);
  REQUIRE(nrows(k) == 2);
  for (const auto& row : k) {
    std::vector<Int> im = zmat_apply(m, row);
    for (const Int& x : im) CHECK(x == 0);
  }

  // full rank square matrix has trivial kernel
  CHECK(nrows(zmat_right_kernel({{2, 1}, {1, 1}})) == 0);

  // kernel rows are independent: their hnf keeps both rows
  CHECK(nrows(hnf(k)) == 2);
}
