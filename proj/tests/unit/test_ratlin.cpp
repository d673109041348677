#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qgsmooth/error.hpp"
#include "qgsmooth/ratlin.hpp"
#include "qgsmooth/wahl.hpp"

using namespace qgs;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> v(lo, hi);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v(rng);
  return m;
}

}  // namespace

TEST_CASE("rational normal form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
  CHECK(Rational(5).to_string() == "5");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rational arithmetic and order") {
  const Rational a = Rational::parse("2/3");
  const Rational b = Rational::parse("-1/6");
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == Rational(BigInt(5), BigInt(6)));
  CHECK(a * b == Rational(BigInt(-1), BigInt(9)));
  CHECK(a / b == Rational(-4));
  CHECK(b < a);
  CHECK(Rational(BigInt(7), BigInt(6)) > Rational(1));
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/"), Error);
}

TEST_CASE("large denominators stay exact") {
  Rational sum;
  for (int k = 1; k <= 40; ++k) sum += Rational(BigInt(1), BigInt(k) * BigInt(k + 1));
  CHECK(sum == Rational(BigInt(40), BigInt(41)));
  const Rational tiny(BigInt(1), BigInt(361) * BigInt(361) * BigInt(361));
  CHECK(tiny * Rational(BigInt(361) * BigInt(361) * BigInt(361)) == Rational(1));
}

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(gram_matrix(Chain({3, 3}))) == 2);
  CHECK(rank(RatMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
}

TEST_CASE("solve_unique examples") {
  const Rational v[] = {Rational(2)};
  CHECK(solve_unique(RatMatrix{{-4}}, v) == RatVector{Rational(BigInt(-1), BigInt(2))});

  const RatVector w = {Rational(3), Rational::parse("-2/5"), Rational(7)};
  CHECK(solve_unique(RatMatrix::identity(3), w) == w);

  const RatVector k = {2, 0, 1, 0};
  const RatVector x = solve_unique(gram_matrix(Chain({4, 2, 3, 2})), k);
  CHECK(x == RatVector{Rational::parse("-2/3"), Rational::parse("-2/3"), Rational::parse("-2/3"),
                       Rational::parse("-1/3")});

  const RatVector z = {1, 1};
  CHECK_THROWS_AS(solve_unique(RatMatrix{{1, 2}, {2, 4}}, z), Error);
  try {
    solve_unique(RatMatrix{{1, 2}, {2, 4}}, z);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
}

TEST_CASE("negative definiteness examples") {
  CHECK(is_negative_definite(RatMatrix{{-4}}));
  CHECK_FALSE(is_negative_definite(RatMatrix{{0}}));
  CHECK(is_negative_definite(gram_matrix(Chain({6, 2, 2}))));
  CHECK(leading_principal_minors(gram_matrix(Chain({6, 2, 2}))) == RatVector{-6, 11, -16});
  CHECK_FALSE(is_negative_definite(RatMatrix{{-1, 2}, {2, -1}}));
  try {
    is_negative_definite(RatMatrix{{-1, 2}, {0, -1}});
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymmetric);
  }
}

TEST_CASE("leading minors through a vanishing pivot") {
  const RatMatrix m{{0, 1, 0}, {1, 0, 0}, {0, 0, 3}};
  CHECK(leading_principal_minors(m) == RatVector{0, -1, -3});
}

TEST_CASE("property: M * solve(M, v) = v on random nonsingular systems") {
  std::mt19937_64 rng(11);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RatMatrix m = random_matrix(rng, n, n, -5, 5);
    const RatMatrix v = random_matrix(rng, n, 1, -9, 9);
    const RatVector rhs = v.transpose().row(0);
    if (rank(m) < n) {
      CHECK_THROWS_AS(solve_unique(m, rhs), Error);
      continue;
    }
    CHECK(m.apply(solve_unique(m, rhs)) == rhs);
    ++solved;
  }
  CHECK(solved > 200);
}

TEST_CASE("property: rank agrees with transpose and with the minor oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    // Small entry range so that rank deficiency actually happens.
    const RatMatrix m = random_matrix(rng, r, c, -1, 1);
    const std::size_t k = rank(m);
    CHECK(k == rank(m.transpose()));
    CHECK(k == oracle::minor_rank(m));
  }
}

TEST_CASE("property: minors match determinants of leading blocks") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const RatMatrix m = random_matrix(rng, n, n, -2, 2);
    const RatVector minors = leading_principal_minors(m);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<Rational>> block(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block[i][j] = m(i, j);
      CHECK(minors[k - 1] == oracle::leibniz_det(block));
    }
  }
}

TEST_CASE("property: every chain Gram matrix up to length 5, entries up to 6, is negative definite") {
  std::vector<int> b;
  std::size_t checked = 0;
  auto rec = [&](auto&& self) -> void {
    if (!b.empty()) {
      CHECK(is_negative_definite(gram_matrix(Chain(b))));
      ++checked;
    }
    if (b.size() == 5) return;
    for (int v = 2; v <= 6; ++v) {
      b.push_back(v);
      self(self);
      b.pop_back();
    }
  };
  rec(rec);
  CHECK(checked == 5 + 25 + 125 + 625 + 3125);
}
