#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qgsmooth/error.hpp"
#include "qgsmooth/wahl.hpp"

using namespace qgs;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// All chains with length <= max_len and entries in [2, max_entry].
template <class F>
void for_each_chain(std::size_t max_len, int max_entry, F f) {
  std::vector<int> b;
  auto rec = [&](auto&& self) -> void {
    if (!b.empty()) f(b);
    if (b.size() == max_len) return;
    for (int v = 2; v <= max_entry; ++v) {
      b.push_back(v);
      self(self);
      b.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

TEST_CASE("chain construction") {
  CHECK_THROWS_AS(Chain(std::vector<int>{}), Error);
  CHECK_THROWS_AS(Chain({4, 1}), Error);
  CHECK(Chain::parse("4,2,3,2") == Chain({4, 2, 3, 2}));
  CHECK(Chain({4, 2, 3, 2}).to_string() == "4,2,3,2");
  CHECK_THROWS_AS(Chain::parse("4,,2"), Error);
  CHECK_THROWS_AS(Chain::parse("4,a"), Error);
  CHECK(Chain({2, 5}) < Chain({2, 2, 2}));
  CHECK(Chain({2, 5}) < Chain({5, 2}));
}

TEST_CASE("hj_value examples") {
  CHECK(hj_value(Chain({4})) == Rational(4));
  CHECK(hj_value(Chain({3, 3})) == q("8/3"));
  CHECK(hj_value(Chain({4, 2, 3, 2})) == q("27/8"));
  CHECK(hj_value(Chain({2, 9, 2, 2, 2, 2, 3})) == q("169/90"));
}

TEST_CASE("hj_value falls back to big integers") {
  const Chain long_chain(std::vector<int>(40, 1000));
  const auto [m, qq] = oracle::hj_by_determinants(long_chain.entries());
  CHECK(hj_value(long_chain) == Rational(m, qq));
  CHECK(chain_from_fraction(m, qq) == long_chain);
}

TEST_CASE("chain_from_fraction examples") {
  CHECK(chain_from_fraction(4, 1) == Chain({4}));
  CHECK(chain_from_fraction(27, 8) == Chain({4, 2, 3, 2}));
  CHECK(chain_from_fraction(169, 90) == Chain({2, 9, 2, 2, 2, 2, 3}));
  CHECK_THROWS_AS(chain_from_fraction(4, 2), Error);
  CHECK_THROWS_AS(chain_from_fraction(3, 3), Error);
  CHECK_THROWS_AS(chain_from_fraction(3, 0), Error);
}

TEST_CASE("recognize_class_T examples") {
  auto t = recognize_class_T(Chain({4}));
  REQUIRE(t);
  CHECK(t->d == 1);
  CHECK(t->n == 2);
  CHECK(t->a == 1);
  t = recognize_class_T(Chain({9, 2, 2, 2, 2, 2}));
  REQUIRE(t);
  CHECK(t->n == 7);
  CHECK(t->d == 1);
  CHECK_FALSE(recognize_class_T(Chain({5})));
  CHECK(oracle::class_t_search(5, 1).empty());
  t = recognize_class_T(Chain({4, 2, 3, 2}));
  REQUIRE(t);
  CHECK(t->d == 3);
  CHECK(t->m == 27);
  CHECK(t->q == 8);
  CHECK_FALSE(recognize_class_T(Chain({2, 2})));
}

TEST_CASE("class-T data of the corpus chains") {
  struct Case {
    std::vector<int> b;
    long long d, n;
  };
  const Case cases[] = {
      {{6, 2, 2}, 1, 4},
      {{7, 3, 2, 2, 2, 2}, 2, 6},
      {{3, 3}, 2, 2},
      {{5, 2}, 1, 3},
      {{2, 9, 2, 2, 2, 2, 3}, 1, 13},
      {{8, 2, 2, 2, 2}, 1, 6},
      {{2, 2, 9, 2, 2, 2, 2, 4}, 1, 19},
      {{2, 2, 7, 6, 2, 3, 2, 2, 2, 2, 4}, 1, 73},
      {{5, 8, 6, 2, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2}, 1, 151},
  };
  for (const auto& c : cases) {
    CAPTURE(Chain(c.b).to_string());
    const auto t = recognize_class_T(Chain(c.b));
    REQUIRE(t);
    CHECK(t->d == c.d);
    CHECK(t->n == c.n);
    const auto [m, qq] = oracle::hj_by_determinants(c.b);
    const auto found = oracle::class_t_search(m.convert_to<long long>(), qq.convert_to<long long>());
    REQUIRE(found.size() == 1);
    CHECK(found[0].n == c.n);
  }
}

TEST_CASE("generate_class_T examples") {
  CHECK(generate_class_T(1, 4) == std::vector<Chain>{Chain({4})});
  const auto two = generate_class_T(2, 12);
  CHECK(std::find(two.begin(), two.end(), Chain({5, 2})) != two.end());
  CHECK(std::find(two.begin(), two.end(), Chain({2, 5})) != two.end());
  CHECK(std::find(two.begin(), two.end(), Chain({3, 3})) != two.end());
  const auto four = generate_class_T(4, 12);
  CHECK(std::find(four.begin(), four.end(), Chain({4, 2, 3, 2})) != four.end());
  CHECK(std::is_sorted(four.begin(), four.end()));
  CHECK(generate_class_T(1, 3).empty());
}

TEST_CASE("discrepancies and K^2 contributions") {
  CHECK(discrepancies(Chain({4})) == RatVector{q("-1/2")});
  CHECK(discrepancies(Chain({4, 2, 3, 2})) == RatVector{q("-2/3"), q("-2/3"), q("-2/3"), q("-1/3")});
  CHECK(discrepancies(Chain({2, 2})) == RatVector{0, 0});
  CHECK(k2_contribution(Chain({4})) == Rational(1));
  CHECK(discrepancies(Chain({7, 3, 2, 2, 2, 2})) ==
        RatVector{q("-5/6"), q("-5/6"), q("-2/3"), q("-1/2"), q("-1/3"), q("-1/6")});
  CHECK(k2_contribution(Chain({7, 3, 2, 2, 2, 2})) == Rational(5));
  CHECK(k2_contribution(Chain({2, 2})) == Rational(0));
  CHECK(k2_contribution(Chain({5, 8, 6, 2, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2})) == Rational(14));
}

TEST_CASE("index examples") {
  CHECK(index(Chain({4, 2, 3, 2})) == 3);
  CHECK(index(Chain({5, 2})) == 3);
  CHECK(index(Chain({6, 2, 2})) == 4);
  try {
    index(Chain({5}));
    FAIL("expected NotClassT");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClassT);
  }
}

TEST_CASE("property: hj_value matches the determinant oracle and round-trips (len <= 5, entries <= 9)") {
  std::size_t n = 0;
  for_each_chain(5, 9, [&](const std::vector<int>& b) {
    const Chain c(b);
    const auto [m, qq] = oracle::hj_by_determinants(b);
    const Rational v = hj_value(c);
    CHECK(v.num() == m);
    CHECK(v.den() == qq);
    CHECK(chain_from_fraction(m, qq) == c);
    ++n;
  });
  CHECK(n == 8 + 64 + 512 + 4096 + 32768);
}

TEST_CASE("property: recognizer agrees with the (d,n,a) search and with the generator (len <= 6, entries <= 8)") {
  const auto generated = generate_class_T(6, 8);
  std::set<std::vector<int>> gen;
  for (const auto& c : generated) gen.insert(c.entries());
  std::set<std::vector<int>> rec;
  for_each_chain(6, 8, [&](const std::vector<int>& b) {
    const Chain c(b);
    const auto t = recognize_class_T(c);
    const auto [m, qq] = oracle::hj_by_determinants(b);
    const auto found = oracle::class_t_search(m.convert_to<long long>(), qq.convert_to<long long>());
    CHECK(found.size() <= 1);
    CHECK(t.has_value() == !found.empty());
    if (t) {
      rec.insert(b);
      CHECK(t->d == found[0].d);
      CHECK(t->n == found[0].n);
      CHECK(t->a == found[0].a);
      const auto r = recognize_class_T(c.reversed());
      REQUIRE(r);
      CHECK(r->d == t->d);
      CHECK(r->n == t->n);
    } else {
      CHECK_FALSE(recognize_class_T(c.reversed()));
    }
  });
  CHECK(rec == gen);
  CHECK(rec.size() > 50);
}

TEST_CASE("property: discrepancy solve agrees with the tridiagonal oracle; class-T invariants") {
  for (const auto& c : generate_class_T(6, 9)) {
    const RatVector a = discrepancies(c);
    CHECK(a == oracle::chain_discrepancies(c.entries()));
    const auto t = recognize_class_T(c);
    REQUIRE(t);
    for (const auto& ai : a) {
      CHECK(ai > Rational(-1));
      CHECK(ai < Rational(0));
    }
    CHECK(k2_contribution(c) == Rational(static_cast<long long>(c.length()) + 1) - Rational(t->d));
    CHECK(k2_contribution(c) == k2_contribution(c.reversed()));
  }
}

TEST_CASE("64-bit kernels agree with the exact path") {
  int buf[16];
  for_each_chain(4, 7, [&](const std::vector<int>& b) {
    const auto f = hj_fraction64(b);
    REQUIRE(f);
    const Rational v = hj_value(Chain(b));
    CHECK(v.num() == f->m);
    CHECK(v.den() == f->q);
    const std::size_t len = expand_fraction64(f->m, f->q, buf);
    CHECK(std::vector<int>(buf, buf + len) == b);
  });
  CHECK(expand_fraction64(5, 4, std::span<int>(buf, 2)) == 0);  // [2,2,2,2] does not fit
  const std::vector<int> huge(30, 1000);
  CHECK_FALSE(hj_fraction64(huge));
}
