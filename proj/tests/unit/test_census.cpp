#include "doctest.h"

#include <numeric>

#include "mcodes/census.hpp"
#include "mcodes/polyfact.hpp"

using namespace mcodes;

namespace {

KPoly x_n_minus(const FieldPtr<BaseField>& k, std::uint64_t n, std::int64_t c) {
  return binomial(k, n, k->from_int(c));
}

KPoly random_monic(const FieldPtr<BaseField>& k, int deg, Rng& rng) {
  std::vector<KElt> v;
  for (int i = 0; i < deg; ++i) v.push_back(k->random(rng));
  v.push_back(k->one());
  return KPoly(k, v);
}

}  // namespace

TEST_CASE("proportions for small examples") {
  auto t = make_tower(2, 1, 2);
  auto f = x_n_minus(t.base, 3, 1);
  auto r = proportion(f, t);
  CHECK(r.proportion == Rational(3, 8));
  CHECK(r.total == 8);
  CHECK(r.count == 3);
  CHECK(proportion_fq(f, 2).proportion == Rational(3, 8));
  auto ex = exhaustive_census(f, t);
  CHECK(ex.total == 8);
  CHECK(ex.count == 3);

  auto t7 = make_tower(7, 1, 4);
  auto f7 = x_n_minus(t7.base, 4, 1);
  CHECK(proportion(f7, t7).proportion == Rational(3, 16));
  CHECK(proportion_fq(f7, 4).proportion == Rational(3, 16));
  auto ex7 = exhaustive_census(f7, t7);
  CHECK(ex7.total == 16);
  CHECK(ex7.count == 3);

  auto t3 = make_tower(2, 1, 3);
  auto irr = KPoly::from_ints(t3.base, {1, 1, 1});
  auto ri = proportion(irr, t3);
  CHECK(ri.proportion == Rational(1, 2));
  CHECK(ri.all_irreducible_over_L);
  CHECK(ri.lower_attained);
  auto exi = exhaustive_census(irr, t3);
  CHECK(exi.total == 2);
  CHECK(exi.count == 1);
}

TEST_CASE("extremal cases of the bounds") {
  // splits already over K
  auto k5 = BaseField::make_prime(5);
  auto split = x_n_minus(k5, 4, 1) * KPoly::from_ints(k5, {-1, 1});
  auto t = make_tower(5, 1, 2);
  auto r = proportion(split, t);
  CHECK(r.splits_over_L);
  CHECK(r.upper_attained);
  CHECK(r.lower <= r.proportion);
  CHECK(r.proportion <= r.upper);

  // gcd(m, deg f_i) = 1 for all i
  auto k2 = BaseField::make_prime(2);
  auto f = KPoly::from_ints(k2, {1, 1, 1}) * KPoly::from_ints(k2, {1, 1});
  auto rf = proportion_fq(f, 3);
  CHECK(rf.all_irreducible_over_L);
  CHECK(rf.lower_attained);
  CHECK(rf.proportion == Rational(1, 4));
  CHECK_FALSE(rf.upper_attained);
}

TEST_CASE("formulas agree with exhaustive enumeration") {
  struct Setup {
    unsigned p, e, m;
  };
  for (auto s : {Setup{2, 1, 2}, Setup{2, 1, 3}, Setup{3, 1, 2}, Setup{2, 2, 2}, Setup{5, 1, 2}}) {
    auto t = make_tower(s.p, s.e, s.m, std::nullopt, 3);
    Rng rng(s.p * 31 + s.m);
    for (int it = 0; it < 12; ++it) {
      auto f = random_monic(t.base, 1 + it % 5, rng);
      auto r = proportion(f, t);
      auto rq = proportion_fq(f, s.m);
      CAPTURE(to_string(f));
      CHECK(r.proportion == rq.proportion);
      CHECK(r.total == rq.total);
      auto ex = exhaustive_census(f, t);
      CHECK(ex.total == r.total);
      CHECK(ex.count == r.count);
      CHECK(r.lower <= r.proportion);
      CHECK(r.proportion <= r.upper);
      CHECK(r.lower_attained == r.all_irreducible_over_L);
      CHECK(r.upper_attained == r.splits_over_L);
    }
  }
}

TEST_CASE("cyclotomic profile") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (unsigned m = 1; m <= 6; ++m) {
        auto p = cyclotomic_profile(n, q, m);
        std::uint64_t deg = 0, s = 0;
        for (const auto& e : p.entries) {
          deg += e.t * e.order;
          s += e.t;
          CHECK(e.nd == std::gcd<std::uint64_t>(m, e.order));
        }
        CHECK(deg == n);
        CHECK(p.s == s);
      }
    }
  }
  // number of distinct irreducible factors of x^n - 1
  auto k3 = BaseField::make_prime(3);
  for (std::uint64_t n : {1u, 2u, 4u, 5u, 8u, 10u, 11u, 13u}) {
    auto fac = factor(x_n_minus(k3, n, 1));
    CHECK(fac.factors.size() == cyclotomic_profile(n, 3, 1).s);
    for (const auto& fm : fac.factors) CHECK(fm.second == 1);
  }
  CHECK_THROWS_AS(cyclotomic_profile(4, 2, 1), Error);
}

TEST_CASE("cyclic census") {
  auto c = cyclic_census(4, 7, 4);
  CHECK(c.report.proportion == Rational(3, 16));
  CHECK(cyclic_census(1, 2, 1).report.proportion == Rational(1, 2));
  auto c3 = cyclic_census(3, 2, 3);
  CHECK(c3.profile.s == 2);
  CHECK(c3.report.proportion == Rational(1, 4));
  CHECK(c3.lower_condition);
  CHECK(c3.report.lower_attained);
  auto t = make_tower(2, 1, 3);
  CHECK(exhaustive_census(x_n_minus(t.base, 3, 1), t).ratio() == Rational(1, 4));

  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
    const auto pf = prime_factors(q);
    unsigned e = 0;
    for (std::uint64_t v = q; v > 1; v /= pf[0]) ++e;
    auto k = make_tower(static_cast<unsigned>(pf[0]), e, 1).base;
    for (std::uint64_t n = 1; n <= 12; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (unsigned m = 1; m <= 6; ++m) {
        auto cc = cyclic_census(n, q, m);
        auto pq = proportion_fq(x_n_minus(k, n, 1), m);
        CHECK(cc.report.proportion == pq.proportion);
        CHECK(cc.lower_condition == cc.report.lower_attained);
        CHECK(cc.upper_condition == cc.report.upper_attained);
      }
    }
  }
}

TEST_CASE("negacyclic census") {
  CHECK(negacyclic_census(1, 3, 2).report.proportion == Rational(1, 2));
  auto t = make_tower(5, 1, 2);
  auto f = x_n_minus(t.base, 3, -1);
  auto ex = exhaustive_census(f, t);
  CHECK(negacyclic_census(3, 5, 2).report.proportion == ex.ratio());

  auto k5 = BaseField::make_prime(5);
  CHECK(negacyclic_product(9, k5) == x_n_minus(k5, 9, -1));
  for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
    const auto pf = prime_factors(q);
    unsigned e = q == 9 ? 2 : 1;
    auto k = make_tower(static_cast<unsigned>(pf[0]), e, 1).base;
    for (std::uint64_t n = 1; n <= 9; n += 2) {
      if (std::gcd(n, q) != 1) continue;
      CHECK(negacyclic_product(n, k) == x_n_minus(k, n, -1));
      for (unsigned m = 1; m <= 4; ++m)
        CHECK(negacyclic_census(n, q, m).report.proportion == proportion_fq(x_n_minus(k, n, -1), m).proportion);
    }
  }
  try {
    negacyclic_census(4, 3, 1);
    FAIL("expected EvenN");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenN);
  }
  try {
    negacyclic_census(3, 2, 1);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("exhaustive census cap") {
  auto t = make_tower(7, 1, 4);
  try {
    exhaustive_census(x_n_minus(t.base, 4, 1), t, 10);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}
