#include "doctest.h"

#include <map>

#include "mcodes/gf.hpp"
#include "mcodes/polyfact.hpp"

using namespace mcodes;

namespace {

template <FiniteField F>
Poly<F> random_monic(const FieldPtr<F>& fp, int deg, Rng& rng) {
  std::vector<typename F::Element> v;
  for (int i = 0; i < deg; ++i) v.push_back(fp->random(rng));
  v.push_back(fp->one());
  return Poly<F>(fp, std::move(v));
}

// Brute-force: a polynomial over a small field is irreducible iff no monic
// polynomial of degree 1..deg/2 divides it.
bool irreducible_brute(const Poly<BaseField>& f) {
  const auto& K = f.field();
  const auto q = K.size();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<KElt> c(d + 1);
      auto r = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = K.element(r % q);
        r /= q;
      }
      c[d] = K.one();
      if (divides(Poly<BaseField>(f.field_ptr(), c), f)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto K = BaseField::make_prime(3);
  auto f = Poly<BaseField>::from_ints(K, {1, 0, 1}) * pow(Poly<BaseField>::from_ints(K, {1, 1}), 3) *
           pow(Poly<BaseField>::from_ints(K, {-1, 1}), 2);
  CHECK(f.degree() == 7);
  CHECK(f == Poly<BaseField>::from_ints(K, {1, 1, 2, 2, 2, 2, 1, 1}));
  auto [s, r] = divmod(f, f);
  CHECK(s.is_one());
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(f, Poly<BaseField>(K)), Error);

  auto K7 = BaseField::make_prime(7);
  auto x4 = Poly<BaseField>::from_ints(K7, {-1, 0, 0, 0, 1});
  CHECK(K7->is_zero(x4.eval(K7->one())));

  auto a = pow(Poly<BaseField>::from_ints(K7, {-1, 1}), 2) * Poly<BaseField>::from_ints(K7, {1, 1});
  auto b = Poly<BaseField>::from_ints(K7, {-1, 1}) * pow(Poly<BaseField>::from_ints(K7, {1, 1}), 2);
  CHECK(gcd(a, b) == Poly<BaseField>::from_ints(K7, {-1, 0, 1}));
  CHECK(gcd(a.scaled(K7->from_int(3)), a) == a.monic());
  CHECK_THROWS_AS(gcd(Poly<BaseField>(K7), Poly<BaseField>(K7)), Error);

  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    auto u = random_monic(K7, 5, rng), v = random_monic(K7, 3, rng);
    auto bz = xgcd(u, v);
    CHECK(bz.s * u + bz.t * v == bz.gcd);
  }
}

TEST_CASE("gcd over F_7^4 with the paper's g") {
  std::vector<KElt> lm{KElt{6}, KElt{0}, KElt{6}, KElt{0}, KElt{1}};
  auto t = make_tower(7, 1, 4, lm);
  const auto& L = *t.ext;
  auto w = L.generator();
  auto beta = L.sub(L.mul(L.from_int(4), L.mul(w, w)), L.from_int(2));
  Poly<ExtField> g = Poly<ExtField>(t.ext, {L.from_int(-1), L.one()}) *
                     Poly<ExtField>(t.ext, {L.neg(beta), L.one()});
  CHECK(gcd(g, Poly<ExtField>(t.ext, {L.one(), L.one()})).is_one());
}

TEST_CASE("squarefree decomposition") {
  auto K = BaseField::make_prime(3);
  auto x2p1 = Poly<BaseField>::from_ints(K, {1, 0, 1});
  auto xp1 = Poly<BaseField>::from_ints(K, {1, 1});
  auto xm1 = Poly<BaseField>::from_ints(K, {-1, 1});
  auto f = pow(x2p1, 2) * pow(xp1, 3) * pow(xm1, 2);
  auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 2);
  CHECK(sq[0].first == x2p1 * xm1);
  CHECK(sq[1].second == 3);
  CHECK(sq[1].first == xp1);

  // x^p - c over F_p: c^{1/p} = c
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto Kp = BaseField::make_prime(p);
    auto c = Kp->from_int(p - 1);
    auto sp = squarefree_decomposition(binomial(Kp, p, c));
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].second == p);
    CHECK(sp[0].first == Poly<BaseField>(Kp, {Kp->neg(Kp->pth_root(c)), Kp->one()}));
  }
}

TEST_CASE("factor examples") {
  auto K = BaseField::make_prime(7);
  auto fac = factor(Poly<BaseField>::from_ints(K, {-1, 0, 0, 0, 1}));
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.factors[0].first == Poly<BaseField>::from_ints(K, {1, 1}));
  CHECK(fac.factors[1].first == Poly<BaseField>::from_ints(K, {-1, 1}));
  CHECK(fac.factors[2].first == Poly<BaseField>::from_ints(K, {1, 0, 1}));

  auto t = make_tower(5, 1, 18, std::nullopt, 3);
  auto cube = t.lift(Poly<BaseField>::from_ints(t.base, {1, 1, 1}));
  auto fl = factor(cube);
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.factors[0].first.degree() == 1);
  CHECK(fl.expand() == cube);
}

TEST_CASE("factorization round trips") {
  int count = 0;
  for (auto [p, e, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 2u}, {7u, 1u, 1u}}) {
    auto t = make_tower(p, e, m, std::nullopt, 9);
    Rng rng(p * 100 + m);
    for (int it = 0; it < 50; ++it, ++count) {
      std::uniform_int_distribution<int> deg(1, 12);
      auto f = random_monic(t.base, deg(rng), rng);
      if (it % 3 == 0) f = f * f * random_monic(t.base, 2, rng);
      auto fac = factor(f.scaled(t.base->from_int(2 % p == 0 ? 1 : 2)), it);
      CHECK(fac.expand() == f.scaled(t.base->from_int(2 % p == 0 ? 1 : 2)));
      for (const auto& [g, mult] : fac.factors) {
        CHECK(g.is_monic());
        CHECK(is_irreducible(g));
        if (g.degree() <= 6) CHECK(irreducible_brute(g));
      }
      for (std::size_t i = 1; i < fac.factors.size(); ++i) {
        CHECK(canonical_less(fac.factors[i - 1].first, fac.factors[i].first));
      }
      auto fl = t.lift(f);
      auto facl = factor(fl, it);
      CHECK(facl.expand() == fl);
      for (const auto& [g, mult] : facl.factors) CHECK(is_irreducible(g));
    }
  }
  CHECK(count == 250);
}

TEST_CASE("is_irreducible") {
  auto K3 = BaseField::make_prime(3);
  CHECK(is_irreducible(Poly<BaseField>::from_ints(K3, {1, 0, 1})));
  CHECK(is_irreducible(Poly<BaseField>::from_ints(K3, {2, 1})));
  CHECK_THROWS_AS(is_irreducible(Poly<BaseField>::from_ints(K3, {2})), Error);
  auto t = make_tower(7, 1, 4);
  CHECK_FALSE(is_irreducible(t.lift(Poly<BaseField>::from_ints(t.base, {1, 0, 1}))));

  for (std::uint32_t p : {2u, 3u}) {
    auto K = BaseField::make_prime(p);
    for (int deg = 1; deg <= 5; ++deg) {
      std::uint64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<KElt> c(deg + 1);
        auto r = idx;
        for (int i = 0; i < deg; ++i) {
          c[i] = KElt{static_cast<std::uint32_t>(r % p)};
          r /= p;
        }
        c[deg] = KElt{1};
        Poly<BaseField> f(K, c);
        CHECK(is_irreducible(f) == irreducible_brute(f));
      }
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  auto K7 = BaseField::make_prime(7);
  CHECK(cyclotomic(1, K7) == Poly<BaseField>::from_ints(K7, {-1, 1}));
  CHECK(cyclotomic(4, K7) == Poly<BaseField>::from_ints(K7, {1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(14, K7), Error);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    auto K = BaseField::make_prime(q);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      if (n % q == 0) continue;
      auto prod = Poly<BaseField>::one(K);
      for (auto d : divisors(n)) prod *= cyclotomic(d, K);
      CHECK(prod == binomial(K, n, K->one()));
      auto phi = cyclotomic(n, K);
      CHECK(phi.degree() == static_cast<int>(euler_phi(n)));
      auto fac = factor(phi);
      const auto o = mult_order(q, n);
      CHECK(fac.factors.size() == euler_phi(n) / o);
      for (const auto& [g, mult] : fac.factors) {
        CHECK(g.degree() == static_cast<int>(o));
        CHECK(mult == 1);
      }
    }
  }
}

TEST_CASE("factors over L") {
  for (unsigned m : {1u, 2u, 3u, 4u, 6u}) {
    auto t = make_tower(2, 1, m, std::nullopt, 4);
    for (int deg = 1; deg <= 6; ++deg) {
      Rng rng(deg * 31 + m);
      for (int it = 0; it < 5; ++it) {
        auto f = random_monic(t.base, deg, rng);
        if (!is_irreducible(f)) continue;
        auto delta = num_factors_over_L(f, t);
        CHECK(delta == std::gcd(m, static_cast<unsigned>(deg)));
        auto fl = factor(t.lift(f));
        CHECK(fl.factors.size() == delta);
        for (const auto& [g, mult] : fl.factors) CHECK(g.degree() == deg / static_cast<int>(delta));
      }
    }
  }
  auto t18 = make_tower(5, 1, 18, std::nullopt, 2);
  CHECK(num_factors_over_L(Poly<BaseField>::from_ints(t18.base, {2, 0, 1}), t18) == 2);
  auto t3 = make_tower(5, 1, 3, std::nullopt, 2);
  auto irr2 = Poly<BaseField>::from_ints(t3.base, {2, 0, 1});
  CHECK(num_factors_over_L(irr2, t3) == 1);
  CHECK(factor(t3.lift(irr2)).factors.size() == 1);
  CHECK_THROWS_AS(num_factors_over_L(Poly<BaseField>::from_ints(t3.base, {-1, 0, 1}), t3), Error);
}

TEST_CASE("gcd is invariant under scalar extension") {
  auto t = make_tower(3, 1, 4, std::nullopt, 8);
  Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    auto c = random_monic(t.base, 2, rng);
    auto a = c * random_monic(t.base, 3, rng), b = c * random_monic(t.base, 4, rng);
    CHECK(t.lift(gcd(a, b)) == gcd(t.lift(a), t.lift(b)));
  }
}
