#include "doctest.h"

#include "mcodes/gf.hpp"
#include "mcodes/polyfact.hpp"

using namespace mcodes;

namespace {

std::vector<KElt> kvec(std::initializer_list<std::uint32_t> v) {
  std::vector<KElt> out;
  for (auto x : v) out.push_back(KElt{x});
  return out;
}

// Independent irreducibility check: no root-generating factor over any proper
// subfield, i.e. gcd(y^(q^k) - y, f) = 1 for every k | deg f with k < deg f,
// evaluated by brute-force exponentiation in K[y]/(f).
bool irreducible_by_subfield_gcds(const Poly<BaseField>& f) {
  const auto n = static_cast<unsigned>(f.degree());
  const auto y = Poly<BaseField>::x(f.field_ptr());
  for (unsigned k = 1; k < n; ++k) {
    if (n % k) continue;
    Poly<BaseField> h = y;
    for (unsigned i = 0; i < k; ++i) h = powmod(h, f.field().order(), f);
    if (!gcd(h - y, f).is_one()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(mult_order(7, 4) == 2);
  CHECK(mult_order(5, 1) == 1);
  CHECK(mult_order(2, 7) == 3);
  CHECK_THROWS_AS(mult_order(6, 4), Error);
  for (std::uint64_t d = 1; d <= 60; ++d) {
    for (std::uint64_t q : {2, 3, 5, 7, 11}) {
      if (d % q == 0) continue;
      const auto t = mult_order(q, d);
      CHECK(euler_phi(d) % t == 0);
      CHECK(powmod_u64(q, t, d) == 1 % d);
      for (std::uint64_t s = 1; s < t; ++s) CHECK(powmod_u64(q, s, d) != 1 % d);
    }
  }
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("make_tower validates its input") {
  CHECK_THROWS_AS(make_tower(4, 1, 2), Error);
  try {
    make_tower(6, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  try {
    make_tower(7, 1, 4, kvec({6, 0, 6, 1}));
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
  try {
    make_tower(7, 1, 2, kvec({6, 0, 1}));  // y^2 - 1
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
}

TEST_CASE("F_7^4 with w^4 = w^2 + 1") {
  auto t = make_tower(7, 1, 4, kvec({6, 0, 6, 0, 1}));
  const auto& L = *t.ext;
  auto w = L.generator();
  auto w2 = L.mul(w, w);
  auto w4 = L.mul(w2, w2);
  CHECK(w4 == L.add(w2, L.one()));
  // 4w^2 - 2 squares to -1
  auto i = L.sub(L.mul(L.from_int(4), w2), L.from_int(2));
  CHECK(L.mul(i, i) == L.from_int(-1));
  CHECK(L.to_string(i) == "4*w^2+5");
}

TEST_CASE("trivial tower") {
  auto t = make_tower(2, 1, 1);
  CHECK(t.m() == 1);
  CHECK(t.q() == 2);
  CHECK(t.ext->order() == 2);
  auto one = t.ext->one();
  CHECK(t.ext->mul(one, one) == one);
}

TEST_CASE("random modulus is irreducible") {
  auto t = make_tower(3, 1, 10, std::nullopt, 42);
  auto lm = t.modulus_poly();
  CHECK(lm.degree() == 10);
  CHECK(irreducible_by_subfield_gcds(lm));
  auto t2 = make_tower(3, 1, 10, std::nullopt, 42);
  CHECK(t2.ext->modulus() == t.ext->modulus());
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, e, m] : {std::tuple{2u, 1u, 5u}, {3u, 1u, 4u}, {2u, 3u, 2u}, {3u, 2u, 3u}, {5u, 1u, 1u}}) {
    auto t = make_tower(p, e, m, std::nullopt, 7);
    const auto& L = *t.ext;
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
      auto a = L.random(rng), b = L.random(rng), c = L.random(rng);
      CHECK(L.mul(L.mul(a, b), c) == L.mul(a, L.mul(b, c)));
      CHECK(L.mul(a, L.add(b, c)) == L.add(L.mul(a, b), L.mul(a, c)));
      CHECK(L.add(a, L.neg(a)) == L.zero());
      if (!L.is_zero(a)) CHECK(L.mul(a, L.inv(a)) == L.one());
      CHECK(L.pow(L.pth_root(a), BigInt(p)) == a);
      CHECK(L.element(L.index(a)) == a);
    }
    const auto& K = *t.base;
    for (int it = 0; it < 200; ++it) {
      auto a = K.random(rng), b = K.random(rng), c = K.random(rng);
      CHECK(K.mul(K.add(a, b), c) == K.add(K.mul(a, c), K.mul(b, c)));
      if (!K.is_zero(a)) CHECK(K.mul(a, K.inv(a)) == K.one());
      CHECK(K.pow(K.pth_root(a), p) == a);
    }
  }
}

TEST_CASE("frobenius") {
  // F_4 = F_2(w)
  auto t4 = make_tower(2, 1, 2);
  auto w = t4.ext->generator();
  auto fw = frobenius(w, t4, 1);
  CHECK(fw == t4.ext->add(w, t4.ext->one()));
  CHECK(fw == t4.ext->mul(w, w));

  auto t = make_tower(3, 2, 3, std::nullopt, 5);
  const auto& L = *t.ext;
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    auto a = L.random(rng), b = L.random(rng);
    CHECK(frobenius(a, t, 0) == a);
    CHECK(frobenius(a, t, t.m()) == a);
    CHECK(frobenius(a, t, 1) == L.pow(a, BigInt(t.q())));
    CHECK(frobenius(L.mul(a, b), t, 1) == L.mul(frobenius(a, t, 1), frobenius(b, t, 1)));
    CHECK(frobenius(L.add(a, b), t, 1) == L.add(frobenius(a, t, 1), frobenius(b, t, 1)));
    auto k = L.embed(t.base->random(rng));
    CHECK(frobenius(k, t, 1) == k);
    CHECK((frobenius(a, t, 1) == a) == L.in_base_field(a));
  }
}

TEST_CASE("find_root") {
  auto t = make_tower(3, 1, 10, std::nullopt, 42);
  auto one = find_root(Poly<BaseField>::from_ints(t.base, {-1, 1}), t);
  REQUIRE(one);
  CHECK(*one == t.ext->one());
  auto h = Poly<BaseField>::from_ints(t.base, {1, 0, 1});
  auto i = find_root(h, t);
  REQUIRE(i);
  CHECK(t.ext->mul(*i, *i) == t.ext->from_int(-1));

  auto t5 = make_tower(5, 1, 18, std::nullopt, 1);
  auto cube = Poly<BaseField>::from_ints(t5.base, {1, 1, 1});
  auto j = find_root(cube, t5);
  REQUIRE(j);
  CHECK(t5.lift(cube).eval(*j) == t5.ext->zero());

  // x^2 + 1 has no root in F_3^3
  auto t3 = make_tower(3, 1, 3);
  CHECK_FALSE(find_root(h, t3));
}
