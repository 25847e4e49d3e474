#include "doctest.h"

#include <algorithm>
#include <map>

#include "mcodes/gf.hpp"
#include "mcodes/matmod.hpp"
#include "mcodes/polyfact.hpp"

using namespace mcodes;

namespace {

KMat random_mat(const FieldPtr<BaseField>& k, std::size_t r, std::size_t c, Rng& rng) {
  KMat m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = k->random(rng);
  return m;
}

KPoly random_monic(const FieldPtr<BaseField>& k, int deg, Rng& rng) {
  std::vector<KElt> v;
  for (int i = 0; i < deg; ++i) v.push_back(k->random(rng));
  v.push_back(k->one());
  return KPoly(k, v);
}

struct PaperBlockExample {
  FieldPtr<BaseField> k = BaseField::make_prime(5);
  KPoly f1 = KPoly::from_ints(k, {-2, 0, 1});
  KPoly f2 = KPoly::from_ints(k, {1, 1, 1});
  KMat m = block_diag<BaseField>(
      {companion(f1), companion(f1 * pow(f2, 2)), companion(pow(f1, 2) * pow(f2, 3))});
};

}  // namespace

TEST_CASE("kernel basics") {
  auto k = BaseField::make_prime(3);
  auto id = KMat::identity(k, 4);
  CHECK(kernel(id).rows() == 0);
  KMat z(k, 2, 3);
  CHECK(kernel(z) == KMat::identity(k, 3));
  Rng rng(2);
  for (int it = 0; it < 100; ++it) {
    auto a = random_mat(k, 1 + it % 5, 1 + (it / 5) % 6, rng);
    auto ker = kernel(a);
    CHECK(ker.rows() == a.cols() - rank(a));
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      auto prod = times_transpose(ker.row(r), a);
      CHECK(std::all_of(prod.begin(), prod.end(), [](KElt x) { return x.v == 0; }));
    }
    CHECK(rref(ker).basis == ker);
  }
}

TEST_CASE("inverse") {
  auto k = BaseField::make_prime(5);
  Rng rng(4);
  int invertible = 0;
  for (int it = 0; it < 50; ++it) {
    auto a = random_mat(k, 4, 4, rng);
    if (rank(a) < 4) {
      CHECK_THROWS_AS(inverse(a), Error);
      continue;
    }
    ++invertible;
    CHECK(a * inverse(a) == KMat::identity(k, 4));
  }
  CHECK(invertible > 0);
}

TEST_CASE("companion matrices") {
  auto k = BaseField::make_prime(5);
  auto c1 = companion(KPoly::from_ints(k, {-3, 1}));
  CHECK(c1.rows() == 1);
  CHECK(c1(0, 0) == k->from_int(3));
  auto c2 = companion(KPoly::from_ints(k, {-2, 0, 1}));
  CHECK(to_string(c2) == "0,2;1,0");
  CHECK_THROWS_AS(companion(KPoly::from_ints(k, {1, 2})), Error);

  Rng rng(8);
  for (int deg = 1; deg <= 8; ++deg) {
    auto p = random_monic(k, deg, rng);
    auto c = companion(p);
    CHECK(min_poly(c) == p);
    CHECK(char_poly(c) == p);
    auto v = is_cyclic(c);
    REQUIRE(v);
    KRow e1(deg, k->zero());
    e1[0] = k->one();
    CHECK(*v == e1);
  }
}

TEST_CASE("identity matrix") {
  auto k = BaseField::make_prime(3);
  auto id = KMat::identity(k, 4);
  CHECK(min_poly(id) == KPoly::from_ints(k, {-1, 1}));
  CHECK(char_poly(id) == pow(KPoly::from_ints(k, {-1, 1}), 4));
  CHECK_FALSE(is_cyclic(id));
  CHECK(primary_components(id).size() == 1);
}

TEST_CASE("cyclic vector of a diagonal matrix") {
  auto k = BaseField::make_prime(3);
  auto m = block_diag<BaseField>({companion(KPoly::from_ints(k, {-1, 1})), companion(KPoly::from_ints(k, {1, 1}))});
  KRow v{k->one(), k->one()};
  CHECK(rank(krylov(m, v, 2)) == 2);
  auto found = is_cyclic(m);
  REQUIRE(found);
  CHECK(rank(krylov(m, *found, 2)) == 2);
}

TEST_CASE("minimal and characteristic polynomials of random matrices") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto k = BaseField::make_prime(p);
    Rng rng(p);
    for (int it = 0; it < 30; ++it) {
      const std::size_t n = 1 + static_cast<std::size_t>(it % 8);
      auto m = random_mat(k, n, n, rng);
      if (it % 4 == 0) {
        // low-rank perturbations give repeated invariant factors
        m = block_diag<BaseField>({m, m});
        if (m.rows() > 8) m = random_mat(k, n, n, rng);
      }
      const auto mu = min_poly(m);
      const auto chi = char_poly(m);
      CHECK(chi.degree() == static_cast<int>(m.rows()));
      CHECK(chi.is_monic());
      CHECK(divides(mu, chi));
      CHECK(eval_poly(mu, m).is_zero());
      CHECK(eval_poly(chi, m).is_zero());
      for (const auto& [f, mult] : factor(mu).factors) {
        CHECK_FALSE(eval_poly(mu / f, m).is_zero());
      }
    }
  }
}

TEST_CASE("primary components") {
  auto k = BaseField::make_prime(2);
  Rng rng(12);
  for (int it = 0; it < 20; ++it) {
    auto m = random_mat(k, 6, 6, rng);
    auto comps = primary_components(m);
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.dim();
      CHECK(c.dim() == c.mult_char * static_cast<std::size_t>(c.f.degree()));
      CHECK(eval_poly(pow(c.f, c.mult_min), c.induced).is_zero());
      // basis * M^t = induced^t * basis
      CHECK(c.basis * m.transpose() == c.induced.transpose() * c.basis);
    }
    CHECK(total == 6);
    CHECK(rank(stacked_basis(comps)) == 6);
  }
}

TEST_CASE("block example over F_5: structure") {
  PaperBlockExample ex;
  CHECK(ex.m.rows() == 18);
  CHECK(min_poly(ex.m) == pow(ex.f1, 2) * pow(ex.f2, 3));
  CHECK(char_poly(ex.m) == pow(ex.f1, 4) * pow(ex.f2, 5));
  CHECK(kernel(eval_poly(pow(ex.f1, 2), ex.m)).rows() == 8);
  CHECK(kernel(eval_poly(pow(ex.f2, 5), ex.m)).rows() == 10);
  auto comps = primary_components(ex.m);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) CHECK(c.dim() == (c.f == ex.f1 ? 8u : 10u));

  auto inv = cyclic_decomposition(ex.m, DecompositionMode::InvariantFactors);
  REQUIRE(inv.size() == 3);
  CHECK(inv[0].theta == ex.f1);
  CHECK(inv[1].theta == ex.f1 * pow(ex.f2, 2));
  CHECK(inv[2].theta == pow(ex.f1, 2) * pow(ex.f2, 3));
  CHECK(verify_decomposition(ex.m, inv));

  // Invariant factors (f1, f1 f2^2, f1^2 f2^3) give elementary divisors
  // f1, f1, f1^2 and f2^2, f2^3.
  auto prim = cyclic_decomposition(ex.m, DecompositionMode::PrimaryCyclic);
  std::vector<KPoly> thetas;
  for (const auto& c : prim) thetas.push_back(c.theta);
  std::vector<KPoly> expected{ex.f1, ex.f1, pow(ex.f1, 2), pow(ex.f2, 2), pow(ex.f2, 3)};
  auto by_canonical = [](const KPoly& a, const KPoly& b) { return canonical_less(a, b); };
  std::sort(thetas.begin(), thetas.end(), by_canonical);
  std::sort(expected.begin(), expected.end(), by_canonical);
  CHECK(thetas == expected);
  CHECK(verify_decomposition(ex.m, prim));
}

TEST_CASE("cyclic decompositions of random matrices") {
  for (std::uint32_t p : {2u, 3u}) {
    auto k = BaseField::make_prime(p);
    Rng rng(100 + p);
    for (int it = 0; it < 25; ++it) {
      const std::size_t n = 1 + static_cast<std::size_t>(it % 6);
      KMat m = random_mat(k, n, n, rng);
      if (it % 3 == 0) m = block_diag<BaseField>({m, m});
      if (it % 5 == 0) m = block_diag<BaseField>({m, KMat::identity(k, 2)});
      for (auto mode : {DecompositionMode::InvariantFactors, DecompositionMode::PrimaryCyclic}) {
        auto comps = cyclic_decomposition(m, mode);
        CHECK(verify_decomposition(m, comps));
        std::size_t total = 0;
        for (const auto& c : comps) total += static_cast<std::size_t>(c.theta.degree());
        CHECK(total == m.rows());
        if (mode == DecompositionMode::InvariantFactors) {
          for (std::size_t i = 1; i < comps.size(); ++i) CHECK(divides(comps[i - 1].theta, comps[i].theta));
          CHECK(comps.back().theta == min_poly(m));
          auto prod = KPoly::one(k);
          for (const auto& c : comps) prod *= c.theta;
          CHECK(prod == char_poly(m));
        } else {
          for (const auto& c : comps) CHECK(is_prime_power(c.theta));
        }
      }
    }
  }
}

TEST_CASE("prime-power minimal polynomial") {
  auto k = BaseField::make_prime(2);
  auto f = KPoly::from_ints(k, {1, 1, 1});
  CHECK(is_prime_power(min_poly(companion(pow(f, 2)))));
  CHECK_FALSE(is_prime_power(min_poly(companion(KPoly::from_ints(k, {1, 0, 0, 1})))));
}
