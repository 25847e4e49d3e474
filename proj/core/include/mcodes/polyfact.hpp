#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcodes/gf.hpp"
#include "mcodes/poly.hpp"

namespace mcodes {

template <FiniteField F>
struct Factorization {
  FieldPtr<F> field;
  typename F::Element unit;
  /// Monic irreducible factors with multiplicities, in canonical order.
  std::vector<std::pair<Poly<F>, unsigned>> factors;

  Poly<F> expand() const;
};

/// Pairwise coprime squarefree parts of monic(f), ascending multiplicity.
template <FiniteField F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& f);

/// Complete factorization: squarefree, distinct-degree, then equal-degree
/// splitting driven by a generator seeded with `seed`. Throws ZeroPoly.
template <FiniteField F>
Factorization<F> factor(const Poly<F>& f, std::uint64_t seed = 0);

/// Rabin's test. Throws ConstantPoly.
template <FiniteField F>
bool is_irreducible(const Poly<F>& f);

/// Coefficient-wise p-th root of a polynomial whose derivative vanishes.
template <FiniteField F>
Poly<F> pth_root(const Poly<F>& f);

/// x^(Q^k) mod f, where Q is the field order.
template <FiniteField F>
Poly<F> frobenius_power_of_x(const Poly<F>& f, unsigned k);

/// All monic divisors of f, enumerated by exponent vectors over its factorization
/// (lexicographic, first factor varying slowest).
template <FiniteField F>
std::vector<Poly<F>> monic_divisors(const Factorization<F>& fac);

/// The n-th cyclotomic polynomial over K. Throws NotCoprimeToCharacteristic.
Poly<BaseField> cyclotomic(std::uint64_t n, const FieldPtr<BaseField>& k);

/// Number of irreducible factors over L of fi, irreducible over K:
/// gcd(m, deg fi). Throws NotIrreducible.
unsigned num_factors_over_L(const Poly<BaseField>& fi, const FieldTower& t);

/// x^n - c.
template <FiniteField F>
Poly<F> binomial(const FieldPtr<F>& field, std::size_t n, const typename F::Element& c) {
  std::vector<typename F::Element> v(n + 1, field->zero());
  v[0] = field->neg(c);
  v[n] = field->add(v[n], field->one());
  return Poly<F>(field, std::move(v));
}

extern template struct Factorization<BaseField>;
extern template struct Factorization<ExtField>;

}  // namespace mcodes
