#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcodes/gf.hpp"
#include "mcodes/mat.hpp"
#include "mcodes/poly.hpp"

namespace mcodes {

using KMat = Mat<BaseField>;
using LMat = Mat<ExtField>;
using KRow = KMat::Row;
using LRow = LMat::Row;
using KPoly = Poly<BaseField>;
using LPoly = Poly<ExtField>;

/// ker(f^m(M)) for an irreducible factor f of the minimal polynomial.
struct PrimaryComponent {
  KPoly f;
  unsigned mult_min;   // multiplicity of f in the minimal polynomial
  unsigned mult_char;  // multiplicity of f in the characteristic polynomial
  KMat basis;          // d x n, reduced echelon
  KMat induced;        // d x d: (c * basis) * M^t = (c * induced^t) * basis

  std::size_t dim() const noexcept { return basis.rows(); }
};

/// An M-stable cyclic subspace with basis v, vM^t, ..., v(M^t)^{d-1}.
struct CyclicComponent {
  KPoly theta;
  KRow cyclic_vector;
  KMat basis;

  std::size_t dim() const noexcept { return basis.rows(); }
};

enum class DecompositionMode { InvariantFactors, PrimaryCyclic };

/// Sub-diagonal ones, last column -a_0, ..., -a_{d-1}. Throws NotMonic, ConstantPoly.
template <FiniteField F>
Mat<F> companion(const Poly<F>& p);

/// Rows v, vM^t, ..., v(M^t)^{count-1}.
template <FiniteField F>
Mat<F> krylov(const Mat<F>& m, const typename Mat<F>::Row& v, std::size_t count);

/// Least-degree monic P with v * P(M)^t = 0.
template <FiniteField F>
Poly<F> vector_min_poly(const Mat<F>& m, const typename Mat<F>::Row& v);

/// Throws NotSquare.
template <FiniteField F>
Poly<F> min_poly(const Mat<F>& m);

/// Via Hessenberg reduction. Throws NotSquare.
template <FiniteField F>
Poly<F> char_poly(const Mat<F>& m);

/// A cyclic vector for M, or nullopt when deg(min_poly) < n. Standard basis
/// vectors are tried first, then seeded random combinations.
std::optional<KRow> is_cyclic(const KMat& m, std::uint64_t seed = 0);

std::vector<PrimaryComponent> primary_components(const KMat& m, std::uint64_t seed = 0);

/// In InvariantFactors mode the thetas divide each other in output order and
/// the last equals the minimal polynomial. In PrimaryCyclic mode each theta is
/// a prime power; components are grouped by prime (canonical factor order),
/// exponents ascending.
std::vector<CyclicComponent> cyclic_decomposition(const KMat& m, DecompositionMode mode,
                                                  std::uint64_t seed = 0);

/// Rows of all component bases, in order.
KMat stacked_basis(const std::vector<CyclicComponent>& comps);
KMat stacked_basis(const std::vector<PrimaryComponent>& comps);

/// Checks that the stacked basis is invertible and that it conjugates M^t into
/// the block-diagonal of transposed companion matrices.
bool verify_decomposition(const KMat& m, const std::vector<CyclicComponent>& comps);

/// P^{l} for an irreducible P, if the polynomial is a prime power.
bool is_prime_power(const KPoly& p, std::uint64_t seed = 0);

template <FiniteField F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b) {
  return (a * b / gcd(a, b)).monic();
}

}  // namespace mcodes
