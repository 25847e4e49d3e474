#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcodes/gf.hpp"
#include "mcodes/mat.hpp"
#include "mcodes/matmod.hpp"

namespace mcodes {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// An L-linear subspace of L^n, stored by its reduced echelon generator matrix.
class LinearCode {
 public:
  /// Row span of `rows` (any generating set).
  LinearCode(FieldTower tower, const LMat& rows);

  static LinearCode full(const FieldTower& tower, std::size_t n);
  static LinearCode zero(const FieldTower& tower, std::size_t n);
  /// K-code extended to L.
  static LinearCode extend(const FieldTower& tower, const KMat& rows);

  const FieldTower& tower() const noexcept { return tower_; }
  std::size_t n() const noexcept { return gen_.cols(); }
  std::size_t k() const noexcept { return gen_.rows(); }
  const LMat& gen() const noexcept { return gen_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// The length convention m >= n does not hold.
  bool short_extension() const noexcept { return tower_.m() < n(); }

  bool contains(const LRow& c) const;
  bool contains(const LinearCode& d) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  FieldTower tower_;
  LMat gen_;
  std::vector<std::size_t> pivots_;
};

/// m x n matrix over K; column j holds the coordinates of c_j.
KMat expand(const LRow& c, const FieldTower& t);
std::size_t rank_weight(const LRow& c, const FieldTower& t);
/// Reduced echelon basis of the row space of expand(c).
KMat rank_support(const LRow& c, const FieldTower& t);

/// Sum of the Frobenius images of D.
LinearCode galois_closure(const LinearCode& d);
/// Dimension of the joint rank support of D.
std::size_t subspace_weight(const LinearCode& d);
/// Same, for the span of the given rows.
std::size_t subspace_weight(const LMat& rows, const FieldTower& t);

/// Number of r-dimensional subspaces of an F_Q-space of dimension k.
BigInt gaussian_binomial(const BigInt& Q, std::size_t k, std::size_t r);

/// Exact r-th generalized rank weight by exhaustive subspace enumeration.
/// M_0 = 0. Throws TooLarge when more than `cap` subspaces would be visited.
std::size_t grw_oracle(const LinearCode& c, std::size_t r, std::uint64_t cap = kDefaultOracleCap);
std::vector<std::size_t> grw_hierarchy(const LinearCode& c, std::uint64_t cap = kDefaultOracleCap);

/// max over codewords of the rank weight (equals M_k when m >= n). Throws TooLarge.
std::size_t max_rank_weight(const LinearCode& c, std::uint64_t cap = kDefaultOracleCap);

LinearCode dual(const LinearCode& c);
/// K-basis of C ∩ K^n via the expanded parity-check matrix.
KMat intersect_base(const LinearCode& c);
/// n - dim_K(dual(C) ∩ K^n). Throws ZeroCode.
std::size_t last_weight(const LinearCode& c);
/// C * P for P invertible over K. Throws Singular.
LinearCode transform(const LinearCode& c, const KMat& p);

/// The set identity between the hierarchies of C and its dual:
/// {M_r(C)} = {1..n} \ {n + 1 - M_r(dual)}.
bool wei_duality_holds(std::size_t n, const std::vector<std::size_t>& hier,
                       const std::vector<std::size_t>& dual_hier);

}  // namespace mcodes
