#include "mcodes/rankmetric.hpp"

#include <algorithm>
#include <set>

namespace mcodes {

namespace {

// Appends the m coordinate rows of every row of `rows` to a K-matrix.
KMat stacked_expansion(const LMat& rows, const FieldTower& t) {
  const std::size_t m = t.m(), n = rows.cols();
  KMat out(t.base, rows.rows() * m, n);
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) out(r * m + i, j) = rows(r, j).c[i];
  return out;
}

void check_cap(const BigInt& count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    throw Error(ErrorCode::TooLarge, std::string(what) + ": " + count.str() + " candidates exceed cap " +
                                         std::to_string(cap));
  }
}

}  // namespace

LinearCode::LinearCode(FieldTower tower, const LMat& rows) : tower_(std::move(tower)), gen_(rows) {
  auto e = rref(rows);
  gen_ = std::move(e.basis);
  pivots_ = std::move(e.pivots);
}

LinearCode LinearCode::full(const FieldTower& tower, std::size_t n) {
  return LinearCode(tower, LMat::identity(tower.ext, n));
}

LinearCode LinearCode::zero(const FieldTower& tower, std::size_t n) { return LinearCode(tower, LMat(tower.ext, 0, n)); }

LinearCode LinearCode::extend(const FieldTower& tower, const KMat& rows) { return LinearCode(tower, lift(rows, tower)); }

bool LinearCode::contains(const LRow& c) const {
  return coordinates(Echelon<ExtField>{gen_, pivots_}, c).has_value();
}

bool LinearCode::contains(const LinearCode& d) const {
  for (std::size_t i = 0; i < d.k(); ++i)
    if (!contains(d.gen().row(i))) return false;
  return true;
}

KMat expand(const LRow& c, const FieldTower& t) {
  KMat out(t.base, t.m(), c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < t.m(); ++i) out(i, j) = c[j].c[i];
  return out;
}

std::size_t rank_weight(const LRow& c, const FieldTower& t) { return rank(expand(c, t)); }

KMat rank_support(const LRow& c, const FieldTower& t) { return rref(expand(c, t)).basis; }

LinearCode galois_closure(const LinearCode& d) {
  const auto& t = d.tower();
  LMat rows(t.ext, d.k() * t.m(), d.n());
  for (std::size_t r = 0; r < d.k(); ++r)
    for (unsigned i = 0; i < t.m(); ++i)
      for (std::size_t j = 0; j < d.n(); ++j) rows(r * t.m() + i, j) = t.ext->frobenius(d.gen()(r, j), i);
  return LinearCode(t, rows);
}

std::size_t subspace_weight(const LMat& rows, const FieldTower& t) { return rank(stacked_expansion(rows, t)); }

std::size_t subspace_weight(const LinearCode& d) { return subspace_weight(d.gen(), d.tower()); }

BigInt gaussian_binomial(const BigInt& Q, std::size_t k, std::size_t r) {
  if (r > k) return 0;
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(Q, static_cast<unsigned>(k - i)) - 1;
    den *= boost::multiprecision::pow(Q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

std::size_t grw_oracle(const LinearCode& c, std::size_t r, std::uint64_t cap) {
  if (r == 0) return 0;
  const std::size_t k = c.k();
  if (r > k) throw Error(ErrorCode::SizeMismatch, "r exceeds the code dimension");
  const auto& t = c.tower();
  const ExtField& L = *t.ext;
  check_cap(gaussian_binomial(L.order(), k, r), cap, "subspace enumeration");
  const auto Q = static_cast<std::uint64_t>(L.order());

  std::size_t best = c.n() + 1;
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = i;
  for (;;) {
    // free positions of the reduced echelon form with this pivot profile
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = piv[i] + 1; j < k; ++j) {
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(i, j);
      }
    }
    LMat a(t.ext, r, k);
    for (std::size_t i = 0; i < r; ++i) a(i, piv[i]) = L.one();
    std::vector<std::uint64_t> digits(free.size(), 0);
    for (;;) {
      for (std::size_t f = 0; f < free.size(); ++f) a(free[f].first, free[f].second) = L.element(digits[f]);
      best = std::min(best, subspace_weight(a * c.gen(), t));
      if (best == r) return best;
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == Q) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    // next pivot profile in colex order
    std::size_t i = 0;
    while (i < r && piv[i] + 1 == (i + 1 < r ? piv[i + 1] : k)) ++i;
    if (i == r) break;
    ++piv[i];
    for (std::size_t j = 0; j < i; ++j) piv[j] = j;
  }
  return best;
}

std::vector<std::size_t> grw_hierarchy(const LinearCode& c, std::uint64_t cap) {
  std::vector<std::size_t> out;
  for (std::size_t r = 1; r <= c.k(); ++r) out.push_back(grw_oracle(c, r, cap));
  return out;
}

std::size_t max_rank_weight(const LinearCode& c, std::uint64_t cap) {
  const auto& t = c.tower();
  const ExtField& L = *t.ext;
  const BigInt total = boost::multiprecision::pow(L.order(), static_cast<unsigned>(c.k()));
  check_cap(total, cap, "codeword enumeration");
  const auto Q = static_cast<std::uint64_t>(L.order());
  std::vector<std::uint64_t> digits(c.k(), 0);
  LRow coeffs(c.k(), L.zero());
  std::size_t best = 0;
  for (;;) {
    for (std::size_t i = 0; i < c.k(); ++i) coeffs[i] = L.element(digits[i]);
    LRow word(c.n(), L.zero());
    for (std::size_t i = 0; i < c.k(); ++i) {
      if (L.is_zero(coeffs[i])) continue;
      for (std::size_t j = 0; j < c.n(); ++j) word[j] = L.add(word[j], L.mul(coeffs[i], c.gen()(i, j)));
    }
    best = std::max(best, rank_weight(word, t));
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == Q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return best;
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.tower(), kernel(c.gen())); }

KMat intersect_base(const LinearCode& c) {
  const auto h = dual(c).gen();
  return kernel(stacked_expansion(h, c.tower()));
}

std::size_t last_weight(const LinearCode& c) {
  if (c.k() == 0) throw Error(ErrorCode::ZeroCode, "last weight of the zero code");
  return c.n() - intersect_base(dual(c)).rows();
}

LinearCode transform(const LinearCode& c, const KMat& p) {
  if (!p.is_square() || p.rows() != c.n()) throw Error(ErrorCode::SizeMismatch, "transform has the wrong size");
  if (rank(p) != p.rows()) throw Error(ErrorCode::Singular, "transform is not invertible");
  return LinearCode(c.tower(), c.gen() * lift(p, c.tower()));
}

bool wei_duality_holds(std::size_t n, const std::vector<std::size_t>& hier,
                       const std::vector<std::size_t>& dual_hier) {
  std::set<std::size_t> lhs(hier.begin(), hier.end());
  std::set<std::size_t> rhs;
  for (std::size_t v = 1; v <= n; ++v) rhs.insert(v);
  for (auto d : dual_hier) rhs.erase(n + 1 - d);
  return lhs == rhs && lhs.size() == hier.size();
}

}  // namespace mcodes
