#include "mcodes/mat.hpp"

namespace mcodes {

template <FiniteField F>
Echelon<F> rref(const Mat<F>& a) {
  const F& f = a.field();
  Mat<F> m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Mat<F> basis(a.field_ptr(), r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) basis(i, j) = m(i, j);
  return {std::move(basis), std::move(pivots)};
}

template <FiniteField F>
Mat<F> kernel(const Mat<F>& a) {
  const F& f = a.field();
  auto e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Mat<F> k(a.field_ptr(), n - e.rank(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(row, free) = f.one();
    for (std::size_t i = 0; i < e.rank(); ++i) k(row, e.pivots[i]) = f.neg(e.basis(i, free));
    ++row;
  }
  return rref(k).basis;
}

template <FiniteField F>
Mat<F> inverse(const Mat<F>& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Mat<F> aug(a.field_ptr(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  auto e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
  Mat<F> inv(a.field_ptr(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.basis(i, n + j);
  return inv;
}

template <FiniteField F>
Mat<F> stack(const Mat<F>& top, const Mat<F>& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::SizeMismatch, "stacking matrices of different widths");
  Mat<F> r(top.field_ptr(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) r(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) r(top.rows() + i, j) = bottom(i, j);
  return r;
}

template <FiniteField F>
Mat<F> block_diag(const std::vector<Mat<F>>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::SizeMismatch, "block_diag of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat<F> r(blocks.front().field_ptr(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

template <FiniteField F>
typename Mat<F>::Row times_transpose(const typename Mat<F>::Row& v, const Mat<F>& a) {
  if (v.size() != a.cols()) throw Error(ErrorCode::SizeMismatch, "vector length differs from column count");
  const F& f = a.field();
  typename Mat<F>::Row out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto acc = f.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!f.is_zero(v[j])) acc = f.add(acc, f.mul(v[j], a(i, j)));
    }
    out[i] = acc;
  }
  return out;
}

template <FiniteField F>
std::optional<typename Mat<F>::Row> coordinates(const Echelon<F>& e, const typename Mat<F>::Row& v) {
  const F& f = e.basis.field();
  typename Mat<F>::Row coef(e.rank(), f.zero());
  typename Mat<F>::Row residual = v;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const auto c = residual[e.pivots[i]];
    coef[i] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] = f.sub(residual[j], f.mul(c, e.basis(i, j)));
  }
  for (const auto& x : residual)
    if (!f.is_zero(x)) return std::nullopt;
  return coef;
}

template <FiniteField F>
Mat<F> eval_poly(const Poly<F>& p, const Mat<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Mat<F> acc(m.field_ptr(), n, n);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = m.field().add(acc(d, d), c[i]);
  }
  return acc;
}

Mat<ExtField> lift(const Mat<BaseField>& a, const FieldTower& t) {
  Mat<ExtField> r(t.ext, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = t.ext->embed(a(i, j));
  return r;
}

std::optional<Mat<BaseField>> restrict(const Mat<ExtField>& a, const FieldTower& t) {
  Mat<BaseField> r(t.base, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!t.ext->in_base_field(a(i, j))) return std::nullopt;
      r(i, j) = a(i, j).c[0];
    }
  }
  return r;
}

#define MCODES_INSTANTIATE(F)                                                                     \
  template Echelon<F> rref(const Mat<F>&);                                                        \
  template Mat<F> kernel(const Mat<F>&);                                                          \
  template Mat<F> inverse(const Mat<F>&);                                                         \
  template Mat<F> stack(const Mat<F>&, const Mat<F>&);                                            \
  template Mat<F> block_diag(const std::vector<Mat<F>>&);                                         \
  template typename Mat<F>::Row times_transpose(const typename Mat<F>::Row&, const Mat<F>&);      \
  template std::optional<typename Mat<F>::Row> coordinates(const Echelon<F>&,                     \
                                                           const typename Mat<F>::Row&);          \
  template Mat<F> eval_poly(const Poly<F>&, const Mat<F>&);

MCODES_INSTANTIATE(BaseField)
MCODES_INSTANTIATE(ExtField)

#undef MCODES_INSTANTIATE

}  // namespace mcodes
