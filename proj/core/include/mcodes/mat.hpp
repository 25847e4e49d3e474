#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcodes/error.hpp"
#include "mcodes/gf.hpp"
#include "mcodes/poly.hpp"

namespace mcodes {

/// Dense row-major matrix. Codewords are rows; a matrix acts on a row vector
/// v as v * A^t (see times_transpose).
template <FiniteField F>
class Mat {
 public:
  using Element = typename F::Element;
  using Row = std::vector<Element>;

  Mat(FieldPtr<F> field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_->zero()) {}

  static Mat identity(FieldPtr<F> field, std::size_t n) {
    Mat m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_->one();
    return m;
  }

  static Mat from_rows(FieldPtr<F> field, const std::vector<Row>& rows, std::size_t cols) {
    Mat m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const F& field() const noexcept { return *field_; }
  const FieldPtr<F>& field_ptr() const noexcept { return field_; }

  Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Row row(std::size_t i) const {
    return Row(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void set_row(std::size_t i, const Row& r) {
    if (r.size() != cols_) throw Error(ErrorCode::SizeMismatch, "row length differs from column count");
    std::copy(r.begin(), r.end(), a_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }

  std::vector<Row> row_list() const {
    std::vector<Row> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!field_->is_zero(x)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat scaled(const Element& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x = field_->mul(x, c);
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.check_same_shape(b);
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.field_->add(a.a_[i], b.a_[i]);
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.check_same_shape(b);
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.field_->sub(a.a_[i], b.a_[i]);
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
    const F& f = *a.field_;
    Mat r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
      }
    }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same_shape(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "matrix shape mismatch");
  }

  FieldPtr<F> field_;
  std::size_t rows_, cols_;
  std::vector<Element> a_;
};

/// Reduced row echelon form: only the nonzero rows are kept.
template <FiniteField F>
struct Echelon {
  Mat<F> basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

template <FiniteField F>
Echelon<F> rref(const Mat<F>& a);

template <FiniteField F>
std::size_t rank(const Mat<F>& a) {
  return rref(a).rank();
}

/// Basis (canonical reduced echelon rows) of { c : c * A^t = 0 }.
template <FiniteField F>
Mat<F> kernel(const Mat<F>& a);

/// Throws Singular or NotSquare.
template <FiniteField F>
Mat<F> inverse(const Mat<F>& a);

template <FiniteField F>
Mat<F> stack(const Mat<F>& top, const Mat<F>& bottom);

template <FiniteField F>
Mat<F> block_diag(const std::vector<Mat<F>>& blocks);

/// v * A^t.
template <FiniteField F>
typename Mat<F>::Row times_transpose(const typename Mat<F>::Row& v, const Mat<F>& a);

/// Coefficients of v in the basis of an echelon form, or nullopt if v is
/// outside the row space.
template <FiniteField F>
std::optional<typename Mat<F>::Row> coordinates(const Echelon<F>& e, const typename Mat<F>::Row& v);

template <FiniteField F>
bool same_row_space(const Mat<F>& a, const Mat<F>& b) {
  return rref(a).basis == rref(b).basis;
}

/// P(M) by Horner's rule.
template <FiniteField F>
Mat<F> eval_poly(const Poly<F>& p, const Mat<F>& m);

/// Entry-wise embedding K -> L.
Mat<ExtField> lift(const Mat<BaseField>& a, const FieldTower& t);

/// Entry-wise restriction L -> K; nullopt if some entry is outside K.
std::optional<Mat<BaseField>> restrict(const Mat<ExtField>& a, const FieldTower& t);

/// Rows separated by ';', entries by ','.
template <FiniteField F>
std::string to_string(const Mat<F>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ',';
      s += a.field().to_string(a(i, j));
    }
  }
  return s;
}

}  // namespace mcodes
