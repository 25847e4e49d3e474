#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcodes/error.hpp"
#include "mcodes/field.hpp"

namespace mcodes {

/// Dense univariate polynomial, coefficients stored low-to-high. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
template <FiniteField F>
class Poly {
 public:
  using Element = typename F::Element;

  explicit Poly(FieldPtr<F> field) : field_(std::move(field)) {}

  Poly(FieldPtr<F> field, std::vector<Element> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(FieldPtr<F> field, Element c) {
    return Poly(std::move(field), std::vector<Element>{std::move(c)});
  }

  static Poly one(FieldPtr<F> field) {
    auto c = field->one();
    return constant(std::move(field), std::move(c));
  }

  static Poly monomial(FieldPtr<F> field, Element c, std::size_t k) {
    std::vector<Element> v(k + 1, field->zero());
    v[k] = std::move(c);
    return Poly(std::move(field), std::move(v));
  }

  static Poly x(FieldPtr<F> field) {
    auto c = field->one();
    return monomial(std::move(field), std::move(c), 1);
  }

  /// Integer coefficients, low-to-high, mapped through the prime subfield.
  static Poly from_ints(FieldPtr<F> field, std::initializer_list<std::int64_t> low_to_high) {
    std::vector<Element> v;
    v.reserve(low_to_high.size());
    for (auto c : low_to_high) v.push_back(field->from_int(c));
    return Poly(std::move(field), std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  const Element& lead() const { return coeffs_.back(); }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

  const F& field() const noexcept { return *field_; }
  const FieldPtr<F>& field_ptr() const noexcept { return field_; }

  Poly& operator+=(const Poly& o) {
    const F& f = *field_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), f.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = f.add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    const F& f = *field_;
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), f.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = f.sub(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(const Poly& a) {
    std::vector<Element> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(a.field_->neg(c));
    return Poly(a.field_, std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const F& f = *a.field_;
    std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return Poly(a.field_, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly scaled(const Element& c) const {
    std::vector<Element> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(field_->mul(x, c));
    return Poly(field_, std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
  }

  Poly derivative() const {
    const F& f = *field_;
    std::vector<Element> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      v.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i % f.characteristic())), coeffs_[i]));
    }
    return Poly(field_, std::move(v));
  }

  Element eval(const Element& x) const {
    const F& f = *field_;
    Element acc = f.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
  }

  /// p(-x).
  Poly negated_variable() const {
    std::vector<Element> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = field_->neg(v[i]);
    return Poly(field_, std::move(v));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  FieldPtr<F> field_;
  std::vector<Element> coeffs_;
};

/// Canonical order: degree first, then coefficient vectors lexicographically (low-to-high).
template <FiniteField F>
bool canonical_less(const Poly<F>& a, const Poly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

/// a = q*b + r with deg r < deg b.
template <FiniteField F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivideByZeroPoly, "division by the zero polynomial");
  const F& f = a.field();
  if (a.degree() < b.degree()) return {Poly<F>(a.field_ptr()), a};
  std::vector<typename F::Element> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<typename F::Element> q(r.size() - db, f.zero());
  const auto lead_inv = f.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    auto c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  r.resize(db);
  return {Poly<F>(a.field_ptr(), std::move(q)), Poly<F>(a.field_ptr(), std::move(r))};
}

template <FiniteField F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

template <FiniteField F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <FiniteField F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  return (a % d).is_zero();
}

/// Monic gcd; gcd(a, 0) = monic(a).
template <FiniteField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FiniteField F>
struct Bezout {
  Poly<F> gcd;  // monic
  Poly<F> s;
  Poly<F> t;    // s*a + t*b = gcd
};

template <FiniteField F>
Bezout<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  const auto& fp = a.field_ptr();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::one(fp), s1(fp);
  Poly<F> t0(fp), t1 = Poly<F>::one(fp);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  auto c = a.field().inv(r0.lead());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

template <FiniteField F>
Poly<F> pow(const Poly<F>& base, unsigned e) {
  Poly<F> acc = Poly<F>::one(base.field_ptr());
  Poly<F> b = base;
  while (e) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return acc;
}

/// base^e mod m by square-and-multiply.
template <FiniteField F>
Poly<F> powmod(const Poly<F>& base, const BigInt& e, const Poly<F>& m) {
  Poly<F> acc = Poly<F>::one(base.field_ptr()) % m;
  if (e == 0) return acc;
  Poly<F> b = base % m;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    acc = (acc * acc) % m;
    if (boost::multiprecision::bit_test(e, i)) acc = (acc * b) % m;
  }
  return acc;
}

/// High-to-low sum of terms such as "x^2+(w+1)*x+3". Compound coefficients are parenthesized.
template <FiniteField F>
std::string to_string(const Poly<F>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  const F& f = p.field();
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const auto& c = p.coeffs()[i];
    if (f.is_zero(c)) continue;
    if (!out.empty()) out += '+';
    std::string cs = f.to_string(c);
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != f.one()) {
      if (cs.find_first_of("+-*^") != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*";
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace mcodes
