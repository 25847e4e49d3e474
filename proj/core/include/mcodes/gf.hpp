#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mcodes/field.hpp"
#include "mcodes/poly.hpp"

namespace mcodes {

/// Element of K = F_q. The value encodes the coefficient vector over F_p
/// in base p (digit i is the coefficient of z^i).
struct KElt {
  std::uint32_t v = 0;
  friend auto operator<=>(const KElt&, const KElt&) = default;
};

/// Element of L = K[w]/(lmod): coefficients over K in the power basis
/// (1, w, ..., w^{m-1}); always exactly m entries.
struct LElt {
  boost::container::small_vector<KElt, 20> c;

  friend bool operator==(const LElt& a, const LElt& b) { return a.c == b.c; }
  friend bool operator<(const LElt& a, const LElt& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
  }
};

/// The base field K = F_q, q = p^e. For e > 1 it is F_p[z]/(kmod) and
/// multiplication goes through discrete log tables, so q is capped at 2^20.
class BaseField {
 public:
  using Element = KElt;

  static FieldPtr<BaseField> make_prime(std::uint32_t p);
  /// kmod: monic coefficients over F_p, low-to-high, degree e >= 2. The caller
  /// is responsible for irreducibility (make_tower checks it).
  static FieldPtr<BaseField> make_extension(std::uint32_t p, std::vector<std::uint32_t> kmod);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint64_t size() const noexcept { return q_; }
  const BigInt& order() const noexcept { return order_; }
  /// Defining polynomial over F_p (low-to-high); {0, 1} for a prime field.
  const std::vector<std::uint32_t>& modulus() const noexcept { return kmod_; }

  KElt zero() const noexcept { return {0}; }
  KElt one() const noexcept { return {1}; }
  KElt add(KElt a, KElt b) const noexcept;
  KElt sub(KElt a, KElt b) const noexcept;
  KElt neg(KElt a) const noexcept;
  KElt mul(KElt a, KElt b) const noexcept;
  KElt inv(KElt a) const;
  KElt pow(KElt a, std::uint64_t e) const noexcept;
  bool is_zero(KElt a) const noexcept { return a.v == 0; }
  KElt from_int(std::int64_t n) const noexcept;
  KElt pth_root(KElt a) const noexcept;
  KElt random(Rng& rng) const;
  KElt element(std::uint64_t index) const;
  std::uint64_t index(KElt a) const noexcept { return a.v; }
  /// Coefficient digits over F_p (length e).
  std::vector<std::uint32_t> digits(KElt a) const;
  KElt from_digits(std::span<const std::uint32_t> digits) const;
  /// The class of z in F_p[z]/(kmod); only meaningful when e > 1.
  KElt generator() const noexcept { return e_ > 1 ? KElt{p_} : KElt{0}; }
  /// Integers for prime-field elements, polynomials in z otherwise.
  std::string to_string(KElt a) const;
  bool in_prime_field(KElt a) const noexcept { return a.v < p_; }

  BaseField(std::uint32_t p, unsigned e, std::vector<std::uint32_t> kmod);

 private:
  KElt slow_mul(KElt a, KElt b) const;

  std::uint32_t p_;
  unsigned e_;
  std::uint64_t q_;
  BigInt order_;
  std::vector<std::uint32_t> kmod_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

/// L = K[w]/(lmod), lmod monic irreducible of degree m over K.
class ExtField {
 public:
  using Element = LElt;

  ExtField(FieldPtr<BaseField> base, std::vector<KElt> lmod);

  const BaseField& base() const noexcept { return *base_; }
  const FieldPtr<BaseField>& base_ptr() const noexcept { return base_; }
  unsigned degree() const noexcept { return m_; }
  const std::vector<KElt>& modulus() const noexcept { return lmod_; }
  std::uint32_t characteristic() const noexcept { return base_->characteristic(); }
  const BigInt& order() const noexcept { return order_; }

  LElt zero() const;
  LElt one() const;
  LElt add(const LElt& a, const LElt& b) const;
  LElt sub(const LElt& a, const LElt& b) const;
  LElt neg(const LElt& a) const;
  LElt mul(const LElt& a, const LElt& b) const;
  LElt inv(const LElt& a) const;
  LElt pow(const LElt& a, const BigInt& e) const;
  bool is_zero(const LElt& a) const noexcept;
  LElt from_int(std::int64_t n) const;
  LElt pth_root(const LElt& a) const;
  LElt random(Rng& rng) const;
  /// Enumeration order: index = sum_i c_i q^i with c_i the K-index of coordinate i.
  LElt element(std::uint64_t index) const;
  std::uint64_t index(const LElt& a) const;
  std::string to_string(const LElt& a) const;

  LElt embed(KElt a) const;
  bool in_base_field(const LElt& a) const;
  LElt from_coords(std::span<const KElt> coords) const;
  /// The class w of the indeterminate.
  LElt generator() const;
  /// a^(q^i); i is reduced mod m.
  LElt frobenius(const LElt& a, unsigned i) const;

 private:
  FieldPtr<BaseField> base_;
  std::vector<KElt> lmod_;
  unsigned m_;
  BigInt order_;
  std::vector<LElt> frob_;  // frob_[j] = w^(jq)
};

/// The pair K = F_q ⊂ L = F_{q^m}, together with the prime field F_p.
struct FieldTower {
  FieldPtr<BaseField> prime;
  FieldPtr<BaseField> base;
  FieldPtr<ExtField> ext;

  std::uint32_t p() const noexcept { return base->characteristic(); }
  unsigned e() const noexcept { return base->degree(); }
  std::uint64_t q() const noexcept { return base->size(); }
  unsigned m() const noexcept { return ext->degree(); }

  Poly<ExtField> lift(const Poly<BaseField>& f) const;
  /// Coefficient-wise restriction; nullopt if some coefficient is not in K.
  std::optional<Poly<BaseField>> restrict(const Poly<ExtField>& f) const;
  /// lmod as a polynomial over K.
  Poly<BaseField> modulus_poly() const;
};

/// Builds K = F_{p^e} and L = K[w]/(lmod). Without lmod, an irreducible of
/// degree m is drawn by seeded rejection sampling (m = 1 uses lmod = y).
/// Throws NotPrime, DegreeMismatch or ReducibleModulus.
FieldTower make_tower(std::uint32_t p, unsigned e, unsigned m,
                      std::optional<std::vector<KElt>> lmod = std::nullopt, std::uint64_t seed = 0,
                      std::optional<std::vector<std::uint32_t>> kmod = std::nullopt);

/// x^(q^i) in L.
LElt frobenius(const LElt& x, const FieldTower& t, unsigned i);

/// A root of h in L, choosing the lexicographically smallest coefficient
/// vector; nullopt when h has no root in L. Throws ConstantPoly.
std::optional<LElt> find_root(const Poly<BaseField>& h, const FieldTower& t);

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t euler_phi(std::uint64_t n);
/// Least t >= 1 with q^t = 1 mod d; mult_order(q, 1) = 1. Throws NotCoprime.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t d);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod) noexcept;
/// Prime factors (distinct, ascending).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace mcodes
