#include "mcodes/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcodes/polyfact.hpp"

namespace mcodes {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kMaxBaseFieldSize = std::uint64_t{1} << 20;

std::uint32_t mod_p(std::int64_t n, std::uint32_t p) {
  auto r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// number theory

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  u128 acc = 1, b = base % mod;
  while (e) {
    if (e & 1) acc = acc * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    auto x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::Unsupported, "euler_phi(0) is undefined");
  std::uint64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t d) {
  if (d == 0 || std::gcd(q, d) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "multiplicative order of " + std::to_string(q) + " mod " + std::to_string(d));
  }
  if (d == 1) return 1;
  std::uint64_t t = euler_phi(d);
  for (auto r : prime_factors(t)) {
    while (t % r == 0 && powmod_u64(q, t / r, d) == 1) t /= r;
  }
  return t;
}

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::uint32_t p, unsigned e, std::vector<std::uint32_t> kmod)
    : p_(p), e_(e), q_(1), kmod_(std::move(kmod)) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  order_ = q_;
  if (e_ == 1) return;

  // discrete log tables from a primitive element
  const std::uint64_t n = q_ - 1;
  const auto primes = prime_factors(n);
  auto slow_pow = [&](KElt a, std::uint64_t k) {
    KElt acc{1};
    while (k) {
      if (k & 1) acc = slow_mul(acc, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return acc;
  };
  std::uint32_t gen = 0;
  for (std::uint64_t c = 2; c < q_ && gen == 0; ++c) {
    KElt cand{static_cast<std::uint32_t>(c)};
    if (slow_pow(cand, n) != KElt{1}) break;  // kmod reducible
    bool primitive = std::all_of(primes.begin(), primes.end(),
                                 [&](std::uint64_t r) { return slow_pow(cand, n / r) != KElt{1}; });
    if (primitive) gen = cand.v;
  }
  if (gen == 0) throw Error(ErrorCode::ReducibleModulus, "base-field modulus is not irreducible");
  exp_.resize(n);
  log_.assign(q_, 0);
  KElt x{1};
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x.v;
    log_[x.v] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, KElt{gen});
  }
}

FieldPtr<BaseField> BaseField::make_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return std::make_shared<const BaseField>(p, 1, std::vector<std::uint32_t>{0, 1});
}

FieldPtr<BaseField> BaseField::make_extension(std::uint32_t p, std::vector<std::uint32_t> kmod) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (kmod.size() < 3 || kmod.back() != 1) {
    throw Error(ErrorCode::DegreeMismatch, "base-field modulus must be monic of degree >= 2");
  }
  const auto e = static_cast<unsigned>(kmod.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxBaseFieldSize) {
      throw Error(ErrorCode::Unsupported, "base field larger than 2^20 elements");
    }
  }
  return std::make_shared<const BaseField>(p, e, std::move(kmod));
}

std::vector<std::uint32_t> BaseField::digits(KElt a) const {
  std::vector<std::uint32_t> d(e_);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = a.v % p_;
    a.v /= p_;
  }
  return d;
}

KElt BaseField::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return {v};
}

KElt BaseField::slow_mul(KElt a, KElt b) const {
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  for (std::size_t i = prod.size(); i-- > e_;) {
    auto c = prod[i];
    if (!c) continue;
    for (unsigned j = 0; j < e_; ++j) prod[i - e_ + j] = (prod[i - e_ + j] + (p_ - c) * kmod_[j]) % p_;
  }
  std::uint32_t v = 0;
  for (unsigned i = e_; i-- > 0;) v = v * p_ + static_cast<std::uint32_t>(prod[i]);
  return {v};
}

KElt BaseField::add(KElt a, KElt b) const noexcept {
  if (e_ == 1) {
    auto s = a.v + b.v;
    return {s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return {a.v ^ b.v};
  std::uint32_t v = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    auto s = a.v % p_ + b.v % p_;
    if (s >= p_) s -= p_;
    v += s * scale;
    scale *= p_;
    a.v /= p_;
    b.v /= p_;
  }
  return {v};
}

KElt BaseField::neg(KElt a) const noexcept {
  if (e_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
  if (p_ == 2) return a;
  std::uint32_t v = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    auto d = a.v % p_;
    v += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a.v /= p_;
  }
  return {v};
}

KElt BaseField::sub(KElt a, KElt b) const noexcept { return add(a, neg(b)); }

KElt BaseField::mul(KElt a, KElt b) const noexcept {
  if (a.v == 0 || b.v == 0) return {0};
  if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
  auto s = std::uint64_t{log_[a.v]} + log_[b.v];
  if (s >= q_ - 1) s -= q_ - 1;
  return {exp_[s]};
}

KElt BaseField::pow(KElt a, std::uint64_t e) const noexcept {
  if (e == 0) return {1};
  if (a.v == 0) return {0};
  if (e_ == 1) return {static_cast<std::uint32_t>(powmod_u64(a.v, e, p_))};
  auto s = static_cast<u128>(log_[a.v]) * (e % (q_ - 1)) % (q_ - 1);
  return {exp_[static_cast<std::size_t>(s)]};
}

KElt BaseField::inv(KElt a) const {
  if (a.v == 0) throw Error(ErrorCode::DivideByZero, "inverse of zero in the base field");
  if (e_ == 1) return pow(a, p_ - 2);
  return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

KElt BaseField::from_int(std::int64_t n) const noexcept { return {mod_p(n, p_)}; }

KElt BaseField::pth_root(KElt a) const noexcept {
  if (e_ == 1) return a;
  return pow(a, q_ / p_);
}

KElt BaseField::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, q_ - 1);
  return {static_cast<std::uint32_t>(dist(rng))};
}

KElt BaseField::element(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::SizeMismatch, "element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

std::string BaseField::to_string(KElt a) const {
  if (e_ == 1 || a.v < p_) return std::to_string(a.v);
  auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = e_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(FieldPtr<BaseField> base, std::vector<KElt> lmod)
    : base_(std::move(base)), lmod_(std::move(lmod)), m_(static_cast<unsigned>(lmod_.size() - 1)) {
  order_ = boost::multiprecision::pow(BigInt(base_->size()), m_);
  frob_.reserve(m_);
  const LElt wq = pow(generator(), BigInt(base_->size()));
  LElt x = one();
  for (unsigned j = 0; j < m_; ++j) {
    frob_.push_back(x);
    x = mul(x, wq);
  }
}

LElt ExtField::zero() const {
  LElt r;
  r.c.assign(m_, KElt{0});
  return r;
}

LElt ExtField::one() const { return embed(KElt{1}); }

LElt ExtField::embed(KElt a) const {
  LElt r = zero();
  r.c[0] = a;
  return r;
}

bool ExtField::in_base_field(const LElt& a) const {
  return std::all_of(a.c.begin() + 1, a.c.end(), [](KElt x) { return x.v == 0; });
}

LElt ExtField::from_coords(std::span<const KElt> coords) const {
  if (coords.size() != m_) throw Error(ErrorCode::SizeMismatch, "coordinate vector has wrong length");
  LElt r;
  r.c.assign(coords.begin(), coords.end());
  return r;
}

LElt ExtField::generator() const {
  if (m_ == 1) return embed(base_->neg(lmod_[0]));
  LElt r = zero();
  r.c[1] = KElt{1};
  return r;
}

LElt ExtField::add(const LElt& a, const LElt& b) const {
  LElt r = a;
  for (unsigned i = 0; i < m_; ++i) r.c[i] = base_->add(a.c[i], b.c[i]);
  return r;
}

LElt ExtField::sub(const LElt& a, const LElt& b) const {
  LElt r = a;
  for (unsigned i = 0; i < m_; ++i) r.c[i] = base_->sub(a.c[i], b.c[i]);
  return r;
}

LElt ExtField::neg(const LElt& a) const {
  LElt r = a;
  for (auto& x : r.c) x = base_->neg(x);
  return r;
}

LElt ExtField::mul(const LElt& a, const LElt& b) const {
  const BaseField& k = *base_;
  boost::container::small_vector<KElt, 40> prod(2 * m_ - 1, KElt{0});
  for (unsigned i = 0; i < m_; ++i) {
    if (k.is_zero(a.c[i])) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = k.add(prod[i + j], k.mul(a.c[i], b.c[j]));
  }
  for (std::size_t i = prod.size(); i-- > m_;) {
    const KElt c = prod[i];
    if (k.is_zero(c)) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i - m_ + j] = k.sub(prod[i - m_ + j], k.mul(c, lmod_[j]));
  }
  LElt r;
  r.c.assign(prod.begin(), prod.begin() + m_);
  return r;
}

LElt ExtField::inv(const LElt& a) const {
  if (is_zero(a)) throw Error(ErrorCode::DivideByZero, "inverse of zero in the extension field");
  Poly<BaseField> pa(base_, std::vector<KElt>(a.c.begin(), a.c.end()));
  Poly<BaseField> pm(base_, lmod_);
  auto bz = xgcd(pa, pm);
  LElt r = zero();
  for (std::size_t i = 0; i < bz.s.coeffs().size() && i < m_; ++i) r.c[i] = bz.s.coeffs()[i];
  return r;
}

LElt ExtField::pow(const LElt& a, const BigInt& e) const {
  LElt acc = one();
  if (e == 0) return acc;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    acc = mul(acc, acc);
    if (boost::multiprecision::bit_test(e, i)) acc = mul(acc, a);
  }
  return acc;
}

bool ExtField::is_zero(const LElt& a) const noexcept {
  return std::all_of(a.c.begin(), a.c.end(), [](KElt x) { return x.v == 0; });
}

LElt ExtField::from_int(std::int64_t n) const { return embed(base_->from_int(n)); }

LElt ExtField::pth_root(const LElt& a) const { return pow(a, order_ / characteristic()); }

LElt ExtField::random(Rng& rng) const {
  LElt r;
  r.c.reserve(m_);
  for (unsigned i = 0; i < m_; ++i) r.c.push_back(base_->random(rng));
  return r;
}

LElt ExtField::element(std::uint64_t index) const {
  if (order_ <= index) throw Error(ErrorCode::SizeMismatch, "element index out of range");
  LElt r = zero();
  const auto q = base_->size();
  for (unsigned i = 0; i < m_; ++i) {
    r.c[i] = KElt{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return r;
}

std::uint64_t ExtField::index(const LElt& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = m_; i-- > 0;) idx = idx * base_->size() + a.c[i].v;
  return idx;
}

LElt ExtField::frobenius(const LElt& a, unsigned i) const {
  LElt x = a;
  for (unsigned t = 0; t < i % m_; ++t) {
    LElt y = zero();
    for (unsigned j = 0; j < m_; ++j) {
      if (base_->is_zero(x.c[j])) continue;
      for (unsigned l = 0; l < m_; ++l) y.c[l] = base_->add(y.c[l], base_->mul(x.c[j], frob_[j].c[l]));
    }
    x = std::move(y);
  }
  return x;
}

std::string ExtField::to_string(const LElt& a) const {
  const BaseField& k = *base_;
  std::ostringstream os;
  bool first = true;
  for (unsigned i = m_; i-- > 0;) {
    const KElt c = a.c[i];
    if (k.is_zero(c)) continue;
    if (!first) os << '+';
    first = false;
    auto cs = k.to_string(c);
    const bool compound = !k.in_prime_field(c) && cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (c != KElt{1}) os << (compound ? "(" + cs + ")" : cs) << '*';
    os << 'w';
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// FieldTower

Poly<ExtField> FieldTower::lift(const Poly<BaseField>& f) const {
  std::vector<LElt> c;
  c.reserve(f.coeffs().size());
  for (auto a : f.coeffs()) c.push_back(ext->embed(a));
  return Poly<ExtField>(ext, std::move(c));
}

std::optional<Poly<BaseField>> FieldTower::restrict(const Poly<ExtField>& f) const {
  std::vector<KElt> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    if (!ext->in_base_field(a)) return std::nullopt;
    c.push_back(a.c[0]);
  }
  return Poly<BaseField>(base, std::move(c));
}

Poly<BaseField> FieldTower::modulus_poly() const { return Poly<BaseField>(base, ext->modulus()); }

namespace {

std::string describe_factor(const Poly<BaseField>& f) {
  std::ostringstream os;
  const auto& c = f.coeffs();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (f.field().is_zero(c[i])) continue;
    if (!first) os << '+';
    first = false;
    os << '(' << f.field().to_string(c[i]) << ")*y^" << i;
  }
  return os.str();
}

}  // namespace

FieldTower make_tower(std::uint32_t p, unsigned e, unsigned m, std::optional<std::vector<KElt>> lmod,
                      std::uint64_t seed, std::optional<std::vector<std::uint32_t>> kmod) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0 || m == 0) throw Error(ErrorCode::DegreeMismatch, "extension degrees must be positive");

  FieldTower t;
  t.prime = BaseField::make_prime(p);
  if (e == 1) {
    if (kmod && !(kmod->size() == 2 && (*kmod)[1] == 1)) {
      throw Error(ErrorCode::DegreeMismatch, "base-field modulus degree differs from e");
    }
    t.base = t.prime;
  } else {
    std::vector<std::uint32_t> km;
    if (kmod) {
      if (kmod->size() != e + 1) {
        throw Error(ErrorCode::DegreeMismatch, "base-field modulus degree differs from e");
      }
      if (kmod->back() != 1) throw Error(ErrorCode::NotMonic, "base-field modulus must be monic");
      km = *kmod;
      std::vector<KElt> c;
      for (auto d : km) c.push_back(KElt{d % p});
      Poly<BaseField> pk(t.prime, c);
      if (!is_irreducible(pk)) {
        auto fac = factor(pk, seed);
        throw Error(ErrorCode::ReducibleModulus,
                    "base-field modulus has factor " + describe_factor(fac.factors.front().first));
      }
    } else {
      // first irreducible in enumeration order of the low coefficients
      std::uint64_t count = 1;
      for (unsigned i = 0; i < e; ++i) count *= p;
      if (count > kMaxBaseFieldSize) {
        throw Error(ErrorCode::Unsupported, "base field larger than 2^20 elements");
      }
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<KElt> c(e + 1);
        auto r = idx;
        for (unsigned i = 0; i < e; ++i) {
          c[i] = KElt{static_cast<std::uint32_t>(r % p)};
          r /= p;
        }
        c[e] = KElt{1};
        if (is_irreducible(Poly<BaseField>(t.prime, c))) {
          for (auto x : c) km.push_back(x.v);
          break;
        }
      }
    }
    t.base = BaseField::make_extension(p, std::move(km));
  }

  std::vector<KElt> lm;
  if (lmod) {
    if (lmod->size() != m + 1) {
      throw Error(ErrorCode::DegreeMismatch,
                  "modulus of degree " + std::to_string(static_cast<int>(lmod->size()) - 1) +
                      " given for m = " + std::to_string(m));
    }
    if (lmod->back() != KElt{1}) throw Error(ErrorCode::NotMonic, "extension modulus must be monic");
    lm = *lmod;
    Poly<BaseField> pl(t.base, lm);
    if (!is_irreducible(pl)) {
      auto fac = factor(pl, seed);
      throw Error(ErrorCode::ReducibleModulus,
                  "extension modulus has factor " + describe_factor(fac.factors.front().first));
    }
  } else if (m == 1) {
    lm = {KElt{0}, KElt{1}};
  } else {
    Rng rng(seed);
    for (;;) {
      std::vector<KElt> c(m + 1);
      for (unsigned i = 0; i < m; ++i) c[i] = t.base->random(rng);
      c[m] = KElt{1};
      if (is_irreducible(Poly<BaseField>(t.base, c))) {
        lm = std::move(c);
        break;
      }
    }
  }
  t.ext = std::make_shared<const ExtField>(t.base, std::move(lm));
  return t;
}

LElt frobenius(const LElt& x, const FieldTower& t, unsigned i) { return t.ext->frobenius(x, i); }

std::optional<LElt> find_root(const Poly<BaseField>& h, const FieldTower& t) {
  if (h.degree() < 1) throw Error(ErrorCode::ConstantPoly, "find_root needs a nonconstant polynomial");
  auto fac = factor(t.lift(h), 0);
  std::optional<LElt> best;
  for (const auto& [g, mult] : fac.factors) {
    if (g.degree() != 1) continue;
    LElt r = t.ext->neg(g.coeff(0));
    if (!best || r < *best) best = r;
  }
  return best;
}

}  // namespace mcodes
