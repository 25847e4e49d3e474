#include "mcodes/polyfact.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mcodes {

template <FiniteField F>
Poly<F> Factorization<F>::expand() const {
  Poly<F> acc = Poly<F>::constant(field, unit);
  for (const auto& [g, mult] : factors) acc *= pow(g, mult);
  return acc;
}

template <FiniteField F>
Poly<F> pth_root(const Poly<F>& f) {
  const F& fld = f.field();
  const std::size_t p = fld.characteristic();
  std::vector<typename F::Element> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(fld.pth_root(f.coeffs()[i]));
  return Poly<F>(f.field_ptr(), std::move(v));
}

namespace {

template <FiniteField F>
void squarefree_rec(const Poly<F>& f, unsigned scale, std::map<unsigned, Poly<F>>& out) {
  if (f.degree() < 1) return;
  auto merge = [&](const Poly<F>& part, unsigned mult) {
    auto it = out.find(mult);
    if (it == out.end()) {
      out.emplace(mult, part);
    } else {
      it->second = it->second * part;
    }
  };
  auto d = f.derivative();
  if (d.is_zero()) {
    squarefree_rec(pth_root(f), scale * f.field().characteristic(), out);
    return;
  }
  auto c = gcd(f, d);
  auto w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    auto y = gcd(w, c);
    auto z = w / y;
    if (z.degree() > 0) merge(z.monic(), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) squarefree_rec(pth_root(c.monic()), scale * f.field().characteristic(), out);
}

template <FiniteField F>
Poly<F> random_poly(const FieldPtr<F>& fp, int below_degree, Rng& rng) {
  std::vector<typename F::Element> v;
  for (int i = 0; i < below_degree; ++i) v.push_back(fp->random(rng));
  return Poly<F>(fp, std::move(v));
}

// f squarefree monic with all irreducible factors of degree d.
template <FiniteField F>
void equal_degree_split(const Poly<F>& f, unsigned d, Rng& rng, std::vector<Poly<F>>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const F& fld = f.field();
  const auto& fp = f.field_ptr();
  const BigInt& Q = fld.order();
  const bool char2 = fld.characteristic() == 2;
  unsigned trace_len = 0;
  BigInt half;
  if (char2) {
    trace_len = static_cast<unsigned>(boost::multiprecision::msb(Q)) * d;
  } else {
    half = (boost::multiprecision::pow(Q, d) - 1) / 2;
  }
  for (;;) {
    auto a = random_poly(fp, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly<F> b(fp);
    if (char2) {
      Poly<F> t = a;
      b = a;
      for (unsigned i = 1; i < trace_len; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      b = powmod(a, half, f) - Poly<F>::one(fp);
    }
    if (b.is_zero()) continue;
    auto g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

// f squarefree monic.
template <FiniteField F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(Poly<F> f) {
  std::vector<std::pair<Poly<F>, unsigned>> out;
  const auto& fp = f.field_ptr();
  const auto x = Poly<F>::x(fp);
  Poly<F> h = x % f;
  for (unsigned d = 1; 2 * static_cast<int>(d) <= f.degree(); ++d) {
    h = powmod(h, f.field().order(), f);
    auto g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

}  // namespace

template <FiniteField F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPoly, "squarefree decomposition of zero");
  std::map<unsigned, Poly<F>> parts;
  squarefree_rec(f.monic(), 1, parts);
  std::vector<std::pair<Poly<F>, unsigned>> out;
  for (auto& [mult, part] : parts) out.emplace_back(part.monic(), mult);
  return out;
}

template <FiniteField F>
Factorization<F> factor(const Poly<F>& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPoly, "factorization of zero");
  Rng rng(seed);
  Factorization<F> res{f.field_ptr(), f.lead(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly<F>> irr;
      equal_degree_split(block, d, rng, irr);
      for (auto& g : irr) res.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return res;
}

template <FiniteField F>
Poly<F> frobenius_power_of_x(const Poly<F>& f, unsigned k) {
  Poly<F> h = Poly<F>::x(f.field_ptr()) % f;
  for (unsigned i = 0; i < k; ++i) h = powmod(h, f.field().order(), f);
  return h;
}

template <FiniteField F>
bool is_irreducible(const Poly<F>& f) {
  if (f.degree() < 1) throw Error(ErrorCode::ConstantPoly, "irreducibility of a constant");
  const auto n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const auto g = f.monic();
  const auto x = Poly<F>::x(f.field_ptr());
  for (auto r : prime_factors(n)) {
    auto h = frobenius_power_of_x(g, n / static_cast<unsigned>(r));
    if (!gcd(h - x, g).is_one()) return false;
  }
  return (frobenius_power_of_x(g, n) - x % g).is_zero();
}

template <FiniteField F>
std::vector<Poly<F>> monic_divisors(const Factorization<F>& fac) {
  std::vector<Poly<F>> out{Poly<F>::one(fac.field)};
  for (const auto& [g, mult] : fac.factors) {
    std::vector<Poly<F>> next;
    next.reserve(out.size() * (mult + 1));
    for (const auto& d : out) {
      Poly<F> acc = d;
      next.push_back(acc);
      for (unsigned e = 1; e <= mult; ++e) {
        acc = acc * g;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  return out;
}

Poly<BaseField> cyclotomic(std::uint64_t n, const FieldPtr<BaseField>& k) {
  if (n == 0 || n % k->characteristic() == 0) {
    throw Error(ErrorCode::NotCoprimeToCharacteristic,
                "cyclotomic polynomial of order " + std::to_string(n) + " in characteristic " +
                    std::to_string(k->characteristic()));
  }
  std::map<std::uint64_t, Poly<BaseField>> memo;
  for (auto d : divisors(n)) {
    Poly<BaseField> phi = binomial(k, d, k->one());
    for (const auto& [e, pe] : memo) {
      if (d % e == 0) phi = phi / pe;
    }
    memo.emplace(d, std::move(phi));
  }
  return memo.at(n);
}

unsigned num_factors_over_L(const Poly<BaseField>& fi, const FieldTower& t) {
  if (fi.degree() < 1 || !is_irreducible(fi)) {
    throw Error(ErrorCode::NotIrreducible, "expected an irreducible polynomial over K");
  }
  return std::gcd(t.m(), static_cast<unsigned>(fi.degree()));
}

#define MCODES_INSTANTIATE(F)                                                                \
  template struct Factorization<F>;                                                          \
  template Poly<F> pth_root(const Poly<F>&);                                                 \
  template std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>&); \
  template Factorization<F> factor(const Poly<F>&, std::uint64_t);                           \
  template bool is_irreducible(const Poly<F>&);                                              \
  template Poly<F> frobenius_power_of_x(const Poly<F>&, unsigned);                           \
  template std::vector<Poly<F>> monic_divisors(const Factorization<F>&);

MCODES_INSTANTIATE(BaseField)
MCODES_INSTANTIATE(ExtField)

#undef MCODES_INSTANTIATE

}  // namespace mcodes
