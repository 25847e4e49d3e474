#include "mcodes/matmod.hpp"

#include <algorithm>
#include <map>

#include "mcodes/polyfact.hpp"

namespace mcodes {

template <FiniteField F>
Mat<F> companion(const Poly<F>& p) {
  if (p.degree() < 1) throw Error(ErrorCode::ConstantPoly, "companion matrix of a constant");
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, "companion matrix needs a monic polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  Mat<F> c(p.field_ptr(), d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = p.field().one();
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = p.field().neg(p.coeffs()[i]);
  return c;
}

template <FiniteField F>
Mat<F> krylov(const Mat<F>& m, const typename Mat<F>::Row& v, std::size_t count) {
  Mat<F> k(m.field_ptr(), count, m.cols());
  auto cur = v;
  for (std::size_t i = 0; i < count; ++i) {
    k.set_row(i, cur);
    if (i + 1 < count) cur = times_transpose(cur, m);
  }
  return k;
}

template <FiniteField F>
Poly<F> vector_min_poly(const Mat<F>& m, const typename Mat<F>::Row& v) {
  const F& f = m.field();
  const std::size_t n = m.cols();
  struct Reduced {
    typename Mat<F>::Row vec, combo;
    std::size_t pivot;
  };
  std::vector<Reduced> rows;
  auto krylov_vec = v;
  for (std::size_t k = 0; k <= n; ++k) {
    auto cur = krylov_vec;
    typename Mat<F>::Row combo(n + 1, f.zero());
    combo[k] = f.one();
    for (const auto& r : rows) {
      const auto c = cur[r.pivot];
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j) cur[j] = f.sub(cur[j], f.mul(c, r.vec[j]));
      for (std::size_t j = 0; j <= n; ++j) combo[j] = f.sub(combo[j], f.mul(c, r.combo[j]));
    }
    std::size_t piv = 0;
    while (piv < n && f.is_zero(cur[piv])) ++piv;
    if (piv == n) {
      combo.resize(k + 1);
      return Poly<F>(m.field_ptr(), std::move(combo));
    }
    const auto inv = f.inv(cur[piv]);
    for (auto& x : cur) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    rows.push_back({std::move(cur), std::move(combo), piv});
    krylov_vec = times_transpose(krylov_vec, m);
  }
  throw Error(ErrorCode::Unsupported, "Krylov sequence did not terminate");
}

template <FiniteField F>
Poly<F> min_poly(const Mat<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "minimal polynomial of a non-square matrix");
  Poly<F> acc = Poly<F>::one(m.field_ptr());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (acc.degree() == static_cast<int>(n)) break;
    typename Mat<F>::Row e(n, m.field().zero());
    e[i] = m.field().one();
    acc = lcm(acc, vector_min_poly(m, e));
  }
  return acc;
}

template <FiniteField F>
Poly<F> char_poly(const Mat<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
  const F& f = m.field();
  const std::size_t n = m.rows();
  Mat<F> h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && f.is_zero(h(i, j))) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const auto inv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      const auto u = f.mul(h(k, j), inv);
      if (f.is_zero(u)) continue;
      for (std::size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  const auto& fp = m.field_ptr();
  std::vector<Poly<F>> p;
  p.push_back(Poly<F>::one(fp));
  const auto x = Poly<F>::x(fp);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly<F> pk = (x - Poly<F>::constant(fp, h(k - 1, k - 1))) * p[k - 1];
    auto t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      pk -= p[k - i - 1].scaled(f.mul(t, h(k - i - 1, k - 1)));
    }
    p.push_back(std::move(pk));
  }
  return p.back();
}

std::optional<KRow> is_cyclic(const KMat& m, std::uint64_t seed) {
  const std::size_t n = m.rows();
  if (min_poly(m).degree() < static_cast<int>(n)) return std::nullopt;
  const auto& k = m.field();
  for (std::size_t i = 0; i < n; ++i) {
    KRow e(n, k.zero());
    e[i] = k.one();
    if (rank(krylov(m, e, n)) == n) return e;
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    KRow v(n);
    for (auto& x : v) x = k.random(rng);
    if (rank(krylov(m, v, n)) == n) return v;
  }
  throw Error(ErrorCode::Unsupported, "no cyclic vector found by random search");
}

std::vector<PrimaryComponent> primary_components(const KMat& m, std::uint64_t seed) {
  const auto mu = min_poly(m);
  std::vector<PrimaryComponent> out;
  if (mu.degree() < 1) return out;
  for (const auto& [f, mult] : factor(mu, seed).factors) {
    auto basis = kernel(eval_poly(pow(f, mult), m));
    auto e = rref(basis);
    const std::size_t d = basis.rows();
    KMat induced(m.field_ptr(), d, d);
    for (std::size_t r = 0; r < d; ++r) {
      auto coords = coordinates(e, times_transpose(basis.row(r), m));
      if (!coords) throw Error(ErrorCode::DecompositionMismatch, "primary component is not M-stable");
      for (std::size_t s = 0; s < d; ++s) induced(s, r) = (*coords)[s];
    }
    const auto mult_char = static_cast<unsigned>(d / static_cast<std::size_t>(f.degree()));
    out.push_back({f, mult, mult_char, std::move(basis), std::move(induced)});
  }
  return out;
}

namespace {

struct PrimeGenerators {
  KPoly f;
  std::vector<std::pair<KRow, unsigned>> gens;  // (vector, exponent)
};

std::vector<PrimeGenerators> primary_generators(const KMat& m, std::uint64_t seed) {
  const auto mu = min_poly(m);
  std::vector<PrimeGenerators> out;
  if (mu.degree() < 1) return out;
  for (const auto& [f, mult] : factor(mu, seed).factors) {
    const auto df = static_cast<std::size_t>(f.degree());
    const KMat nf = eval_poly(f, m);
    std::vector<KMat> w;  // w[j] = ker f(M)^j
    w.emplace_back(m.field_ptr(), 0, m.cols());
    KMat power = KMat::identity(m.field_ptr(), m.rows());
    for (unsigned j = 1; j <= mult; ++j) {
      power = power * nf;
      w.push_back(kernel(power));
    }
    PrimeGenerators pg{f, {}};
    for (unsigned j = mult; j >= 1; --j) {
      KMat span = w[j - 1];
      for (const auto& [u, e] : pg.gens) {
        auto shifted = u;
        for (unsigned s = 0; s < e - j; ++s) shifted = times_transpose(shifted, nf);
        span = stack(span, krylov(m, shifted, j * df));
      }
      auto ech = rref(span);
      for (std::size_t r = 0; r < w[j].rows(); ++r) {
        auto b = w[j].row(r);
        if (coordinates(ech, b)) continue;
        pg.gens.emplace_back(b, j);
        span = stack(ech.basis, krylov(m, b, j * df));
        ech = rref(span);
      }
    }
    std::reverse(pg.gens.begin(), pg.gens.end());  // ascending exponents
    out.push_back(std::move(pg));
  }
  return out;
}

}  // namespace

std::vector<CyclicComponent> cyclic_decomposition(const KMat& m, DecompositionMode mode, std::uint64_t seed) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "decomposition of a non-square matrix");
  const auto per_prime = primary_generators(m, seed);
  std::vector<CyclicComponent> out;
  if (mode == DecompositionMode::PrimaryCyclic) {
    for (const auto& pg : per_prime) {
      for (const auto& [u, e] : pg.gens) {
        auto theta = pow(pg.f, e);
        auto basis = krylov(m, u, static_cast<std::size_t>(theta.degree()));
        out.push_back({std::move(theta), u, std::move(basis)});
      }
    }
  } else {
    std::size_t t = 0;
    for (const auto& pg : per_prime) t = std::max(t, pg.gens.size());
    // k-th largest exponents of every prime combine into one invariant factor
    for (std::size_t k = t; k-- > 0;) {
      KPoly theta = KPoly::one(m.field_ptr());
      KRow v(m.cols(), m.field().zero());
      for (const auto& pg : per_prime) {
        const std::size_t sz = pg.gens.size();
        if (k >= sz) continue;
        const auto& [u, e] = pg.gens[sz - 1 - k];
        theta *= pow(pg.f, e);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = m.field().add(v[j], u[j]);
      }
      auto basis = krylov(m, v, static_cast<std::size_t>(theta.degree()));
      out.push_back({std::move(theta), std::move(v), std::move(basis)});
    }
  }
  std::size_t total = 0;
  for (const auto& c : out) total += c.dim();
  if (total != m.rows() || rank(stacked_basis(out)) != m.rows()) {
    throw Error(ErrorCode::DecompositionMismatch, "cyclic components do not span the space");
  }
  return out;
}

KMat stacked_basis(const std::vector<CyclicComponent>& comps) {
  if (comps.empty()) throw Error(ErrorCode::SizeMismatch, "no components");
  KMat acc = comps.front().basis;
  for (std::size_t i = 1; i < comps.size(); ++i) acc = stack(acc, comps[i].basis);
  return acc;
}

KMat stacked_basis(const std::vector<PrimaryComponent>& comps) {
  if (comps.empty()) throw Error(ErrorCode::SizeMismatch, "no components");
  KMat acc = comps.front().basis;
  for (std::size_t i = 1; i < comps.size(); ++i) acc = stack(acc, comps[i].basis);
  return acc;
}

bool verify_decomposition(const KMat& m, const std::vector<CyclicComponent>& comps) {
  const KMat p = stacked_basis(comps);
  if (!p.is_square() || rank(p) != p.rows()) return false;
  std::vector<KMat> blocks;
  for (const auto& c : comps) blocks.push_back(companion(c.theta).transpose());
  return p * m.transpose() * inverse(p) == block_diag(blocks);
}

bool is_prime_power(const KPoly& p, std::uint64_t seed) {
  if (p.degree() < 1) return false;
  return factor(p, seed).factors.size() == 1;
}

#define MCODES_INSTANTIATE(F)                                                          \
  template Mat<F> companion(const Poly<F>&);                                           \
  template Mat<F> krylov(const Mat<F>&, const typename Mat<F>::Row&, std::size_t);     \
  template Poly<F> vector_min_poly(const Mat<F>&, const typename Mat<F>::Row&);        \
  template Poly<F> min_poly(const Mat<F>&);                                            \
  template Poly<F> char_poly(const Mat<F>&);

MCODES_INSTANTIATE(BaseField)
MCODES_INSTANTIATE(ExtField)

#undef MCODES_INSTANTIATE

}  // namespace mcodes
