#include "mcodes/mcode.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mcodes {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

LRow lift_row(const KRow& v, const FieldTower& t) {
  LRow out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(t.ext->embed(x));
  return out;
}

KRow require_cyclic(const KMat& m, std::uint64_t seed) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
  auto cv = is_cyclic(m, seed);
  if (!cv) throw Error(ErrorCode::NotCyclic, "matrix is not cyclic");
  return *cv;
}

LPoly primary_part(const MCyclicCode& code, std::size_t i) {
  const auto& [fi, mi] = code.fprimary.factors[i];
  return code.tower.lift(pow(fi, mi));
}

void require_nonzero(const MCyclicCode& code) {
  if (code.k() == 0) throw Error(ErrorCode::ZeroCode, "g equals f: the code is zero");
}

void require_squarefree(const MCyclicCode& code) {
  for (const auto& fm : code.fprimary.factors)
    if (fm.second != 1) throw Error(ErrorCode::Unsupported, "f is not squarefree");
}

}  // namespace

bool is_M_code(const LinearCode& c, const KMat& m) {
  if (!m.is_square() || m.rows() != c.n()) throw Error(ErrorCode::SizeMismatch, "matrix size does not match code length");
  const auto ml = lift(m, c.tower());
  for (std::size_t i = 0; i < c.k(); ++i)
    if (!c.contains(times_transpose(c.gen().row(i), ml))) return false;
  return true;
}

std::pair<MCyclicCode, LinearCode> from_generator(const FieldTower& t, const KMat& m, const LPoly& g,
                                                  std::uint64_t seed) {
  return from_generator(t, m, g, require_cyclic(m, seed), seed);
}

std::pair<MCyclicCode, LinearCode> from_generator(const FieldTower& t, const KMat& m, const LPoly& g,
                                                  const KRow& v, std::uint64_t seed) {
  if (!m.is_square() || v.size() != m.rows()) throw Error(ErrorCode::SizeMismatch, "cyclic vector has the wrong length");
  const std::size_t n = m.rows();
  if (rank(krylov(m, v, n)) != n) throw Error(ErrorCode::NotCyclic, "vector is not cyclic for the matrix");
  auto f = min_poly(m);
  auto fl = t.lift(f);
  if (!g.is_monic() || !divides(g, fl)) throw Error(ErrorCode::NotADivisor, "g is not a monic divisor of the minimal polynomial");

  MCyclicCode code{t, m, v, f, g, factor(f, seed), {}};
  for (std::size_t i = 0; i < code.fprimary.factors.size(); ++i) code.gsplit.push_back(gcd(g, primary_part(code, i)));

  const auto ml = lift(m, t);
  auto u = times_transpose(lift_row(v, t), eval_poly(g, ml));
  LinearCode c(t, krylov(ml, u, code.k()));
  return {std::move(code), std::move(c)};
}

LPoly generator_of(const LinearCode& c, const KMat& m, std::uint64_t seed) {
  const auto v = require_cyclic(m, seed);
  if (!is_M_code(c, m)) throw Error(ErrorCode::NotAnMCode, "code is not stable under the matrix");
  const auto& t = c.tower();
  const std::size_t n = m.rows();
  // Coordinates with respect to the Krylov basis are the coefficients of P in v P(M)^t.
  const auto binv_t = inverse(lift(krylov(m, v, n), t)).transpose();
  LPoly g = t.lift(min_poly(m));
  for (std::size_t i = 0; i < c.k(); ++i) g = gcd(g, LPoly(t.ext, times_transpose(c.gen().row(i), binv_t)));
  return g;
}

LPoly dual_generator(const MCyclicCode& code) { return code.tower.lift(code.f) / code.g; }

EllProfile ell_profile(const MCyclicCode& code) {
  EllProfile out;
  for (std::size_t i = 0; i < code.fprimary.factors.size(); ++i) {
    const auto& [fi, mi] = code.fprimary.factors[i];
    const auto fl = code.tower.lift(fi);
    const auto& gi = code.gsplit[i];
    unsigned ell = 0;
    while (!divides(gi, pow(fl, ell))) ++ell;
    unsigned ellp = 0;
    while (!divides(pow(fl, mi - ellp), gi)) ++ellp;
    out.ell.push_back(ell);
    out.ell_prime.push_back(ellp);
  }
  return out;
}

bool first_weight_is_one(const MCyclicCode& code) {
  require_nonzero(code);
  const auto prof = ell_profile(code);
  for (std::size_t i = 0; i < prof.ell.size(); ++i)
    if (prof.ell[i] + 1 <= code.fprimary.factors[i].second) return true;
  return false;
}

bool first_weight_is_one_squarefree(const MCyclicCode& code) {
  require_nonzero(code);
  require_squarefree(code);
  for (const auto& [fi, mi] : code.fprimary.factors)
    if (gcd(code.g, code.tower.lift(fi)).is_one()) return true;
  return false;
}

std::size_t dim_base_intersection(const MCyclicCode& code) {
  const auto prof = ell_profile(code);
  std::size_t s = 0;
  for (std::size_t i = 0; i < prof.ell.size(); ++i) {
    const auto& [fi, mi] = code.fprimary.factors[i];
    s += (mi - prof.ell[i]) * static_cast<std::size_t>(fi.degree());
  }
  return s;
}

LastWeights last_weight_closed(const MCyclicCode& code) {
  require_nonzero(code);
  const auto prof = ell_profile(code);
  std::size_t mk = 0, dual = 0;
  for (std::size_t i = 0; i < prof.ell.size(); ++i) {
    const auto deg = static_cast<std::size_t>(code.fprimary.factors[i].first.degree());
    mk += prof.ell_prime[i] * deg;
    dual += prof.ell[i] * deg;
  }
  LastWeights out{mk, std::nullopt};
  if (!code.g.is_one()) out.dual_mnk = dual;
  return out;
}

LastWeights last_weight_closed_squarefree(const MCyclicCode& code) {
  require_nonzero(code);
  require_squarefree(code);
  std::size_t mk = 0, dual = 0;
  for (const auto& [fi, mi] : code.fprimary.factors) {
    const auto fl = code.tower.lift(fi);
    const auto deg = static_cast<std::size_t>(fi.degree());
    if (!divides(fl, code.g)) mk += deg;
    if (!gcd(code.g, fl).is_one()) dual += deg;
  }
  LastWeights out{mk, std::nullopt};
  if (!code.g.is_one()) out.dual_mnk = dual;
  return out;
}

bool mrd_possible(const KMat& m, std::uint64_t seed) { return is_prime_power(min_poly(m), seed); }

ComponentSplit component_split(const LinearCode& c, const std::vector<KMat>& bases) {
  const auto& t = c.tower();
  if (bases.empty()) throw Error(ErrorCode::DecompositionMismatch, "no components");
  KMat all(t.base, 0, c.n());
  for (const auto& b : bases) {
    if (b.cols() != c.n()) throw Error(ErrorCode::DecompositionMismatch, "component basis has the wrong length");
    all = stack(all, b);
  }
  if (all.rows() != c.n() || rank(all) != c.n())
    throw Error(ErrorCode::DecompositionMismatch, "component bases do not form a basis");

  const auto h = dual(c).gen();
  ComponentSplit out{{}, true};
  std::size_t ksum = 0;
  for (const auto& b : bases) {
    // x * B lies in C  <=>  x * B * H^t = 0
    auto ci = kernel(h * lift(b, t).transpose());
    ksum += ci.rows();
    out.components.push_back(ComponentCode{b, LinearCode(t, ci)});
  }
  out.direct_sum = ksum == c.k();
  return out;
}

std::vector<KMat> bases_of(const std::vector<PrimaryComponent>& comps) {
  std::vector<KMat> out;
  for (const auto& c : comps) out.push_back(c.basis);
  return out;
}

std::vector<KMat> bases_of(const std::vector<CyclicComponent>& comps) {
  std::vector<KMat> out;
  for (const auto& c : comps) out.push_back(c.basis);
  return out;
}

HierarchyBounds combine_hierarchy(const ComponentHierarchy& h) {
  if (!h.direct_sum) throw Error(ErrorCode::HypothesisFailed, "code is not the direct sum of its component parts");
  // Min-plus convolution of per-component upper values and lower values (M_r >= r).
  std::vector<std::size_t> hi{0}, lo{0};
  for (const auto& e : h.entries) {
    if (e.k > e.d) throw Error(ErrorCode::HypothesisFailed, "component dimension exceeds its length");
    if (e.exact && e.exact->size() != e.k)
      throw Error(ErrorCode::HypothesisFailed, "component hierarchy has the wrong length");
    std::vector<std::size_t> up(e.k + 1, 0), down(e.k + 1, 0);
    for (std::size_t r = 1; r <= e.k; ++r) {
      up[r] = e.exact ? (*e.exact)[r - 1] : e.d - e.k + r;
      down[r] = e.exact ? (*e.exact)[r - 1] : r;
    }
    std::vector<std::size_t> nhi(hi.size() + e.k, kInf), nlo(hi.size() + e.k, kInf);
    for (std::size_t a = 0; a < hi.size(); ++a) {
      for (std::size_t b = 0; b <= e.k; ++b) {
        nhi[a + b] = std::min(nhi[a + b], hi[a] + up[b]);
        nlo[a + b] = std::min(nlo[a + b], lo[a] + down[b]);
      }
    }
    hi = std::move(nhi);
    lo = std::move(nlo);
  }
  HierarchyBounds out;
  for (std::size_t r = 1; r < hi.size(); ++r) {
    out.value.push_back(hi[r]);
    out.exact.push_back(lo[r] == hi[r]);
  }
  return out;
}

ComponentHierarchy hierarchy_input(const ComponentSplit& split, bool use_oracle, std::uint64_t cap) {
  ComponentHierarchy h;
  h.direct_sum = split.direct_sum;
  for (const auto& c : split.components) {
    ComponentHierarchy::Entry e{c.d(), c.k(), std::nullopt};
    if (use_oracle) {
      try {
        e.exact = grw_hierarchy(c.code, cap);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::TooLarge) throw;
      }
    }
    h.entries.push_back(std::move(e));
  }
  return h;
}

DegreeOneHierarchy degree_one_hierarchy(const FieldTower& t, const std::vector<CyclicComponent>& comps,
                                        const LPoly& p) {
  DegreeOneHierarchy out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto theta = t.lift(comps[i].theta);
    const auto gi = gcd(p, theta);
    if (gi.degree() == 0) continue;
    if (gi.degree() != 1) {
      throw Error(ErrorCode::PreconditionDegree,
                  "component " + std::to_string(i) + " meets P in degree " + std::to_string(gi.degree()));
    }
    auto q = theta / gi;
    LRow w = q.coeffs();
    w.resize(comps[i].dim(), t.ext->zero());
    out.weights.push_back(rank_weight(w, t));
    out.w.push_back(std::move(w));
  }
  auto sorted = out.weights;
  std::sort(sorted.begin(), sorted.end());
  std::partial_sum(sorted.begin(), sorted.end(), std::back_inserter(out.hierarchy));
  return out;
}

KernelCode kernel_code(const FieldTower& t, const KMat& m, const LPoly& p, const std::vector<CyclicComponent>& comps) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
  LinearCode code(t, kernel(eval_poly(p, lift(m, t))));
  KernelCode out{std::move(code), {}};
  std::size_t dim = 0;
  for (const auto& c : comps) {
    const auto theta = t.lift(c.theta);
    auto gi = gcd(p, theta);
    dim += static_cast<std::size_t>(gi.degree());
    out.components.push_back(KernelComponent{c.theta, gi, theta / gi});
  }
  if (!comps.empty() && dim != out.code.k())
    throw Error(ErrorCode::DecompositionMismatch, "kernel dimension disagrees with the component gcds");
  return out;
}

KMat quasi_cyclic_matrix(const FieldPtr<BaseField>& k, std::size_t n, std::size_t ell) {
  if (ell == 0 || n % ell != 0) throw Error(ErrorCode::SizeMismatch, "ell must divide n");
  const auto block = companion(binomial(k, n / ell, k->one()));
  return block_diag(std::vector<KMat>(ell, block));
}

HierarchyBounds generator_bounds(const MCyclicCode& code) {
  ComponentHierarchy h;
  for (std::size_t i = 0; i < code.fprimary.factors.size(); ++i) {
    const auto& [fi, mi] = code.fprimary.factors[i];
    const std::size_t d = mi * static_cast<std::size_t>(fi.degree());
    h.entries.push_back({d, d - static_cast<std::size_t>(code.gsplit[i].degree()), std::nullopt});
  }
  return combine_hierarchy(h);
}

}  // namespace mcodes
