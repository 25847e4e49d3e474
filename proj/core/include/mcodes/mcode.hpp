#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcodes/gf.hpp"
#include "mcodes/matmod.hpp"
#include "mcodes/polyfact.hpp"
#include "mcodes/rankmetric.hpp"

namespace mcodes {

/// C_g = { v g(M)^t P(M)^t : P in L[x] } for a cyclic matrix M over K.
struct MCyclicCode {
  FieldTower tower;
  KMat m;
  KRow v;                              // cyclic vector
  KPoly f;                             // minimal polynomial of M, degree n
  LPoly g;                             // monic divisor of f over L
  Factorization<BaseField> fprimary;   // f = prod f_i^{m_i} over K
  std::vector<LPoly> gsplit;           // g_i = gcd(g, f_i^{m_i})

  std::size_t n() const noexcept { return m.rows(); }
  std::size_t k() const noexcept { return n() - static_cast<std::size_t>(g.degree()); }
};

/// True iff every generator row times M^t stays in C. Throws SizeMismatch.
bool is_M_code(const LinearCode& c, const KMat& m);

/// Throws NotCyclic or NotADivisor. The cyclic vector is found by is_cyclic(M, seed).
std::pair<MCyclicCode, LinearCode> from_generator(const FieldTower& t, const KMat& m, const LPoly& g,
                                                  std::uint64_t seed = 0);
/// Same, with an explicit cyclic vector v.
std::pair<MCyclicCode, LinearCode> from_generator(const FieldTower& t, const KMat& m, const LPoly& g,
                                                  const KRow& v, std::uint64_t seed = 0);

/// The unique monic g with C = C_g. Throws NotCyclic or NotAnMCode.
LPoly generator_of(const LinearCode& c, const KMat& m, std::uint64_t seed = 0);

/// f / g: the generator of the dual code as an M^t-cyclic code.
LPoly dual_generator(const MCyclicCode& code);

struct EllProfile {
  std::vector<unsigned> ell;        // least l with g_i | f_i^l
  std::vector<unsigned> ell_prime;  // least l' with f_i^{m_i - l'} | g_i
};

EllProfile ell_profile(const MCyclicCode& code);

/// M_1(C_g) = 1. Throws ZeroCode when g = f.
bool first_weight_is_one(const MCyclicCode& code);
/// Squarefree form: some f_i is coprime to g. Throws ZeroCode, or Unsupported
/// when f is not squarefree.
bool first_weight_is_one_squarefree(const MCyclicCode& code);

/// dim_K(C_g ∩ K^n) from the ell profile.
std::size_t dim_base_intersection(const MCyclicCode& code);

struct LastWeights {
  std::optional<std::size_t> mk;        // M_k(C), absent for the zero code
  std::optional<std::size_t> dual_mnk;  // M_{n-k}(dual), absent when g = 1
};

/// Closed forms from the ell profile. Throws ZeroCode when g = f.
LastWeights last_weight_closed(const MCyclicCode& code);
/// Squarefree specialization. Throws ZeroCode, or Unsupported when f is not squarefree.
LastWeights last_weight_closed_squarefree(const MCyclicCode& code);

/// Necessary condition for a proper MRD M-code: the minimal polynomial is a prime power.
bool mrd_possible(const KMat& m, std::uint64_t seed = 0);

/// One summand V_i of a decomposition K^n = V_1 ⊕ ... ⊕ V_t, given by a K-basis.
struct ComponentCode {
  KMat basis;              // d_i x n
  LinearCode code;         // C_i ⊂ L^{d_i}: coordinates of C ∩ (V_i)_L
  std::size_t d() const noexcept { return basis.rows(); }
  std::size_t k() const noexcept { return code.k(); }
};

struct ComponentSplit {
  std::vector<ComponentCode> components;
  bool direct_sum;  // C = ⊕ (C ∩ (V_i)_L)
};

/// Throws DecompositionMismatch when the bases do not decompose K^n.
ComponentSplit component_split(const LinearCode& c, const std::vector<KMat>& bases);
std::vector<KMat> bases_of(const std::vector<PrimaryComponent>& comps);
std::vector<KMat> bases_of(const std::vector<CyclicComponent>& comps);

/// Per-component data feeding the min-plus combination of hierarchies.
struct ComponentHierarchy {
  struct Entry {
    std::size_t d;
    std::size_t k;
    std::optional<std::vector<std::size_t>> exact;  // M_1..M_k of the component
  };
  std::vector<Entry> entries;
  bool direct_sum = true;
};

struct HierarchyBounds {
  std::vector<std::size_t> value;  // value[r-1]: M_r or an upper bound for it
  std::vector<bool> exact;         // exact[r-1]: value[r-1] equals M_r
};

/// M_r(C) = min over r_1 + ... + r_t = r of sum M_{r_i}(C_i); components without
/// exact data contribute d_i - k_i + r_i. Throws HypothesisFailed.
HierarchyBounds combine_hierarchy(const ComponentHierarchy& h);

/// Builds the combination input from a split, optionally running the oracle on
/// each component code (components exceeding the cap fall back to bounds).
ComponentHierarchy hierarchy_input(const ComponentSplit& split, bool use_oracle,
                                   std::uint64_t cap = kDefaultOracleCap);

struct DegreeOneHierarchy {
  std::vector<LRow> w;              // one per component meeting P
  std::vector<std::size_t> weights;
  std::vector<std::size_t> hierarchy;  // M_1..M_|w|
};

/// For C = ker(P(M)) with cyclic components all meeting P in degree <= 1.
/// Throws PreconditionDegree.
DegreeOneHierarchy degree_one_hierarchy(const FieldTower& t, const std::vector<CyclicComponent>& comps,
                                        const LPoly& p);

struct KernelComponent {
  KPoly theta;
  LPoly gcd_with_p;
  LPoly generator;  // theta / gcd(P, theta)
};

struct KernelCode {
  LinearCode code;
  std::vector<KernelComponent> components;
};

/// ker(P(M)) over L together with per-component generator polynomials.
KernelCode kernel_code(const FieldTower& t, const KMat& m, const LPoly& p,
                       const std::vector<CyclicComponent>& comps);

/// (C_{x^n - 1})^ell: ell invariant factors x^{n/ell} - 1.
KMat quasi_cyclic_matrix(const FieldPtr<BaseField>& k, std::size_t n, std::size_t ell);

/// Generator-polynomial bounds for C_g: combine_hierarchy on the primary split
/// with component Singleton bounds deg(g_i) + r_i.
HierarchyBounds generator_bounds(const MCyclicCode& code);

}  // namespace mcodes
