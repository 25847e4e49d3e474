#pragma once

#include <cstdint>
#include <vector>

#include "mcodes/field.hpp"
#include "mcodes/gf.hpp"
#include "mcodes/matmod.hpp"

namespace mcodes {

/// One irreducible K-factor class: `count` factors sharing degree, multiplicity
/// and number of L-factors.
struct CensusFactor {
  unsigned degree;
  unsigned multiplicity;
  unsigned delta;  // irreducible factors over L
  std::uint64_t count = 1;
};

struct CensusReport {
  std::vector<CensusFactor> factors;
  BigInt total;      // number of M-cyclic codes (monic divisors over L)
  BigInt count;      // codes whose first rank weight is not 1 (zero code included)
  Rational proportion;
  Rational lower;    // prod 1/(m_i+1)
  Rational upper;    // prod 1 - (m_i/(m_i+1))^{deg f_i}
  bool lower_attained;
  bool upper_attained;
  bool all_irreducible_over_L;
  bool splits_over_L;
};

/// Census from per-factor data.
CensusReport census_from_factors(std::vector<CensusFactor> factors);

/// delta_L(f_i) obtained by factoring each f_i over L.
CensusReport proportion(const KPoly& f, const FieldTower& t, std::uint64_t seed = 0);
/// delta_L(f_i) = gcd(m, deg f_i); no arithmetic in L.
CensusReport proportion_fq(const KPoly& f, unsigned m, std::uint64_t seed = 0);

struct CyclotomicEntry {
  std::uint64_t d;
  std::uint64_t order;  // o_d(q)
  std::uint64_t t;      // phi(d) / o_d(q)
  std::uint64_t nd;     // o_d(q) / o_d(q^m)
};

struct CyclotomicProfile {
  std::vector<CyclotomicEntry> entries;  // ascending d | n
  std::uint64_t s;                       // sum of t
};

/// Throws NotCoprime.
CyclotomicProfile cyclotomic_profile(std::uint64_t n, std::uint64_t q, unsigned m);

struct CyclicCensus {
  CensusReport report;
  CyclotomicProfile profile;
  bool lower_condition;  // gcd(m, o_n(q)) = 1
  bool upper_condition;  // o_n(q) | m
};

/// x^n - 1 over F_q, codes over F_{q^m}. Throws NotCoprime.
CyclicCensus cyclic_census(std::uint64_t n, std::uint64_t q, unsigned m);
/// x^n + 1 for odd n. Throws EvenN, NotCoprime.
CyclicCensus negacyclic_census(std::uint64_t n, std::uint64_t q, unsigned m);

/// prod_{d | n} Phi_d(-x), made monic; equals x^n + 1 for odd n.
KPoly negacyclic_product(std::uint64_t n, const FieldPtr<BaseField>& k);

struct ExhaustiveCensus {
  BigInt total;
  BigInt count;
  Rational ratio() const { return Rational(count, total); }
};

/// Builds every C_g for M = C_f and tests C_g ∩ K^n = 0 directly. Throws TooLarge.
ExhaustiveCensus exhaustive_census(const KPoly& f, const FieldTower& t, std::uint64_t cap = 10'000,
                                   std::uint64_t seed = 0);

}  // namespace mcodes
