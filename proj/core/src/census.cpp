#include "mcodes/census.hpp"

#include <numeric>

#include "mcodes/mcode.hpp"
#include "mcodes/polyfact.hpp"

namespace mcodes {

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t e) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

Rational rat_pow(const Rational& r, std::uint64_t e) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= r;
  return out;
}

void require_coprime(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "n must be positive");
  if (std::gcd(n, q) != 1) throw Error(ErrorCode::NotCoprime, "n is not coprime to q");
}

}  // namespace

CensusReport census_from_factors(std::vector<CensusFactor> factors) {
  CensusReport r;
  r.total = 1;
  r.count = 1;
  r.lower = 1;
  r.upper = 1;
  r.all_irreducible_over_L = true;
  r.splits_over_L = true;
  for (const auto& f : factors) {
    const BigInt all = big_pow(f.multiplicity + 1, f.delta);
    const BigInt good = all - big_pow(f.multiplicity, f.delta);
    const Rational frac(BigInt(f.multiplicity), BigInt(f.multiplicity + 1));
    for (std::uint64_t c = 0; c < f.count; ++c) {
      r.total *= all;
      r.count *= good;
      r.lower *= Rational(1, f.multiplicity + 1);
      r.upper *= 1 - rat_pow(frac, f.degree);
    }
    if (f.count > 0) {
      r.all_irreducible_over_L = r.all_irreducible_over_L && f.delta == 1;
      r.splits_over_L = r.splits_over_L && f.delta == f.degree;
    }
  }
  r.proportion = Rational(r.count, r.total);
  r.lower_attained = r.proportion == r.lower;
  r.upper_attained = r.proportion == r.upper;
  r.factors = std::move(factors);
  return r;
}

CensusReport proportion(const KPoly& f, const FieldTower& t, std::uint64_t seed) {
  std::vector<CensusFactor> fs;
  for (const auto& [fi, mi] : factor(f, seed).factors) {
    const auto over_l = factor(t.lift(fi), seed);
    fs.push_back({static_cast<unsigned>(fi.degree()), mi, static_cast<unsigned>(over_l.factors.size())});
  }
  return census_from_factors(std::move(fs));
}

CensusReport proportion_fq(const KPoly& f, unsigned m, std::uint64_t seed) {
  std::vector<CensusFactor> fs;
  for (const auto& [fi, mi] : factor(f, seed).factors) {
    const auto deg = static_cast<unsigned>(fi.degree());
    fs.push_back({deg, mi, std::gcd(m, deg)});
  }
  return census_from_factors(std::move(fs));
}

CyclotomicProfile cyclotomic_profile(std::uint64_t n, std::uint64_t q, unsigned m) {
  require_coprime(n, q);
  CyclotomicProfile p{{}, 0};
  for (auto d : divisors(n)) {
    const auto o = mult_order(q % d, d);
    const auto om = mult_order(powmod_u64(q, m, d), d);
    CyclotomicEntry e{d, o, euler_phi(d) / o, o / om};
    p.s += e.t;
    p.entries.push_back(e);
  }
  return p;
}

CyclicCensus cyclic_census(std::uint64_t n, std::uint64_t q, unsigned m) {
  auto profile = cyclotomic_profile(n, q, m);
  std::vector<CensusFactor> fs;
  for (const auto& e : profile.entries)
    fs.push_back({static_cast<unsigned>(e.order), 1, static_cast<unsigned>(e.nd), e.t});
  const auto on = profile.entries.back().order;
  CyclicCensus out{census_from_factors(std::move(fs)), std::move(profile), std::gcd<std::uint64_t>(m, on) == 1,
                   m % on == 0};
  return out;
}

CyclicCensus negacyclic_census(std::uint64_t n, std::uint64_t q, unsigned m) {
  if (n % 2 == 0) throw Error(ErrorCode::EvenN, "negacyclic census needs odd n");
  require_coprime(2 * n, q);
  // Phi_d(-x) factors like Phi_d.
  return cyclic_census(n, q, m);
}

KPoly negacyclic_product(std::uint64_t n, const FieldPtr<BaseField>& k) {
  KPoly prod = KPoly::one(k);
  for (auto d : divisors(n)) prod = prod * cyclotomic(d, k).negated_variable();
  return prod.monic();
}

ExhaustiveCensus exhaustive_census(const KPoly& f, const FieldTower& t, std::uint64_t cap, std::uint64_t seed) {
  const auto fl = t.lift(f);
  const auto fac = factor(fl, seed);
  BigInt size = 1;
  for (const auto& fm : fac.factors) size *= fm.second + 1;
  if (size > cap) {
    throw Error(ErrorCode::TooLarge,
                "divisor lattice of size " + size.str() + " exceeds cap " + std::to_string(cap));
  }
  const auto m = companion(f);
  ExhaustiveCensus out{0, 0};
  for (const auto& g : monic_divisors(fac)) {
    const auto c = from_generator(t, m, g, seed).second;
    out.total += 1;
    if (c.k() == 0 || intersect_base(c).rows() == 0) out.count += 1;
  }
  return out;
}

}  // namespace mcodes
