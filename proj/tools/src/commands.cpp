#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcodes/census.hpp"
#include "mcodes/mcode.hpp"
#include "mcodes/polyfact.hpp"
#include "mcodes/rankmetric.hpp"
#include "parse.hpp"

namespace mcodes::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string field;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultOracleCap;
  bool pretty = false;
  bool json = true;

  // matrix inputs
  std::string matrix, companion, blockdiag;
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string decimal(const Rational& r, int places = 12) {
  BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  std::string s;
  if (num < 0) {
    s = "-";
    num = -num;
  }
  s += BigInt(num / den).str();
  BigInt rem = num % den;
  if (rem == 0) return s;
  s += '.';
  for (int i = 0; i < places && rem != 0; ++i) {
    rem *= 10;
    s += BigInt(rem / den).str();
    rem %= den;
  }
  return s;
}

Json rational(const Rational& r) {
  return Json{{"num", big(boost::multiprecision::numerator(r))},
              {"den", big(boost::multiprecision::denominator(r))},
              {"decimal", decimal(r)}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json field_json(const FieldTower& t) {
  Json j{{"p", t.p()}, {"e", t.e()}, {"q", big(t.base->order())}, {"m", t.m()}};
  if (t.e() > 1) {
    const auto fp = BaseField::make_prime(t.p());
    std::vector<KElt> digits;
    for (auto d : t.base->modulus()) digits.push_back(KElt{d});
    j["kmod"] = to_string(KPoly(fp, digits), "z");
  }
  j["lmod"] = to_string(t.modulus_poly(), "y");
  return j;
}

Json row_json(const LRow& r, const FieldTower& t) {
  Json a = Json::array();
  for (const auto& x : r) a.push_back(print(x, t));
  return a;
}

KMat matrix_input(const Options& o, const FieldTower& t) {
  const int given = !o.matrix.empty() + !o.companion.empty() + !o.blockdiag.empty();
  if (given != 1) throw CLI::ValidationError("matrix", "give exactly one of --matrix, --companion, --blockdiag");
  if (!o.matrix.empty()) return parse_kmat(read_argument(o.matrix), t);
  if (!o.companion.empty()) return mcodes::companion(parse_kpoly(read_argument(o.companion), t));
  std::vector<KMat> blocks;
  std::string text = read_argument(o.blockdiag);
  std::size_t start = 0;
  for (;;) {
    auto end = text.find(';', start);
    blocks.push_back(mcodes::companion(parse_kpoly(text.substr(start, end - start), t)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return block_diag(blocks);
}

Json hierarchy_json(const HierarchyBounds& b) {
  return Json{{"values", b.value}, {"exact", b.exact}};
}

Json report_json(const CensusReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"degree", f.degree}, {"multiplicity", f.multiplicity}, {"delta", f.delta}, {"count", f.count}});
  return Json{{"total", big(r.total)},
              {"count", big(r.count)},
              {"P", rational(r.proportion)},
              {"lower", rational(r.lower)},
              {"upper", rational(r.upper)},
              {"lower_attained", r.lower_attained},
              {"upper_attained", r.upper_attained},
              {"all_irreducible_over_L", r.all_irreducible_over_L},
              {"splits_over_L", r.splits_over_L},
              {"factors", factors}};
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  const auto pf = prime_factors(q);
  if (pf.size() != 1) throw Error(ErrorCode::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
  unsigned e = 0;
  for (auto v = q; v > 1; v /= pf[0]) ++e;
  return {static_cast<unsigned>(pf[0]), e};
}

// Per-command implementations return {field, inputs, results}.
struct Output {
  Json field;
  Json inputs;
  Json results;
};

Output cmd_factor(const Options& o, const std::string& poly, const std::string& over) {
  const auto t = parse_field(o.field);
  Json factors = Json::array();
  std::string unit;
  if (over == "L") {
    const auto fac = factor(parse_lpoly(read_argument(poly), t), o.seed);
    unit = print(fac.unit, t);
    for (const auto& [g, e] : fac.factors) factors.push_back({{"poly", to_string(g)}, {"mult", e}});
  } else {
    const auto fac = factor(parse_kpoly(read_argument(poly), t), o.seed);
    unit = print(fac.unit, t);
    for (const auto& [g, e] : fac.factors) factors.push_back({{"poly", to_string(g)}, {"mult", e}});
  }
  return {field_json(t), {{"poly", poly}, {"over", over}}, {{"unit", unit}, {"factors", factors}}};
}

Output cmd_oracle(const Options& o, const std::string& gen, std::optional<std::size_t> r) {
  const auto t = parse_field(o.field);
  const LinearCode c(t, parse_lmat(read_argument(gen), t));
  Json weights = Json::array();
  bool cap_hit = false;
  std::vector<std::size_t> rs;
  if (r) {
    rs.push_back(*r);
  } else {
    for (std::size_t i = 1; i <= c.k(); ++i) rs.push_back(i);
  }
  for (auto ri : rs) {
    try {
      weights.push_back(grw_oracle(c, ri, o.cap));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      cap_hit = true;
      break;
    }
  }
  Json inputs{{"gen", gen}, {"cap", o.cap}};
  if (r) inputs["r"] = *r;
  return {field_json(t), inputs, {{"n", c.n()}, {"k", c.k()}, {"weights", weights}, {"cap_hit", cap_hit}}};
}

Output cmd_analyze(const Options& o, const std::string& fs, const std::string& gs) {
  const auto t = parse_field(o.field);
  const auto f = parse_kpoly(read_argument(fs), t);
  const auto g = parse_lpoly(read_argument(gs), t);
  const auto m = mcodes::companion(f);
  auto [code, c] = from_generator(t, m, g, o.seed);

  Json res{{"n", code.n()}, {"k", code.k()}, {"g", to_string(code.g)}, {"h", to_string(dual_generator(code))}};
  const auto prof = ell_profile(code);
  Json comps = Json::array();
  for (std::size_t i = 0; i < prof.ell.size(); ++i) {
    const auto& [fi, mi] = code.fprimary.factors[i];
    comps.push_back({{"f", to_string(fi)},
                     {"mult", mi},
                     {"g_i", to_string(code.gsplit[i])},
                     {"ell", prof.ell[i]},
                     {"ell_prime", prof.ell_prime[i]}});
  }
  res["components"] = comps;
  res["dim_base_intersection"] = dim_base_intersection(code);
  if (code.k() == 0) {
    res["M1_is_one"] = nullptr;
    res["Mk"] = nullptr;
    res["dual_Mnk"] = nullptr;
    res["bounds"] = Json::array();
    return {field_json(t), {{"f", fs}, {"g", gs}, {"cap", o.cap}}, res};
  }
  res["M1_is_one"] = first_weight_is_one(code);
  const auto lw = last_weight_closed(code);
  res["Mk"] = optional_json(lw.mk);
  res["dual_Mnk"] = optional_json(lw.dual_mnk);
  res["mrd_possible"] = mrd_possible(m, o.seed);

  const auto bounds = generator_bounds(code);
  res["bounds"] = bounds.value;
  res["bounds_exact"] = bounds.exact;

  try {
    res["exact"] = grw_hierarchy(c, o.cap);
    res["exact_source"] = "oracle";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    const auto split = component_split(c, bases_of(primary_components(m, o.seed)));
    const auto comb = combine_hierarchy(hierarchy_input(split, true, o.cap));
    if (std::all_of(comb.exact.begin(), comb.exact.end(), [](bool b) { return b; })) {
      res["exact"] = comb.value;
      res["exact_source"] = "components";
    }
  }
  return {field_json(t), {{"f", fs}, {"g", gs}, {"cap", o.cap}}, res};
}

Json matrix_inputs(const Options& o) {
  Json j = Json::object();
  if (!o.matrix.empty()) j["matrix"] = o.matrix;
  if (!o.companion.empty()) j["companion"] = o.companion;
  if (!o.blockdiag.empty()) j["blockdiag"] = o.blockdiag;
  return j;
}

Output cmd_mrd(const Options& o) {
  const auto t = parse_field(o.field);
  const auto m = matrix_input(o, t);
  const auto mu = min_poly(m);
  return {field_json(t), matrix_inputs(o),
          {{"n", m.rows()}, {"mu", to_string(mu)}, {"prime_power", is_prime_power(mu, o.seed)}}};
}

Output cmd_kernel(const Options& o, const std::string& ps, const std::string& mode) {
  const auto t = parse_field(o.field);
  const auto m = matrix_input(o, t);
  const auto p = parse_lpoly(read_argument(ps), t);
  const auto dm = mode == "invariant" ? DecompositionMode::InvariantFactors : DecompositionMode::PrimaryCyclic;
  const auto comps = cyclic_decomposition(m, dm, o.seed);
  const auto kc = kernel_code(t, m, p, comps);

  Json res{{"n", m.rows()}, {"k", kc.code.k()}};
  Json cj = Json::array();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = kc.components[i];
    cj.push_back({{"theta", to_string(c.theta)},
                  {"dim", comps[i].dim()},
                  {"gcd", to_string(c.gcd_with_p)},
                  {"generator", to_string(c.generator)}});
  }
  res["components"] = cj;

  try {
    const auto d1 = degree_one_hierarchy(t, comps, p);
    Json w = Json::array();
    for (const auto& row : d1.w) w.push_back(row_json(row, t));
    res["degree_one"] = {{"w", w}, {"weights", d1.weights}, {"hierarchy", d1.hierarchy}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionDegree) throw;
    res["degree_one"] = nullptr;
  }

  if (kc.code.k() > 0) {
    const auto split = component_split(kc.code, bases_of(primary_components(m, o.seed)));
    Json dims = Json::array();
    for (const auto& s : split.components) dims.push_back({{"d", s.d()}, {"k", s.k()}});
    res["primary_split"] = {{"direct_sum", split.direct_sum}, {"components", dims}};
    res["bounds"] = hierarchy_json(combine_hierarchy(hierarchy_input(split, false)));
    try {
      res["exact"] = grw_hierarchy(kc.code, o.cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
    }
  }
  Json inputs = matrix_inputs(o);
  inputs["P"] = ps;
  inputs["mode"] = mode;
  return {field_json(t), inputs, res};
}

Json cyclic_json(const CyclicCensus& c) {
  Json res = report_json(c.report);
  Json prof = Json::array();
  for (const auto& e : c.profile.entries)
    prof.push_back({{"d", e.d}, {"o_d", e.order}, {"t", e.t}, {"n_d", e.nd}});
  res["profile"] = prof;
  res["s"] = c.profile.s;
  res["lower_condition"] = c.lower_condition;
  res["upper_condition"] = c.upper_condition;
  return res;
}

Output cmd_census_cyclic(std::uint64_t n, std::uint64_t q, unsigned m, bool nega) {
  const auto c = nega ? negacyclic_census(n, q, m) : cyclic_census(n, q, m);
  const auto [p, e] = prime_power(q);
  const auto k = make_tower(p, e, 1).base;
  const auto f = binomial(k, n, nega ? k->neg(k->one()) : k->one());
  Json res = cyclic_json(c);
  res["f"] = to_string(f);
  res["proportion_fq_agrees"] = proportion_fq(f, m).proportion == c.report.proportion;
  return {{{"q", q}, {"m", m}}, {{"n", n}, {"q", q}, {"m", m}}, res};
}

Output cmd_census_poly(const Options& o, const std::string& fs) {
  const auto t = parse_field(o.field);
  const auto f = parse_kpoly(read_argument(fs), t);
  const auto r = proportion(f, t, o.seed);
  Json res = report_json(r);
  res["proportion_fq_agrees"] = proportion_fq(f, t.m(), o.seed).proportion == r.proportion;
  try {
    const auto ex = exhaustive_census(f, t, o.cap, o.seed);
    res["exhaustive"] = {{"total", big(ex.total)}, {"count", big(ex.count)}, {"agrees", ex.ratio() == r.proportion}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    res["exhaustive"] = nullptr;
  }
  return {field_json(t), {{"f", fs}, {"cap", o.cap}}, res};
}

bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_pretty(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object() && v.contains("num") && v.contains("den")) {
      out << pad << it.key() << ": " << scalar(v["num"]) << "/" << scalar(v["den"]) << " (" << scalar(v["decimal"])
          << ")\n";
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_pretty(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_flat_object)) {
      out << pad << it.key() << ":\n";
      std::vector<std::string> cols;
      for (auto c = v[0].begin(); c != v[0].end(); ++c) cols.push_back(c.key());
      std::vector<std::size_t> width;
      for (const auto& c : cols) {
        std::size_t w = c.size();
        for (const auto& row : v) w = std::max(w, row.contains(c) ? scalar(row[c]).size() : 0);
        width.push_back(w);
      }
      out << pad << "  ";
      for (std::size_t i = 0; i < cols.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cols[i];
      out << "\n";
      for (const auto& row : v) {
        out << pad << "  ";
        for (std::size_t i = 0; i < cols.size(); ++i)
          out << std::left << std::setw(static_cast<int>(width[i]) + 2) << (row.contains(cols[i]) ? scalar(row[cols[i]]) : "");
        out << "\n";
      }
    } else {
      out << pad << it.key() << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized rank weights and censuses of M-codes over finite field extensions", "mcodes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "Human-readable tables instead of JSON");
  app.add_flag("--json", o.json, "JSON output (default)");
  app.add_option("--seed", o.seed, "Seed for randomized internals")->capture_default_str();
  app.add_option("--cap", o.cap, "Enumeration cap for oracle and census")->capture_default_str();

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "q=<p>^<e>,m=<m>[,lmod=<poly in y>][,seed=<u64>]")->required();
  };
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ',' (or @file)");
    sub->add_option("--companion", o.companion, "Companion matrix of a polynomial");
    sub->add_option("--blockdiag", o.blockdiag, "Block diagonal of companions, polynomials separated by ';'");
  };

  std::function<Output()> action;

  std::string poly, over = "K";
  auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial over K or L");
  add_field(factor_cmd);
  factor_cmd->add_option("--poly", poly, "Polynomial in x")->required();
  factor_cmd->add_option("--over", over, "K or L")->check(CLI::IsMember({"K", "L"}))->capture_default_str();
  factor_cmd->callback([&] { action = [&] { return cmd_factor(o, poly, over); }; });

  std::string gen;
  std::optional<std::size_t> r;
  bool all = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Generalized rank weights by exhaustive enumeration");
  add_field(oracle_cmd);
  oracle_cmd->add_option("--gen", gen, "Generator matrix over L (or @file)")->required();
  auto* r_opt = oracle_cmd->add_option("--r", r, "Single weight index");
  oracle_cmd->add_flag("--all", all, "Whole hierarchy (default)")->excludes(r_opt);
  oracle_cmd->callback([&] { action = [&] { return cmd_oracle(o, gen, r); }; });

  std::string f, g;
  auto* analyze_cmd = app.add_subcommand("analyze", "Closed forms and bounds for the M-cyclic code C_g, M = C_f");
  add_field(analyze_cmd);
  analyze_cmd->add_option("--f", f, "Polynomial over K")->required();
  analyze_cmd->add_option("--g", g, "Monic divisor of f over L")->required();
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(o, f, g); }; });

  auto* mrd_cmd = app.add_subcommand("mrd-check", "Whether the minimal polynomial is a prime power");
  add_field(mrd_cmd);
  add_matrix(mrd_cmd);
  mrd_cmd->callback([&] { action = [&] { return cmd_mrd(o); }; });

  std::string pk, mode = "primary-cyclic";
  auto* kernel_cmd = app.add_subcommand("kernel-code", "The code ker P(M) and its cyclic components");
  add_field(kernel_cmd);
  add_matrix(kernel_cmd);
  kernel_cmd->add_option("--P", pk, "Polynomial over L")->required();
  kernel_cmd->add_option("--mode", mode, "primary-cyclic or invariant")
      ->check(CLI::IsMember({"primary-cyclic", "invariant"}))
      ->capture_default_str();
  kernel_cmd->callback([&] { action = [&] { return cmd_kernel(o, pk, mode); }; });

  std::uint64_t n = 0, q = 0;
  unsigned m = 1;
  auto* census_cmd = app.add_subcommand("census", "Proportion of M-cyclic codes with first rank weight not 1");
  census_cmd->require_subcommand(1);
  auto* cyc = census_cmd->add_subcommand("cyclic", "Cyclic codes of length n");
  auto* neg = census_cmd->add_subcommand("negacyclic", "Negacyclic codes of odd length n");
  for (auto* sub : {cyc, neg}) {
    sub->add_option("--n", n, "Length")->required();
    sub->add_option("--q", q, "Base field size")->required();
    sub->add_option("--m", m, "Extension degree")->required();
  }
  cyc->callback([&] { action = [&] { return cmd_census_cyclic(n, q, m, false); }; });
  neg->callback([&] { action = [&] { return cmd_census_cyclic(n, q, m, true); }; });
  auto* cpoly = census_cmd->add_subcommand("poly", "Codes stable under the companion of f");
  add_field(cpoly);
  cpoly->add_option("--f", f, "Polynomial over K")->required();
  cpoly->callback([&] { action = [&] { return cmd_census_poly(o, f); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const Output res = action();
    Json doc{{"tool_version", kToolVersion}, {"field", res.field}, {"inputs", res.inputs}, {"results", res.results}};
    if (o.pretty) {
      render_pretty(doc, out, 0);
    } else {
      out << doc.dump(2) << "\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "mcodes: " << e.what() << "\n";
    return kUsageError;
  } catch (const CLI::Error& e) {
    err << "mcodes: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    Json doc{{"tool_version", kToolVersion},
             {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    err << "mcodes: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace mcodes::cli
