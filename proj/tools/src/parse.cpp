#include "parse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace mcodes::cli {

ParseError::ParseError(std::size_t position, std::string expected, std::string_view input)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " + expected + " in '" +
                         std::string(input) + "'"),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

template <class T>
struct Ring {
  std::function<T(std::uint64_t)> from_uint;
  std::function<std::optional<T>(char)> var;
  std::function<T(const T&, const T&)> add, sub, mul;
  std::function<T(const T&)> neg;
  std::function<T(const T&, std::uint64_t)> pow;
};

// expr := [+-] term ([+-] term)* ; term := factor (* factor)* ; factor := atom [^ uint]
// atom := uint | letter | ( expr )
template <class T>
class Parser {
 public:
  Parser(std::string_view text, const Ring<T>& ring) : s_(text), r_(ring) {}

  T parse() {
    T v = expr();
    skip();
    if (i_ != s_.size()) fail("operator or end of input");
    return v;
  }

 private:
  std::string_view s_;
  const Ring<T>& r_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(i_, what, s_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  std::uint64_t uint() {
    skip();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("unsigned integer");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  T expr() {
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    T v = term();
    if (negate) v = r_.neg(v);
    for (;;) {
      if (eat('+')) v = r_.add(v, term());
      else if (eat('-')) v = r_.sub(v, term());
      else return v;
    }
  }

  T term() {
    T v = factor();
    while (eat('*')) v = r_.mul(v, factor());
    return v;
  }

  T factor() {
    T v = atom();
    if (eat('^')) v = r_.pow(v, uint());
    return v;
  }

  T atom() {
    skip();
    if (i_ >= s_.size()) fail("operand");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      T v = expr();
      if (!eat(')')) fail("')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return r_.from_uint(uint());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (auto v = r_.var(c)) {
        ++i_;
        return *v;
      }
      fail("a known variable, not '" + std::string(1, c) + "'");
    }
    fail("operand");
  }
};

template <class T>
T parse_with(std::string_view text, const Ring<T>& ring) {
  return Parser<T>(text, ring).parse();
}

Ring<KElt> kelt_ring(const FieldTower& t) {
  const auto k = t.base;
  Ring<KElt> r;
  r.from_uint = [k](std::uint64_t v) { return k->from_int(static_cast<std::int64_t>(v % k->characteristic())); };
  r.var = [k](char c) -> std::optional<KElt> {
    if (c == 'z' && k->degree() > 1) return k->generator();
    return std::nullopt;
  };
  r.add = [k](KElt a, KElt b) { return k->add(a, b); };
  r.sub = [k](KElt a, KElt b) { return k->sub(a, b); };
  r.mul = [k](KElt a, KElt b) { return k->mul(a, b); };
  r.neg = [k](KElt a) { return k->neg(a); };
  r.pow = [k](KElt a, std::uint64_t e) { return k->pow(a, e); };
  return r;
}

Ring<LElt> lelt_ring(const FieldTower& t) {
  const auto l = t.ext;
  const auto k = t.base;
  Ring<LElt> r;
  r.from_uint = [l, k](std::uint64_t v) { return l->from_int(static_cast<std::int64_t>(v % k->characteristic())); };
  r.var = [l, k](char c) -> std::optional<LElt> {
    if (c == 'w') return l->generator();
    if (c == 'z' && k->degree() > 1) return l->embed(k->generator());
    return std::nullopt;
  };
  r.add = [l](const LElt& a, const LElt& b) { return l->add(a, b); };
  r.sub = [l](const LElt& a, const LElt& b) { return l->sub(a, b); };
  r.mul = [l](const LElt& a, const LElt& b) { return l->mul(a, b); };
  r.neg = [l](const LElt& a) { return l->neg(a); };
  r.pow = [l](const LElt& a, std::uint64_t e) { return l->pow(a, BigInt(e)); };
  return r;
}

template <FiniteField F>
Ring<Poly<F>> poly_ring(const FieldPtr<F>& field, const Ring<typename F::Element>& coeff, char var) {
  Ring<Poly<F>> r;
  r.from_uint = [field, coeff](std::uint64_t v) { return Poly<F>::constant(field, coeff.from_uint(v)); };
  r.var = [field, coeff, var](char c) -> std::optional<Poly<F>> {
    if (c == var) return Poly<F>::x(field);
    if (auto e = coeff.var(c)) return Poly<F>::constant(field, *e);
    return std::nullopt;
  };
  r.add = [](const Poly<F>& a, const Poly<F>& b) { return a + b; };
  r.sub = [](const Poly<F>& a, const Poly<F>& b) { return a - b; };
  r.mul = [](const Poly<F>& a, const Poly<F>& b) { return a * b; };
  r.neg = [](const Poly<F>& a) { return a.scaled(a.field().neg(a.field().one())); };
  r.pow = [](const Poly<F>& a, std::uint64_t e) { return pow(a, static_cast<unsigned>(e)); };
  return r;
}

std::uint64_t parse_u64(std::string_view v, std::size_t offset, std::string_view whole, const char* what) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ParseError(offset, what, whole);
  return out;
}

template <class T, class ParseEntry>
std::vector<std::vector<T>> parse_rows(std::string_view text, ParseEntry entry) {
  std::vector<std::vector<T>> rows;
  std::size_t start = 0;
  auto flush_row = [&](std::size_t end) {
    std::string_view row = text.substr(start, end - start);
    bool blank = row.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) {
      std::vector<T> vals;
      std::size_t cs = 0;
      for (;;) {
        auto ce = row.find(',', cs);
        auto cell = row.substr(cs, ce == std::string_view::npos ? std::string_view::npos : ce - cs);
        try {
          vals.push_back(entry(cell));
        } catch (const ParseError& e) {
          throw ParseError(start + cs + e.position(), e.expected(), text);
        }
        if (ce == std::string_view::npos) break;
        cs = ce + 1;
      }
      rows.push_back(std::move(vals));
    }
    start = end + 1;
  };
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == ';' || text[i] == '\n') flush_row(i);
  flush_row(text.size());
  if (rows.empty()) throw ParseError(0, "at least one matrix row", text);
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() != rows[0].size()) throw ParseError(0, "rows of equal length", text);
  return rows;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  FieldSpec spec;
  bool have_q = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(pos, end - pos);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(pos, "key=value", text);
    auto key = item.substr(0, eq);
    auto val = item.substr(eq + 1);
    const std::size_t vpos = pos + eq + 1;
    if (key == "q") {
      auto caret = val.find('^');
      spec.p = static_cast<unsigned>(parse_u64(val.substr(0, caret), vpos, text, "prime p"));
      if (caret != std::string_view::npos)
        spec.e = static_cast<unsigned>(parse_u64(val.substr(caret + 1), vpos + caret + 1, text, "exponent e"));
      have_q = true;
    } else if (key == "m") {
      spec.m = static_cast<unsigned>(parse_u64(val, vpos, text, "extension degree m"));
    } else if (key == "lmod") {
      spec.lmod = std::string(val);
    } else if (key == "seed") {
      spec.seed = parse_u64(val, vpos, text, "seed");
    } else {
      throw ParseError(pos, "one of q, m, lmod, seed", text);
    }
    pos = end + 1;
  }
  if (!have_q) throw ParseError(0, "q=<p>^<e>", text);
  return spec;
}

FieldTower build_tower(const FieldSpec& spec) {
  if (!spec.lmod) return make_tower(spec.p, spec.e, spec.m, std::nullopt, spec.seed);
  const auto k0 = make_tower(spec.p, spec.e, 1);
  const auto lmod = parse_with(*spec.lmod, poly_ring<BaseField>(k0.base, kelt_ring(k0), 'y'));
  return make_tower(spec.p, spec.e, spec.m, lmod.coeffs(), spec.seed);
}

KPoly parse_kpoly(std::string_view text, const FieldTower& t) {
  return parse_with(text, poly_ring<BaseField>(t.base, kelt_ring(t), 'x'));
}

LPoly parse_lpoly(std::string_view text, const FieldTower& t) {
  return parse_with(text, poly_ring<ExtField>(t.ext, lelt_ring(t), 'x'));
}

KElt parse_kelt(std::string_view text, const FieldTower& t) { return parse_with(text, kelt_ring(t)); }

LElt parse_lelt(std::string_view text, const FieldTower& t) { return parse_with(text, lelt_ring(t)); }

KMat parse_kmat(std::string_view text, const FieldTower& t) {
  auto rows = parse_rows<KElt>(text, [&](std::string_view s) { return parse_kelt(s, t); });
  return KMat::from_rows(t.base, rows, rows[0].size());
}

LMat parse_lmat(std::string_view text, const FieldTower& t) {
  auto rows = parse_rows<LElt>(text, [&](std::string_view s) { return parse_lelt(s, t); });
  return LMat::from_rows(t.ext, rows, rows[0].size());
}

std::string read_argument(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError(1, "a readable file", arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  auto s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

std::string print(const LElt& a, const FieldTower& t) { return t.ext->to_string(a); }

std::string print(KElt a, const FieldTower& t) { return t.base->to_string(a); }

}  // namespace mcodes::cli
