#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcodes/gf.hpp"
#include "mcodes/matmod.hpp"

namespace mcodes::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string_view input);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

struct FieldSpec {
  unsigned p = 0;
  unsigned e = 1;
  unsigned m = 1;
  std::optional<std::string> lmod;
  std::uint64_t seed = 0;
};

/// `q=<p>^<e>,m=<m>[,lmod=<poly in y>][,seed=<u64>]`
FieldSpec parse_field_spec(std::string_view text);
FieldTower build_tower(const FieldSpec& spec);
inline FieldTower parse_field(std::string_view text) { return build_tower(parse_field_spec(text)); }

/// Polynomials in x. Coefficients may use `z` (generator of K when e > 1) and,
/// over L, `w`; e.g. `(4*w^2+5)*x+1`.
KPoly parse_kpoly(std::string_view text, const FieldTower& t);
LPoly parse_lpoly(std::string_view text, const FieldTower& t);
KElt parse_kelt(std::string_view text, const FieldTower& t);
LElt parse_lelt(std::string_view text, const FieldTower& t);

/// Rows separated by `;` or newlines, entries by `,`.
KMat parse_kmat(std::string_view text, const FieldTower& t);
LMat parse_lmat(std::string_view text, const FieldTower& t);

/// Contents of `@path` arguments, the text itself otherwise.
std::string read_argument(const std::string& arg);

std::string print(const LElt& a, const FieldTower& t);
std::string print(KElt a, const FieldTower& t);

}  // namespace mcodes::cli
