#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Rng = std::mt19937_64;

/// Requirements shared by the base field K and the extension L. Elements are
/// plain values; all arithmetic goes through the owning field object.
template <class F>
concept FiniteField = requires(const F& f, const typename F::Element& a, Rng& rng,
                               std::int64_t n, std::uint64_t idx) {
  typename F::Element;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.pth_root(a) } -> std::same_as<typename F::Element>;
  { f.random(rng) } -> std::same_as<typename F::Element>;
  { f.element(idx) } -> std::same_as<typename F::Element>;
  { f.order() } -> std::convertible_to<const BigInt&>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { a == a } -> std::convertible_to<bool>;
  { a < a } -> std::convertible_to<bool>;
};

template <class F>
using FieldPtr = std::shared_ptr<const F>;

}  // namespace mcodes
