#pragma once

// Coefficient rings for the polynomial layer. A ring is a small value that
// performs the arithmetic; polynomials remember which ring they live in and
// refuse to mix with polynomials over another ring.

#include <fpairs/algebra/integer.hpp>
#include <fpairs/algebra/mod_ring.hpp>

#include <concepts>
#include <optional>
#include <string>

namespace fpairs {

template <class R>
concept coefficient_ring =
    std::equality_comparable<R> && std::equality_comparable<typename R::value_type> &&
    requires(const R& r, const typename R::value_type& a, std::int64_t k, const big_int& big,
             const std::string& s) {
      { r.zero() } -> std::same_as<typename R::value_type>;
      { r.one() } -> std::same_as<typename R::value_type>;
      { r.from_integer(k) } -> std::same_as<typename R::value_type>;
      { r.from_integer(big) } -> std::same_as<typename R::value_type>;
      { r.add(a, a) } -> std::same_as<typename R::value_type>;
      { r.sub(a, a) } -> std::same_as<typename R::value_type>;
      { r.mul(a, a) } -> std::same_as<typename R::value_type>;
      { r.neg(a) } -> std::same_as<typename R::value_type>;
      { r.is_zero(a) } -> std::same_as<bool>;
      { r.inverse(a) } -> std::same_as<std::optional<typename R::value_type>>;
      { r.divide_exact(a, a) } -> std::same_as<std::optional<typename R::value_type>>;
      { r.to_string(a) } -> std::same_as<std::string>;
      { r.parse(s) } -> std::same_as<typename R::value_type>;
      { r.name() } -> std::same_as<std::string>;
    };

struct integer_ring {
  using value_type = big_int;

  big_int zero() const { return 0; }
  big_int one() const { return 1; }
  big_int from_integer(std::int64_t v) const { return v; }
  big_int from_integer(const big_int& v) const { return v; }
  big_int add(const big_int& a, const big_int& b) const { return a + b; }
  big_int sub(const big_int& a, const big_int& b) const { return a - b; }
  big_int mul(const big_int& a, const big_int& b) const { return a * b; }
  big_int neg(const big_int& a) const { return -a; }
  bool is_zero(const big_int& a) const { return a == 0; }
  std::optional<big_int> inverse(const big_int& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  std::optional<big_int> divide_exact(const big_int& a, const big_int& b) const {
    if (b == 0 || a % b != 0) return std::nullopt;
    return a / b;
  }
  std::string to_string(const big_int& a) const { return a.str(); }
  big_int parse(const std::string& s) const { return big_int(s); }
  std::string name() const { return "Z"; }

  friend bool operator==(const integer_ring&, const integer_ring&) = default;
};

struct rational_ring {
  using value_type = big_rational;

  big_rational zero() const { return 0; }
  big_rational one() const { return 1; }
  big_rational from_integer(std::int64_t v) const { return v; }
  big_rational from_integer(const big_int& v) const { return big_rational(v); }
  big_rational add(const big_rational& a, const big_rational& b) const { return a + b; }
  big_rational sub(const big_rational& a, const big_rational& b) const { return a - b; }
  big_rational mul(const big_rational& a, const big_rational& b) const { return a * b; }
  big_rational neg(const big_rational& a) const { return -a; }
  bool is_zero(const big_rational& a) const { return a == 0; }
  std::optional<big_rational> inverse(const big_rational& a) const {
    if (a == 0) return std::nullopt;
    return big_rational(1) / a;
  }
  std::optional<big_rational> divide_exact(const big_rational& a, const big_rational& b) const {
    if (b == 0) return std::nullopt;
    return a / b;
  }
  std::string to_string(const big_rational& a) const { return a.str(); }
  big_rational parse(const std::string& s) const { return big_rational(s); }
  std::string name() const { return "Q"; }

  friend bool operator==(const rational_ring&, const rational_ring&) = default;
};

static_assert(coefficient_ring<integer_ring>);
static_assert(coefficient_ring<rational_ring>);
static_assert(coefficient_ring<mod_ring>);

}  // namespace fpairs
