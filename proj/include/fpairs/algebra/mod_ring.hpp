#pragma once

/**
 * Residue rings Z/(n).
 *
 * A mod_ring is an immutable handle carrying the modulus; mod_elem values
 * remember the modulus they were created under and refuse to combine with
 * elements of a different ring. With a prime modulus the ring is F_p.
 *
 * mod_ring also models the coefficient-ring interface used by the
 * polynomial layer (zero/one/add/mul/inverse/...).
 */

#include <fpairs/algebra/integer.hpp>
#include <fpairs/errors.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

namespace fpairs {

struct mod_elem {
  std::uint64_t modulus = 0;
  std::uint64_t value = 0;

  friend bool operator==(const mod_elem&, const mod_elem&) = default;
  friend auto operator<=>(const mod_elem&, const mod_elem&) = default;

  friend std::ostream& operator<<(std::ostream& os, const mod_elem& a) {
    return os << a.value;
  }
};

namespace detail {

inline void require_same_modulus(const mod_elem& a, const mod_elem& b) {
  if (a.modulus != b.modulus)
    throw ring_mismatch("Z/(" + std::to_string(a.modulus) + ") vs Z/(" +
                        std::to_string(b.modulus) + ")");
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

}  // namespace detail

inline mod_elem operator+(const mod_elem& a, const mod_elem& b) {
  detail::require_same_modulus(a, b);
  std::uint64_t s = a.value + b.value;
  if (s >= a.modulus) s -= a.modulus;
  return {a.modulus, s};
}

inline mod_elem operator-(const mod_elem& a, const mod_elem& b) {
  detail::require_same_modulus(a, b);
  return {a.modulus, a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value};
}

inline mod_elem operator-(const mod_elem& a) {
  return {a.modulus, a.value == 0 ? 0 : a.modulus - a.value};
}

inline mod_elem operator*(const mod_elem& a, const mod_elem& b) {
  detail::require_same_modulus(a, b);
  return {a.modulus, detail::mulmod(a.value, b.value, a.modulus)};
}

inline mod_elem& operator+=(mod_elem& a, const mod_elem& b) { return a = a + b; }
inline mod_elem& operator-=(mod_elem& a, const mod_elem& b) { return a = a - b; }
inline mod_elem& operator*=(mod_elem& a, const mod_elem& b) { return a = a * b; }

// Inverse via the extended Euclidean algorithm; throws not_invertible when
// gcd(a, n) > 1.
inline mod_elem mod_inverse(const mod_elem& a) {
  using i128 = __int128;
  i128 old_r = static_cast<i128>(a.value), r = static_cast<i128>(a.modulus);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 || a.modulus == 1)
    throw not_invertible(std::to_string(a.value) + " mod " + std::to_string(a.modulus));
  i128 n = static_cast<i128>(a.modulus);
  i128 inv = ((old_s % n) + n) % n;
  return {a.modulus, static_cast<std::uint64_t>(inv)};
}

inline mod_elem pow(mod_elem base, std::uint64_t e) {
  mod_elem r{base.modulus, 1 % base.modulus};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

class mod_ring {
 public:
  using value_type = mod_elem;

  explicit mod_ring(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw invalid_argument("modulus must be >= 2, got " + std::to_string(modulus));
    if (modulus >= (std::uint64_t{1} << 62)) throw invalid_argument("modulus too large");
  }

  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const { return is_prime(modulus_); }

  mod_elem operator()(std::int64_t v) const { return from_integer(v); }

  mod_elem from_integer(std::int64_t v) const {
    auto n = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % n;
    if (r < 0) r += n;
    return {modulus_, static_cast<std::uint64_t>(r)};
  }
  mod_elem from_integer(const big_int& v) const { return {modulus_, mod_reduce(v, modulus_)}; }

  mod_elem zero() const { return {modulus_, 0}; }
  mod_elem one() const { return {modulus_, 1}; }
  mod_elem add(const mod_elem& a, const mod_elem& b) const { return check(a) + check(b); }
  mod_elem sub(const mod_elem& a, const mod_elem& b) const { return check(a) - check(b); }
  mod_elem mul(const mod_elem& a, const mod_elem& b) const { return check(a) * check(b); }
  mod_elem neg(const mod_elem& a) const { return -check(a); }
  bool is_zero(const mod_elem& a) const { return check(a).value == 0; }

  std::optional<mod_elem> inverse(const mod_elem& a) const {
    if (std::gcd(check(a).value, modulus_) != 1) return std::nullopt;
    return mod_inverse(a);
  }

  // a / b when the quotient is unique, i.e. when b is a unit.
  std::optional<mod_elem> divide_exact(const mod_elem& a, const mod_elem& b) const {
    auto inv = inverse(b);
    if (!inv) return std::nullopt;
    return check(a) * *inv;
  }

  std::string to_string(const mod_elem& a) const { return std::to_string(check(a).value); }
  mod_elem parse(const std::string& s) const { return from_integer(big_int(s)); }
  std::string name() const { return "Z/(" + std::to_string(modulus_) + ")"; }

  friend bool operator==(const mod_ring&, const mod_ring&) = default;

 private:
  const mod_elem& check(const mod_elem& a) const {
    if (a.modulus != modulus_)
      throw ring_mismatch("element of Z/(" + std::to_string(a.modulus) + ") used in " + name());
    return a;
  }

  std::uint64_t modulus_;
};

// (md)! / (d!)^m over the integers, then reduced mod n.
inline mod_elem factorial_quotient_mod(std::uint64_t m, std::uint64_t d, std::uint64_t n) {
  if (m == 0 || d == 0) throw invalid_argument("factorial_quotient_mod needs m, d >= 1");
  big_int q = factorial(m * d);
  big_int den = pow(factorial(d), static_cast<unsigned>(m));
  q /= den;
  return mod_ring(n).from_integer(q);
}

}  // namespace fpairs
