#pragma once

// Exact integer helpers on top of Boost.Multiprecision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

namespace fpairs {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

inline big_int factorial(std::uint64_t n) {
  big_int r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline big_int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  big_int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// (a_1 + ... + a_n)! / (a_1! ... a_n!), built as a product of binomials.
inline big_int multinomial(std::span<const std::uint64_t> parts) {
  big_int r = 1;
  std::uint64_t total = 0;
  for (auto a : parts) {
    total += a;
    r *= binomial(total, a);
  }
  return r;
}

// (2k-1)!! = 1 * 3 * ... * (2k-1); 1 for k = 0.
inline big_int odd_double_factorial(std::uint64_t k) {
  big_int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r *= 2 * i - 1;
  return r;
}

inline std::uint64_t mod_reduce(const big_int& v, std::uint64_t n) {
  big_int r = v % n;
  if (r < 0) r += n;
  return r.convert_to<std::uint64_t>();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline std::string to_string(const big_int& v) { return v.str(); }

}  // namespace fpairs
