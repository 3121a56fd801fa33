#pragma once

/**
 * Bijection sums over cyclotomic integers.
 *
 * With w a primitive n-th root of unity and w_i = w^{d_i}, the coefficient of
 * prod x_i^{2m-2} in
 *
 *     F = prod_{i<j} (x_i - x_j)(w_i x_i - x_j)(x_i - w_j x_j)(w_i x_i - w_j x_j)
 *
 * is the permanent of the m x m matrix M[i][k] = w_i^k + ... + w_i^{2m-2-k}
 * (permanent2_coefficient). Multiplying each row by (1 - w_i) gives the
 * Vandermonde-derived form with entries w_i^k - w_i^{2m-1-k}
 * (permanent_coefficient). Both are built entry by entry, without division.
 */

#include <fpairs/algebra/cyclotomic.hpp>
#include <fpairs/algebra/integer.hpp>
#include <fpairs/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace fpairs {

template <class T>
using square_matrix = std::vector<std::vector<T>>;

// Sum over all permutations; the reference route.
template <class T>
T permanent_naive(const square_matrix<T>& M, const T& zero) {
  const std::size_t m = M.size();
  if (m == 0) throw invalid_argument("permanent of an empty matrix");
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    T prod = M[0][perm[0]];
    for (std::size_t i = 1; i < m; ++i) prod = prod * M[i][perm[i]];
    total = total + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Ryser inclusion-exclusion: perm(M) = (-1)^m sum_S (-1)^{|S|} prod_i sum_{k in S} M[i][k],
// with subsets visited in Gray-code order so each step updates one column.
template <class T>
T permanent_ryser(const square_matrix<T>& M, const T& zero) {
  const std::size_t m = M.size();
  if (m == 0) throw invalid_argument("permanent of an empty matrix");
  if (m >= 63) throw invalid_argument("matrix too large for Ryser expansion");
  std::vector<T> row_sums(m, zero);
  T total = zero;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
    const auto col = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t next = gray ^ (std::uint64_t{1} << col);
    const bool added = next & (std::uint64_t{1} << col);
    for (std::size_t i = 0; i < m; ++i) {
      if (added)
        row_sums[i] += M[i][col];
      else
        row_sums[i] -= M[i][col];
    }
    gray = next;
    T prod = row_sums[0];
    for (std::size_t i = 1; i < m; ++i) prod = prod * row_sums[i];
    const bool negative = (m - static_cast<std::size_t>(std::popcount(gray))) % 2 == 1;
    if (negative)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

template <class T>
T permanent(const square_matrix<T>& M, const T& zero) {
  return M.size() <= 8 ? permanent_naive(M, zero) : permanent_ryser(M, zero);
}

namespace detail {

inline void validate_cyclo_instance(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  if (n < 2) throw invalid_instance("n must be >= 2");
  if (d.empty()) throw invalid_instance("need at least one difference");
  for (auto v : d)
    if (std::gcd(v % n, n) != 1) throw invalid_instance(std::to_string(v) + " is not a unit mod " + std::to_string(n));
}

}  // namespace detail

// M[i][k] = w_i^k + w_i^{k+1} + ... + w_i^{2m-2-k}
inline square_matrix<cyclo_int> permanent2_matrix(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  const std::size_t m = d.size();
  square_matrix<cyclo_int> M(m, std::vector<cyclo_int>(m, cyclo_int(n)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t e = k; e + k <= 2 * m - 2; ++e)
        M[i][k].add_monomial(static_cast<std::int64_t>((d[i] % n) * e % n), 1);
  return M;
}

// M[i][k] = w_i^k - w_i^{2m-1-k}
inline square_matrix<cyclo_int> permanent_matrix(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  const std::size_t m = d.size();
  square_matrix<cyclo_int> M(m, std::vector<cyclo_int>(m, cyclo_int(n)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      M[i][k].add_monomial(static_cast<std::int64_t>((d[i] % n) * k % n), 1);
      M[i][k].add_monomial(static_cast<std::int64_t>((d[i] % n) * (2 * m - 1 - k) % n), -1);
    }
  }
  return M;
}

inline cyclo_int permanent2_coefficient(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  detail::validate_cyclo_instance(n, d);
  return permanent(permanent2_matrix(n, d), cyclo_int(n));
}

inline cyclo_int permanent_coefficient(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  detail::validate_cyclo_instance(n, d);
  return permanent(permanent_matrix(n, d), cyclo_int(n));
}

// prod_i (1 - w_i)
inline cyclo_int unit_factor_product(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  cyclo_int r = cyclo_int::constant(n, 1);
  for (auto v : d) {
    cyclo_int f = cyclo_int::constant(n, 1);
    f.add_monomial(static_cast<std::int64_t>(v % n), -1);
    r = r * f;
  }
  return r;
}

struct prime_certificate {
  big_int value_at_one;    // permanent2 evaluated at w_i = 1
  big_int expected;        // m! (2m-1)!!
  bool matches_expected = false;
  bool nonzero = false;    // value_at_one not divisible by p, hence coefficient != 0 in Z[w]
};

// Setting w = 1 turns every entry into 2m - 1 - 2k; if the resulting integer
// is not divisible by p the coefficient cannot vanish, since vanishing at a
// primitive p-th root forces p | f(1).
inline prime_certificate prime_nonzero_certificate(std::uint64_t p, const std::vector<std::uint64_t>& d) {
  if (p < 3 || !is_prime(p)) throw invalid_instance("p must be an odd prime");
  const std::size_t m = (p - 1) / 2;
  if (d.size() != m) throw invalid_instance("expected m = (p-1)/2 = " + std::to_string(m) + " differences");
  prime_certificate c;
  c.value_at_one = cyclo_eval_at_one(permanent2_coefficient(p, d));
  c.expected = factorial(m) * odd_double_factorial(m);
  c.matches_expected = c.value_at_one == c.expected;
  c.nonzero = c.value_at_one % p != 0;
  return c;
}

// The implication "f(w) = 0 implies p | f(1)" for one integer polynomial f.
inline bool divisibility_lemma_check(const int_poly& f, std::uint64_t p) {
  if (!is_prime(p)) throw invalid_argument("p must be prime");
  const cyclo_int fw(p, f);
  if (!cyclo_is_zero(fw)) return true;
  return eval_at_one(f) % p == 0;
}

}  // namespace fpairs
