#pragma once

/**
 * The Dyson constant-term identity, three ways.
 *
 * The constant term of prod_{i != j} (1 - x_i/x_j)^{a_i} equals the
 * coefficient of prod x_i^{a - a_i} in
 *
 *     f = prod_{i<j} (-1)^{a_j} (x_j - x_i)^{a_i + a_j},     a = sum a_i,
 *
 * and that coefficient is the multinomial a! / (a_1! ... a_n!).
 *
 *  - dyson_formula:        the multinomial.
 *  - dyson_bruteforce:     expands f and reads the coefficient (independent oracle).
 *  - dyson_via_evaluation: Nullstellensatz on the grids A_i = {0..a-a_i} with the
 *                          lower-order modification C_ij(x) = prod_{s=-a_i+1}^{a_j}(x_j - x_i + s),
 *                          which is nonzero only at x_i = beta_i = a_1 + ... + a_{i-1}.
 *
 * All three return exact integers.
 */

#include <fpairs/algebra/integer.hpp>
#include <fpairs/errors.hpp>
#include <fpairs/poly/multi_poly.hpp>
#include <fpairs/poly/rings.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace fpairs {

class dyson_instance {
 public:
  explicit dyson_instance(std::vector<std::uint64_t> a) : a_(std::move(a)) {
    if (a_.empty()) throw invalid_argument("Dyson instance needs at least one exponent");
    for (auto v : a_)
      if (v == 0) throw invalid_argument("Dyson exponents must be positive");
  }

  std::size_t size() const { return a_.size(); }
  const std::vector<std::uint64_t>& exponents() const { return a_; }
  std::uint64_t operator[](std::size_t i) const { return a_[i]; }
  std::uint64_t total() const { return std::accumulate(a_.begin(), a_.end(), std::uint64_t{0}); }

  // sum over pairs i<j of (a_i + a_j): the total degree of f
  std::uint64_t pair_degree() const { return (size() - 1) * total(); }

 private:
  std::vector<std::uint64_t> a_;
};

inline big_int dyson_formula(const dyson_instance& inst) { return multinomial(inst.exponents()); }

// Expands f exactly; refuses instances whose total degree exceeds max_degree.
inline big_int dyson_bruteforce(const dyson_instance& inst, std::uint64_t max_degree = 24,
                                expansion_budget budget = {}) {
  if (inst.pair_degree() > max_degree)
    throw budget_exceeded("Dyson expansion of degree " + std::to_string(inst.pair_degree()) +
                          " exceeds limit " + std::to_string(max_degree));
  const std::size_t n = inst.size();
  const integer_ring Z;
  // (x_j - x_i)^{a_i + a_j} = (-1)^{a_i + a_j} (x_i - x_j)^{a_i + a_j}
  std::vector<std::vector<std::uint32_t>> e(n, std::vector<std::uint32_t>(n, 0));
  std::uint64_t sign_exp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      e[i][j] = static_cast<std::uint32_t>(inst[i] + inst[j]);
      sign_exp += inst[j] + inst[i] + inst[j];
    }
  }
  const auto f = difference_product(Z, n, e, budget);
  exponent target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<std::uint32_t>(inst.total() - inst[i]);
  big_int c = f.coefficient(target);
  return sign_exp % 2 ? big_int(-c) : c;
}

namespace detail {
inline std::uint64_t segment_sum(const dyson_instance& inst, std::size_t from, std::size_t to) {
  std::uint64_t s = 0;
  for (std::size_t k = from; k < to; ++k) s += inst[k];
  return s;
}
}  // namespace detail

// C_ij(beta) for i < j: (a_i + ... + a_j)! / (a_{i+1} + ... + a_{j-1})!
inline big_int dyson_modified_factor_at_beta(const dyson_instance& inst, std::size_t i, std::size_t j) {
  return factorial(detail::segment_sum(inst, i, j + 1)) / factorial(detail::segment_sum(inst, i + 1, j));
}

// phi_i'(beta_i) = (-1)^{a_{i+1} + ... + a_n} (a_1 + ... + a_{i-1})! (a_{i+1} + ... + a_n)!
inline big_int dyson_phi_derivative_at_beta(const dyson_instance& inst, std::size_t i) {
  const auto before = detail::segment_sum(inst, 0, i);
  const auto after = detail::segment_sum(inst, i + 1, inst.size());
  big_int v = factorial(before) * factorial(after);
  return after % 2 ? big_int(-v) : v;
}

inline big_int dyson_via_evaluation(const dyson_instance& inst) {
  const std::size_t n = inst.size();
  big_int num = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= dyson_modified_factor_at_beta(inst, i, j);
      if (inst[j] % 2) num = -num;
    }
  }
  big_int den = 1;
  for (std::size_t i = 0; i < n; ++i) den *= dyson_phi_derivative_at_beta(inst, i);
  if (num % den != 0) throw std::logic_error("Dyson evaluation quotient is not integral");
  return num / den;
}

// Coefficient of (x_1 ... x_m)^{(m-1)d} in prod_{i<j} (x_i - x_j)^{2d}:
// (-1)^{d m(m-1)/2} (md)! / (d!)^m.
inline big_int packing_coefficient(std::uint64_t m, std::uint64_t d) {
  if (m == 0 || d == 0) throw invalid_argument("packing_coefficient needs m, d >= 1");
  big_int v = factorial(m * d) / pow(factorial(d), static_cast<unsigned>(m));
  return (d * (m * (m - 1) / 2)) % 2 ? big_int(-v) : v;
}

}  // namespace fpairs
