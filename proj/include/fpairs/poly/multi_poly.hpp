#pragma once

/**
 * Sparse exact multivariate polynomials over a pluggable coefficient ring.
 *
 * Terms live in a std::map keyed by exponent vector, so iteration (and
 * therefore serialization) is in lexicographic exponent order. Zero
 * coefficients are never stored.
 *
 * Every product checks a predicted term count against an expansion budget
 * before doing any work and throws budget_exceeded when it would not fit.
 */

#include <fpairs/errors.hpp>
#include <fpairs/poly/rings.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fpairs {

using exponent = std::vector<std::uint32_t>;

struct expansion_budget {
  std::uint64_t max_terms = 10'000'000;
};

namespace detail {

// Number of monomials of total degree <= deg in n variables, saturated.
inline std::uint64_t monomials_up_to(std::uint64_t n, std::uint64_t deg) {
  // C(deg + n, n)
  long double r = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    r = r * static_cast<long double>(deg + i) / static_cast<long double>(i);
    if (r > 1e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace detail

template <coefficient_ring R>
class multi_poly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;
  using term_map = std::map<exponent, value_type>;

  multi_poly(R ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity) {}

  static multi_poly constant(R ring, std::size_t arity, const value_type& c) {
    multi_poly f(std::move(ring), arity);
    f.add_term(exponent(arity, 0), c);
    return f;
  }
  static multi_poly one(R ring, std::size_t arity) {
    auto c = ring.one();
    return constant(std::move(ring), arity, c);
  }
  // x_i, 0-based
  static multi_poly variable(R ring, std::size_t arity, std::size_t i) {
    if (i >= arity) throw arity_mismatch("variable index out of range");
    exponent e(arity, 0);
    e[i] = 1;
    multi_poly f(ring, arity);
    f.add_term(std::move(e), ring.one());
    return f;
  }

  const R& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::uint64_t total_degree() const {
    std::uint64_t deg = 0;
    for (const auto& [e, c] : terms_)
      deg = std::max<std::uint64_t>(deg, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
    return deg;
  }
  std::uint64_t degree_bound() const { return total_degree(); }

  void add_term(exponent e, const value_type& c) {
    check_exponent(e);
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  value_type coefficient(const exponent& e) const {
    check_exponent(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  value_type eval(std::span<const value_type> point) const {
    if (point.size() != arity_)
      throw arity_mismatch("point of length " + std::to_string(point.size()) + " for arity " +
                           std::to_string(arity_));
    value_type sum = ring_.zero();
    for (const auto& [e, c] : terms_) {
      value_type t = c;
      for (std::size_t i = 0; i < arity_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) t = ring_.mul(t, point[i]);
      sum = ring_.add(sum, t);
    }
    return sum;
  }
  value_type eval(const std::vector<value_type>& point) const {
    return eval(std::span<const value_type>(point));
  }

  multi_poly& operator+=(const multi_poly& b) {
    require_compatible(b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  multi_poly& operator-=(const multi_poly& b) {
    require_compatible(b);
    for (const auto& [e, c] : b.terms_) add_term(e, ring_.neg(c));
    return *this;
  }
  friend multi_poly operator+(multi_poly a, const multi_poly& b) { return a += b; }
  friend multi_poly operator-(multi_poly a, const multi_poly& b) { return a -= b; }
  friend multi_poly operator*(const multi_poly& a, const multi_poly& b) { return multiply(a, b, {}); }

  multi_poly scaled(const value_type& c) const {
    multi_poly r(ring_, arity_);
    for (const auto& [e, v] : terms_) r.add_term(e, ring_.mul(v, c));
    return r;
  }

  static multi_poly multiply(const multi_poly& a, const multi_poly& b, expansion_budget budget) {
    a.require_compatible(b);
    const auto predicted =
        std::min(detail::saturating_mul(a.term_count(), b.term_count()),
                 detail::monomials_up_to(a.arity_, a.total_degree() + b.total_degree()));
    if (predicted > budget.max_terms)
      throw budget_exceeded("product may reach " + std::to_string(predicted) + " terms (budget " +
                            std::to_string(budget.max_terms) + ")");
    multi_poly r(a.ring_, a.arity_);
    exponent e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, a.ring_.mul(ca, cb));
      }
    }
    return r;
  }

  multi_poly pow(std::uint32_t k, expansion_budget budget = {}) const {
    multi_poly r = one(ring_, arity_);
    for (std::uint32_t i = 0; i < k; ++i) r = multiply(r, *this, budget);
    return r;
  }

  friend bool operator==(const multi_poly&, const multi_poly&) = default;

 private:
  void check_exponent(const exponent& e) const {
    if (e.size() != arity_)
      throw arity_mismatch("exponent of length " + std::to_string(e.size()) + " for arity " +
                           std::to_string(arity_));
  }
  void require_compatible(const multi_poly& b) const {
    if (arity_ != b.arity_)
      throw arity_mismatch(std::to_string(arity_) + " vs " + std::to_string(b.arity_));
    if (!(ring_ == b.ring_)) throw ring_mismatch(ring_.name() + " vs " + b.ring_.name());
  }

  R ring_;
  std::size_t arity_;
  term_map terms_;
};

template <coefficient_ring R>
multi_poly<R> poly_mul(const multi_poly<R>& a, const multi_poly<R>& b, expansion_budget budget = {}) {
  return multi_poly<R>::multiply(a, b, budget);
}

template <coefficient_ring R>
typename R::value_type coefficient(const multi_poly<R>& f, const exponent& e) {
  return f.coefficient(e);
}

// prod_{i<j} (x_i - x_j)^{e[i][j]}; only the strict upper triangle of e is read.
template <coefficient_ring R>
multi_poly<R> difference_product(const R& ring, std::size_t n,
                                 const std::vector<std::vector<std::uint32_t>>& e,
                                 expansion_budget budget = {}) {
  if (e.size() < n) throw arity_mismatch("exponent matrix smaller than arity");
  auto result = multi_poly<R>::one(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint32_t k = e[i].size() > j ? e[i][j] : 0;
      if (k == 0) continue;
      // binomial expansion of (x_i - x_j)^k
      multi_poly<R> power(ring, n);
      for (std::uint32_t r = 0; r <= k; ++r) {
        exponent ex(n, 0);
        ex[i] = k - r;
        ex[j] = r;
        auto c = ring.from_integer(binomial(k, r));
        power.add_term(std::move(ex), r % 2 ? ring.neg(c) : c);
      }
      result = poly_mul(result, power, budget);
    }
  }
  return result;
}

// Convenience for the uniform case prod_{i<j} (x_i - x_j)^k.
template <coefficient_ring R>
multi_poly<R> difference_product(const R& ring, std::size_t n, std::uint32_t k, expansion_budget budget = {}) {
  return difference_product(ring, n, std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(n, k)),
                            budget);
}

}  // namespace fpairs
