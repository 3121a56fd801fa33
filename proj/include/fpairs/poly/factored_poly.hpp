#pragma once

// Polynomials kept as an unexpanded product of affine factors
// c_0 + sum_i c_i x_i. Evaluation costs one pass over the factors, which is
// what grid sums need; expansion is explicit and budget-guarded.

#include <fpairs/poly/multi_poly.hpp>

#include <span>
#include <utility>
#include <vector>

namespace fpairs {

template <coefficient_ring R>
struct affine_factor {
  using value_type = typename R::value_type;
  std::vector<std::pair<std::size_t, value_type>> linear;  // (variable, coefficient)
  value_type constant;

  // x_i + shift
  static affine_factor variable(const R& ring, std::size_t i, value_type shift) {
    return {{{i, ring.one()}}, std::move(shift)};
  }
  // x_i - x_j + shift
  static affine_factor difference(const R& ring, std::size_t i, std::size_t j, value_type shift) {
    return {{{i, ring.one()}, {j, ring.neg(ring.one())}}, std::move(shift)};
  }
};

template <coefficient_ring R>
class factored_poly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;
  using factor = affine_factor<R>;

  factored_poly(R ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity), scalar_(ring_.one()) {}
  factored_poly(R ring, std::size_t arity, std::vector<factor> factors)
      : factored_poly(std::move(ring), arity) {
    for (auto& f : factors) push(std::move(f));
  }

  const R& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const std::vector<factor>& factors() const { return factors_; }
  const value_type& scalar() const { return scalar_; }

  void push(factor f) {
    for (const auto& [i, c] : f.linear)
      if (i >= arity_) throw arity_mismatch("factor references variable " + std::to_string(i));
    factors_.push_back(std::move(f));
  }
  void scale(const value_type& c) { scalar_ = ring_.mul(scalar_, c); }

  // Sum of factor degrees; an upper bound on the total degree read off
  // without expanding.
  std::uint64_t degree_bound() const {
    std::uint64_t deg = 0;
    for (const auto& f : factors_) {
      bool linear = false;
      for (const auto& [i, c] : f.linear) linear = linear || !ring_.is_zero(c);
      deg += linear ? 1 : 0;
    }
    return deg;
  }

  value_type eval(std::span<const value_type> point) const {
    if (point.size() != arity_) throw arity_mismatch("point length does not match arity");
    value_type r = scalar_;
    for (const auto& f : factors_) {
      value_type v = f.constant;
      for (const auto& [i, c] : f.linear) v = ring_.add(v, ring_.mul(c, point[i]));
      if (ring_.is_zero(v)) return ring_.zero();
      r = ring_.mul(r, v);
    }
    return r;
  }
  value_type eval(const std::vector<value_type>& point) const {
    return eval(std::span<const value_type>(point));
  }

  multi_poly<R> expand(expansion_budget budget = {}) const {
    auto r = multi_poly<R>::constant(ring_, arity_, scalar_);
    for (const auto& f : factors_) {
      multi_poly<R> lin(ring_, arity_);
      lin.add_term(exponent(arity_, 0), f.constant);
      for (const auto& [i, c] : f.linear) {
        exponent e(arity_, 0);
        e[i] = 1;
        lin.add_term(std::move(e), c);
      }
      r = poly_mul(r, lin, budget);
    }
    return r;
  }

 private:
  R ring_;
  std::size_t arity_;
  value_type scalar_;
  std::vector<factor> factors_;
};

template <coefficient_ring R>
multi_poly<R> product_of_affine_factors(const R& ring, std::size_t arity,
                                        std::vector<affine_factor<R>> factors, expansion_budget budget = {}) {
  return factored_poly<R>(ring, arity, std::move(factors)).expand(budget);
}

// Anything a grid sum can consume: both multi_poly and factored_poly.
template <class P>
concept evaluable_poly = requires(const P& f, std::span<const typename P::value_type> pt) {
  typename P::ring_type;
  { f.arity() } -> std::convertible_to<std::size_t>;
  { f.degree_bound() } -> std::convertible_to<std::uint64_t>;
  { f.eval(pt) } -> std::same_as<typename P::value_type>;
  { f.ring() };
};

}  // namespace fpairs
