#pragma once

/**
 * Combinatorial Nullstellensatz machinery.
 *
 * For grids A_1 x ... x A_n with |A_i| = c_i + 1 and phi_i(x) = prod_{a in A_i}(x - a),
 * the coefficient of x_1^{c_1} ... x_n^{c_n} in any f with deg f <= sum c_i is
 *
 *     C = sum_{alpha in grid} f(alpha) / (phi_1'(alpha_1) ... phi_n'(alpha_n)).
 *
 * Over rings where some phi_i'(alpha_i) is not a unit the same identity holds
 * after clearing denominators; cn_coefficient_fraction returns that form and
 * cn_coefficient attempts the final exact division.
 *
 * All sums evaluate f point by point, so factored_poly inputs never expand.
 */

#include <fpairs/errors.hpp>
#include <fpairs/poly/factored_poly.hpp>
#include <fpairs/poly/multi_poly.hpp>
#include <fpairs/util/parallel.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpairs {

template <coefficient_ring R>
class grid_spec {
 public:
  using value_type = typename R::value_type;

  grid_spec(const R& ring, std::vector<std::vector<value_type>> sets) : sets_(std::move(sets)) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (sets_[i].empty()) throw invalid_argument("grid set A_" + std::to_string(i + 1) + " is empty");
      for (std::size_t a = 0; a < sets_[i].size(); ++a)
        for (std::size_t b = a + 1; b < sets_[i].size(); ++b)
          if (ring.is_zero(ring.sub(sets_[i][a], sets_[i][b])))
            throw invalid_argument("grid set A_" + std::to_string(i + 1) + " has repeated elements");
    }
  }

  std::size_t dims() const { return sets_.size(); }
  const std::vector<std::vector<value_type>>& sets() const { return sets_; }
  const std::vector<value_type>& operator[](std::size_t i) const { return sets_[i]; }

  // (c_1, ..., c_n) with c_i = |A_i| - 1
  exponent target() const {
    exponent e;
    for (const auto& s : sets_) e.push_back(static_cast<std::uint32_t>(s.size() - 1));
    return e;
  }
  std::uint64_t degree_sum() const {
    std::uint64_t s = 0;
    for (const auto& a : sets_) s += a.size() - 1;
    return s;
  }

 private:
  std::vector<std::vector<value_type>> sets_;
};

template <coefficient_ring R>
struct cn_fraction {
  typename R::value_type numerator;
  typename R::value_type denominator;
};

namespace detail {

// Visits the grid points whose first coordinate index lies in
// [first_begin, first_end), in lexicographic index order. The visitor
// returns false to stop.
template <class V, class Visit>
bool for_each_grid_point(const std::vector<std::vector<V>>& sets, std::size_t first_begin,
                         std::size_t first_end, Visit&& visit) {
  const std::size_t n = sets.size();
  if (n == 0) return visit(std::vector<V>{}, std::vector<std::size_t>{});
  std::vector<std::size_t> idx(n, 0);
  idx[0] = first_begin;
  if (first_begin >= first_end) return true;
  std::vector<V> point;
  point.reserve(n);
  for (std::size_t i = 0; i < n; ++i) point.push_back(sets[i][idx[i]]);
  for (;;) {
    if (!visit(point, idx)) return false;
    std::size_t k = n;
    for (;;) {
      if (k == 0) return true;
      --k;
      const std::size_t limit = k == 0 ? first_end : sets[k].size();
      if (++idx[k] < limit) {
        point[k] = sets[k][idx[k]];
        break;
      }
      if (k == 0) return true;
      idx[k] = 0;
      point[k] = sets[k][0];
    }
  }
}

// phi_i'(a) = prod_{b in A_i, b != a} (a - b)
template <coefficient_ring R>
std::vector<std::vector<typename R::value_type>> phi_derivatives(const R& ring, const grid_spec<R>& grid) {
  std::vector<std::vector<typename R::value_type>> out(grid.dims());
  for (std::size_t i = 0; i < grid.dims(); ++i) {
    const auto& A = grid[i];
    for (std::size_t a = 0; a < A.size(); ++a) {
      auto v = ring.one();
      for (std::size_t b = 0; b < A.size(); ++b)
        if (b != a) v = ring.mul(v, ring.sub(A[a], A[b]));
      out[i].push_back(v);
    }
  }
  return out;
}

template <evaluable_poly P>
void require_grid_shape(const P& f, std::size_t dims) {
  if (f.arity() != dims)
    throw arity_mismatch("polynomial arity " + std::to_string(f.arity()) + " vs grid dimension " +
                         std::to_string(dims));
}

template <evaluable_poly P>
typename P::value_type weighted_grid_sum(const P& f, const grid_spec<typename P::ring_type>& grid,
                                         const std::vector<std::vector<typename P::value_type>>& weights,
                                         unsigned threads) {
  const auto& ring = f.ring();
  using V = typename P::value_type;
  if (grid.dims() == 0) return f.eval(std::vector<V>{});
  auto partial = parallel_map<V>(grid[0].size(), resolve_threads(threads), [&](std::size_t chunk) {
    V acc = ring.zero();
    for_each_grid_point(grid.sets(), chunk, chunk + 1, [&](const std::vector<V>& pt, const auto& idx) {
      V v = f.eval(pt);
      if (ring.is_zero(v)) return true;
      for (std::size_t i = 0; i < idx.size(); ++i) v = ring.mul(v, weights[i][idx[i]]);
      acc = ring.add(acc, v);
      return true;
    });
    return acc;
  });
  V total = ring.zero();
  for (const auto& v : partial) total = ring.add(total, v);
  return total;
}

}  // namespace detail

// sum of f over all p^m points of (Z/p)^m.
template <evaluable_poly P>
  requires std::same_as<typename P::ring_type, mod_ring>
mod_elem integral_over_field(const P& f, unsigned threads = 1) {
  const auto& ring = f.ring();
  std::vector<mod_elem> all;
  for (std::uint64_t v = 0; v < ring.modulus(); ++v) all.push_back({ring.modulus(), v});
  grid_spec<mod_ring> grid(ring, std::vector<std::vector<mod_elem>>(f.arity(), all));
  std::vector<std::vector<mod_elem>> unit(f.arity(), std::vector<mod_elem>(all.size(), ring.one()));
  return detail::weighted_grid_sum(f, grid, unit, threads);
}

// Numerator N and denominator D = prod_i prod_{a in A_i} phi_i'(a) with C * D = N.
template <evaluable_poly P>
cn_fraction<typename P::ring_type> cn_coefficient_fraction(const P& f, const grid_spec<typename P::ring_type>& grid,
                                                          unsigned threads = 1) {
  detail::require_grid_shape(f, grid.dims());
  if (f.degree_bound() > grid.degree_sum())
    throw degree_too_high("degree " + std::to_string(f.degree_bound()) + " exceeds sum of c_i = " +
                          std::to_string(grid.degree_sum()));
  const auto& ring = f.ring();
  auto phi = detail::phi_derivatives(ring, grid);
  auto den = ring.one();
  std::vector<std::vector<typename P::value_type>> cofactor(grid.dims());
  for (std::size_t i = 0; i < grid.dims(); ++i) {
    for (std::size_t a = 0; a < phi[i].size(); ++a) {
      den = ring.mul(den, phi[i][a]);
      auto c = ring.one();
      for (std::size_t b = 0; b < phi[i].size(); ++b)
        if (b != a) c = ring.mul(c, phi[i][b]);
      cofactor[i].push_back(c);
    }
  }
  return {detail::weighted_grid_sum(f, grid, cofactor, threads), den};
}

// Coefficient of x_1^{c_1} ... x_n^{c_n} in f, read off from values on the grid.
template <evaluable_poly P>
typename P::value_type cn_coefficient(const P& f, const grid_spec<typename P::ring_type>& grid,
                                      unsigned threads = 1) {
  detail::require_grid_shape(f, grid.dims());
  if (f.degree_bound() > grid.degree_sum())
    throw degree_too_high("degree " + std::to_string(f.degree_bound()) + " exceeds sum of c_i = " +
                          std::to_string(grid.degree_sum()));
  const auto& ring = f.ring();
  auto phi = detail::phi_derivatives(ring, grid);
  std::vector<std::vector<typename P::value_type>> inverses(grid.dims());
  bool all_units = true;
  for (std::size_t i = 0; i < grid.dims() && all_units; ++i) {
    for (const auto& v : phi[i]) {
      auto inv = ring.inverse(v);
      if (!inv) {
        all_units = false;
        break;
      }
      inverses[i].push_back(*inv);
    }
  }
  if (all_units) return detail::weighted_grid_sum(f, grid, inverses, threads);

  auto frac = cn_coefficient_fraction(f, grid, threads);
  auto q = ring.divide_exact(frac.numerator, frac.denominator);
  if (!q)
    throw non_invertible_denominator("cannot divide " + ring.to_string(frac.numerator) + " by " +
                                     ring.to_string(frac.denominator) + " in " + ring.name());
  return *q;
}

// First grid point (lexicographic in the given set orders) with f != 0.
template <evaluable_poly P>
std::optional<std::vector<typename P::value_type>> cn_witness(const P& f,
                                                              const grid_spec<typename P::ring_type>& grid) {
  detail::require_grid_shape(f, grid.dims());
  using V = typename P::value_type;
  std::optional<std::vector<V>> found;
  if (grid.dims() == 0) {
    if (!f.ring().is_zero(f.eval(std::vector<V>{}))) found.emplace();
    return found;
  }
  detail::for_each_grid_point(grid.sets(), 0, grid[0].size(), [&](const std::vector<V>& pt, const auto&) {
    if (f.ring().is_zero(f.eval(pt))) return true;
    found = pt;
    return false;
  });
  return found;
}

}  // namespace fpairs
