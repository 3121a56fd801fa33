#pragma once

// Polynomials that encode "choose x_i so that the pairs {x_i, x_i + d_i}
// are disjoint" over F_p, kept in factored form.

#include <fpairs/nullstellensatz.hpp>
#include <fpairs/poly/factored_poly.hpp>

#include <cstdint>
#include <vector>

namespace fpairs {

namespace detail {

inline void add_pair_disjointness(const mod_ring& F, std::vector<affine_factor<mod_ring>>& fs,
                                  const std::vector<mod_elem>& d) {
  using factor = affine_factor<mod_ring>;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      fs.push_back(factor::difference(F, i, j, F.zero()));     // x_i - x_j
      fs.push_back(factor::difference(F, i, j, d[i]));         // x_i + d_i - x_j
      fs.push_back(factor::difference(F, i, j, -d[j]));        // x_i - x_j - d_j
      fs.push_back(factor::difference(F, i, j, d[i] - d[j]));  // x_i + d_i - x_j - d_j
    }
  }
}

}  // namespace detail

// Nonzero at c iff the 2m elements c_i, c_i + d_i are distinct and nonzero.
inline factored_poly<mod_ring> pairing_polynomial(const mod_ring& F, const std::vector<mod_elem>& d) {
  using factor = affine_factor<mod_ring>;
  std::vector<factor> fs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    fs.push_back(factor::variable(F, i, F.zero()));
    fs.push_back(factor::variable(F, i, d[i]));
  }
  detail::add_pair_disjointness(F, fs, d);
  return {F, d.size(), std::move(fs)};
}

// Only the pairwise-disjointness factors; nonzeroness is then enforced by
// the grid A_i = F_p^* \ {-d_i}.
inline factored_poly<mod_ring> pair_disjointness_polynomial(const mod_ring& F, const std::vector<mod_elem>& d) {
  std::vector<affine_factor<mod_ring>> fs;
  detail::add_pair_disjointness(F, fs, d);
  return {F, d.size(), std::move(fs)};
}

inline grid_spec<mod_ring> pairing_grid(const mod_ring& F, const std::vector<mod_elem>& d) {
  std::vector<std::vector<mod_elem>> sets;
  for (const auto& di : d) {
    std::vector<mod_elem> A;
    for (std::uint64_t v = 1; v < F.modulus(); ++v)
      if (mod_elem{F.modulus(), v} != -di) A.push_back({F.modulus(), v});
    sets.push_back(std::move(A));
  }
  return {F, std::move(sets)};
}

// prod_i (x_i^2 + x_i) * prod_{i<j} (x_i - x_j)^2 ((x_i - x_j)^2 - 1): same top-degree
// part as pairing_polynomial, nonzero exactly when the x_i are 1, 3, ..., p - 2 in some order.
inline factored_poly<mod_ring> odd_numbers_polynomial(const mod_ring& F, std::size_t m) {
  using factor = affine_factor<mod_ring>;
  std::vector<factor> fs;
  for (std::size_t i = 0; i < m; ++i) {
    fs.push_back(factor::variable(F, i, F.zero()));
    fs.push_back(factor::variable(F, i, F.one()));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      fs.push_back(factor::difference(F, i, j, F.zero()));
      fs.push_back(factor::difference(F, i, j, F.zero()));
      fs.push_back(factor::difference(F, i, j, -F.one()));
      fs.push_back(factor::difference(F, i, j, F.one()));
    }
  }
  return {F, m, std::move(fs)};
}

}  // namespace fpairs
