#pragma once

// Instances on which a prescribed-difference pairing cannot exist.

#include <fpairs/algebra/integer.hpp>
#include <fpairs/solvers/pair_partition.hpp>
#include <fpairs/solvers/vector_partition.hpp>

#include <string>

namespace fpairs {

// Z/(n), odd composite n, every d_i = n/q for a prime q | n: each coset of the
// subgroup generated by n/q has q (odd) elements, so the coset not containing
// 0 leaves one element unpaired.
inline partition_instance zn_counterexample(std::uint32_t n, std::uint32_t q) {
  if (n % 2 == 0 || !is_prime(q) || n % q != 0 || n == q)
    throw invalid_instance("need odd composite n and a prime divisor q < n");
  partition_instance inst;
  inst.n = n;
  inst.mode = universe::nonzero;
  inst.d.assign((n - 1) / 2, n / q);
  return inst;
}

// V = (F_p)^k with every pair forced to use e_1: each line x + F_p e_1 missing
// the origin has p (odd) points and cannot be split into pairs. The "bases"
// are degenerate, so solve with check_bases = false.
inline vector_partition_instance single_direction_counterexample(std::uint32_t p, std::size_t k) {
  vector_partition_instance inst{p, k, {}};
  std::vector<std::int64_t> e1(k, 0);
  e1[0] = 1;
  const auto v = make_vector(p, e1);
  for (std::uint64_t i = 0; i < (inst.space_size() - 1) / 2; ++i)
    inst.bases.push_back(basis::unchecked(p, k, std::vector<vector_elem>(k, v)));
  return inst;
}

}  // namespace fpairs
