#pragma once

// Solution checkers written against the problem statements only; they share
// no state or helpers with the search code.

#include <fpairs/solvers/packing.hpp>
#include <fpairs/solvers/pair_partition.hpp>
#include <fpairs/solvers/vector_partition.hpp>

#include <cstdint>
#include <set>
#include <vector>

namespace fpairs {

inline bool verify_solution(const partition_instance& inst, const pair_partition& sol) {
  if (inst.n < 2 || sol.pairs.size() != inst.d.size()) return false;
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < sol.pairs.size(); ++i) {
    const auto [x, y] = sol.pairs[i];
    if (x >= inst.n || y >= inst.n) return false;
    if ((static_cast<std::uint64_t>(y) + inst.n - x) % inst.n != inst.d[i] % inst.n) return false;
    if (!seen.insert(x).second || !seen.insert(y).second) return false;
  }
  // coverage: the 2m distinct entries must be exactly the universe
  const bool with_zero = inst.mode == universe::full;
  const std::uint64_t expected = with_zero ? inst.n : inst.n - 1;
  if (seen.size() != expected) return false;
  return with_zero || !seen.contains(0);
}

inline bool verify_solution(const vector_partition_instance& inst, const vector_partition& sol) {
  if (sol.pairs.size() != inst.bases.size() || sol.g.size() != inst.bases.size()) return false;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < sol.pairs.size(); ++i) {
    const auto& [x, y] = sol.pairs[i];
    if (x.p != inst.p || y.p != inst.p || x.dim() != inst.k || y.dim() != inst.k) return false;
    if (sol.g[i] >= inst.k) return false;
    const auto& v = inst.bases[i][sol.g[i]];
    for (std::size_t c = 0; c < inst.k; ++c) {
      if (x.coords[c] >= inst.p || y.coords[c] >= inst.p) return false;
      if ((y.coords[c] + inst.p - x.coords[c]) % inst.p != v.coords[c] % inst.p) return false;
    }
    if (!seen.insert(x.coords).second || !seen.insert(y.coords).second) return false;
  }
  if (seen.contains(std::vector<std::uint32_t>(inst.k, 0))) return false;
  return seen.size() + 1 == inst.space_size();
}

inline bool verify_solution(const packing_instance& inst, const std::vector<std::int64_t>& t) {
  if (t.size() != inst.X.size() || inst.T.size() != inst.X.size()) return false;
  auto red = [&](std::int64_t v) {
    if (!inst.modulus) return v;
    auto n = static_cast<std::int64_t>(*inst.modulus);
    return ((v % n) + n) % n;
  };
  std::set<std::int64_t> occupied;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool member = false;
    for (auto v : inst.T[i]) member = member || red(v) == red(t[i]);
    if (!member) return false;
    std::set<std::int64_t> mine;
    for (auto x : inst.X[i]) mine.insert(red(x + t[i]));
    for (auto c : mine)
      if (!occupied.insert(c).second) return false;
  }
  return true;
}

}  // namespace fpairs
