#pragma once

/**
 * Partitions of Z/(n) \ {0} (odd n) or Z/(n) (even n) into pairs (x_i, y_i)
 * with prescribed differences y_i - x_i = d_i.
 *
 * The search always branches on the smallest uncovered element e and pairs it
 * with e + delta (e as x) or e - delta (e as y) for each distinct remaining
 * difference value delta, ascending. Differences are handled as a multiset,
 * so identical d_i never produce symmetric branches; pairs are mapped back to
 * input indices afterwards in input order. Exhausting the tree certifies
 * infeasibility.
 */

#include <fpairs/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fpairs {

enum class universe { nonzero, full };

inline const char* to_string(universe u) { return u == universe::nonzero ? "nonzero" : "full"; }

inline universe parse_universe(const std::string& s) {
  if (s == "nonzero") return universe::nonzero;
  if (s == "full") return universe::full;
  throw invalid_instance("unknown universe '" + s + "'");
}

struct partition_instance {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> d;
  universe mode = universe::nonzero;
  bool require_units = false;  // conjecture mode: every d_i coprime to n

  std::size_t m() const { return d.size(); }
};

// Picks the universe from the parity of n and reduces the differences.
inline partition_instance make_partition_instance(std::uint32_t n, const std::vector<std::int64_t>& d,
                                                  bool require_units = false) {
  if (n < 2) throw invalid_instance("modulus must be >= 2");
  partition_instance inst{n, {}, n % 2 ? universe::nonzero : universe::full, require_units};
  for (auto v : d) {
    auto r = v % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    inst.d.push_back(static_cast<std::uint32_t>(r));
  }
  return inst;
}

inline void validate(const partition_instance& inst) {
  if (inst.n < 2) throw invalid_instance("modulus must be >= 2");
  const std::size_t size = inst.mode == universe::nonzero ? inst.n - 1 : inst.n;
  if (inst.mode == universe::nonzero && inst.n % 2 == 0)
    throw invalid_instance("the nonzero universe needs odd n = 2m + 1");
  if (inst.mode == universe::full && inst.n % 2 == 1)
    throw invalid_instance("the full universe needs even n = 2m");
  if (2 * inst.m() != size)
    throw invalid_instance("expected " + std::to_string(size / 2) + " differences for n = " +
                           std::to_string(inst.n) + ", got " + std::to_string(inst.m()));
  for (auto v : inst.d) {
    if (v >= inst.n) throw invalid_instance("difference " + std::to_string(v) + " not reduced mod n");
    if (v == 0) throw invalid_instance("zero difference");
    if (inst.require_units && std::gcd(v, inst.n) != 1)
      throw invalid_instance("difference " + std::to_string(v) + " is not a unit mod " + std::to_string(inst.n));
  }
}

struct pair_partition {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (x_i, y_i), y_i - x_i = d_i
  friend bool operator==(const pair_partition&, const pair_partition&) = default;
};

struct partition_result {
  std::optional<pair_partition> solution;
  std::uint64_t nodes = 0;  // search nodes visited
  bool feasible() const { return solution.has_value(); }
};

namespace detail {

class pair_search {
 public:
  explicit pair_search(const partition_instance& inst) : n_(inst.n), used_(inst.n, 0) {
    std::vector<std::uint32_t> sorted = inst.d;
    std::sort(sorted.begin(), sorted.end());
    for (auto v : sorted) {
      if (values_.empty() || values_.back() != v) {
        values_.push_back(v);
        counts_.push_back(0);
      }
      ++counts_.back();
    }
    if (inst.mode == universe::nonzero) used_[0] = 1;
    remaining_ = static_cast<std::uint32_t>(inst.m());
  }

  bool run() { return step(0); }
  std::uint64_t nodes() const { return nodes_; }
  // (x, y, value index) in discovery order
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>>& chosen() const { return chosen_; }
  const std::vector<std::uint32_t>& values() const { return values_; }

 private:
  bool step(std::uint32_t from) {
    ++nodes_;
    if (remaining_ == 0) return true;
    std::uint32_t e = from;
    while (used_[e]) ++e;
    used_[e] = 1;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (counts_[k] == 0) continue;
      const std::uint32_t delta = values_[k];
      const std::uint32_t up = e + delta >= n_ ? e + delta - n_ : e + delta;
      if (!used_[up] && take(e, up, k, e + 1)) return true;
      const std::uint32_t down = e >= delta ? e - delta : e + n_ - delta;
      // when 2 delta = 0 the second orientation is the same pair
      if (down != up && !used_[down] && take(down, e, k, e + 1)) return true;
    }
    used_[e] = 0;
    return false;
  }

  bool take(std::uint32_t x, std::uint32_t y, std::size_t k, std::uint32_t from) {
    const std::uint32_t other = x == from - 1 ? y : x;
    used_[other] = 1;
    --counts_[k];
    --remaining_;
    chosen_.emplace_back(x, y, k);
    if (step(from)) return true;
    chosen_.pop_back();
    ++remaining_;
    ++counts_[k];
    used_[other] = 0;
    return false;
  }

  std::uint32_t n_;
  std::vector<char> used_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> counts_;
  std::uint32_t remaining_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> chosen_;
};

}  // namespace detail

inline partition_result solve_pair_partition(const partition_instance& inst) {
  validate(inst);
  detail::pair_search search(inst);
  partition_result result;
  const bool ok = search.run();
  result.nodes = search.nodes();
  if (!ok) return result;

  // hand out the found pairs of each difference value to the input indices
  // carrying that value, both in order
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_value(search.values().size());
  for (const auto& [x, y, k] : search.chosen()) by_value[k].emplace_back(x, y);
  std::vector<std::size_t> cursor(by_value.size(), 0);
  pair_partition sol;
  for (auto v : inst.d) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(search.values().begin(), search.values().end(), v) - search.values().begin());
    sol.pairs.push_back(by_value[k][cursor[k]++]);
  }
  result.solution = std::move(sol);
  return result;
}

}  // namespace fpairs
