#pragma once

// Pairings of V^* = (F_p)^k \ {0} where pair i may use any vector of its
// own basis as the difference: y_i - x_i = v_{i, g(i)}.

#include <fpairs/algebra/vector_space.hpp>
#include <fpairs/errors.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fpairs {

struct vector_partition_instance {
  std::uint32_t p = 0;
  std::size_t k = 0;
  std::vector<basis> bases;

  std::uint64_t space_size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k; ++i) s *= p;
    return s;
  }
};

inline void validate(const vector_partition_instance& inst, bool check_bases = true) {
  if (inst.p < 3 || inst.p % 2 == 0 || !is_prime(inst.p)) throw invalid_instance("p must be an odd prime");
  if (inst.k == 0) throw invalid_instance("dimension must be >= 1");
  if (inst.space_size() > (std::uint64_t{1} << 24)) throw invalid_instance("vector space too large");
  if (inst.bases.size() != (inst.space_size() - 1) / 2)
    throw invalid_instance("expected (p^k - 1)/2 = " + std::to_string((inst.space_size() - 1) / 2) +
                           " bases, got " + std::to_string(inst.bases.size()));
  for (const auto& b : inst.bases) {
    if (b.p() != inst.p || b.k() != inst.k || b.vectors().size() != inst.k)
      throw invalid_instance("basis shape does not match (p, k)");
    for (const auto& v : b.vectors())
      if (v.p != inst.p || v.dim() != inst.k) throw invalid_instance("basis vector shape does not match (p, k)");
    if (check_bases && !is_basis(b.vectors(), inst.p, inst.k)) throw invalid_instance("not a basis");
  }
}

struct vector_partition {
  std::vector<std::pair<vector_elem, vector_elem>> pairs;  // (x_i, y_i)
  std::vector<std::size_t> g;                             // y_i - x_i = bases[i][g[i]]
  friend bool operator==(const vector_partition&, const vector_partition&) = default;
};

struct vector_partition_result {
  std::optional<vector_partition> solution;
  std::uint64_t nodes = 0;
  bool feasible() const { return solution.has_value(); }
};

namespace detail {

// Elements are mixed-radix codes; identical bases are grouped so the search
// never distinguishes between them.
class vector_search {
 public:
  explicit vector_search(const vector_partition_instance& inst) : size_(inst.space_size()), used_(size_, 0) {
    used_[0] = 1;
    for (std::size_t i = 0; i < inst.bases.size(); ++i) {
      std::size_t cls = 0;
      while (cls < classes_.size() && !(inst.bases[classes_[cls].front()] == inst.bases[i])) ++cls;
      if (cls == classes_.size()) {
        classes_.emplace_back();
        plus_.emplace_back();
        minus_.emplace_back();
        for (const auto& v : inst.bases[i].vectors()) {
          std::vector<std::uint32_t> up(size_), down(size_);
          for (std::uint64_t e = 0; e < size_; ++e) {
            auto x = decode(e, inst.p, inst.k);
            up[e] = static_cast<std::uint32_t>(encode(x + v));
            down[e] = static_cast<std::uint32_t>(encode(x - v));
          }
          plus_.back().push_back(std::move(up));
          minus_.back().push_back(std::move(down));
        }
      }
      classes_[cls].push_back(i);
    }
    for (const auto& c : classes_) counts_.push_back(c.size());
    remaining_ = inst.bases.size();
  }

  bool run() { return step(1); }
  std::uint64_t nodes() const { return nodes_; }
  // (x, y, class, j) in discovery order
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>>& chosen() const {
    return chosen_;
  }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

 private:
  bool step(std::uint64_t from) {
    ++nodes_;
    if (remaining_ == 0) return true;
    auto e = static_cast<std::uint32_t>(from);
    while (used_[e]) ++e;
    used_[e] = 1;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (counts_[c] == 0) continue;
      for (std::size_t j = 0; j < plus_[c].size(); ++j) {
        const auto up = plus_[c][j][e];
        if (!used_[up] && take(e, up, up, c, j, e + 1)) return true;
        const auto down = minus_[c][j][e];
        if (down != up && !used_[down] && take(down, e, down, c, j, e + 1)) return true;
      }
    }
    used_[e] = 0;
    return false;
  }

  bool take(std::uint32_t x, std::uint32_t y, std::uint32_t other, std::size_t c, std::size_t j,
            std::uint64_t from) {
    used_[other] = 1;
    --counts_[c];
    --remaining_;
    chosen_.emplace_back(x, y, c, j);
    if (step(from)) return true;
    chosen_.pop_back();
    ++remaining_;
    ++counts_[c];
    used_[other] = 0;
    return false;
  }

  std::uint64_t size_;
  std::vector<char> used_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::vector<std::vector<std::uint32_t>>> plus_, minus_;
  std::vector<std::size_t> counts_;
  std::size_t remaining_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>> chosen_;
};

}  // namespace detail

// check_bases = false admits degenerate "bases" (counterexample inputs).
inline vector_partition_result solve_vector_partition(const vector_partition_instance& inst,
                                                      bool check_bases = true) {
  validate(inst, check_bases);
  detail::vector_search search(inst);
  vector_partition_result result;
  const bool ok = search.run();
  result.nodes = search.nodes();
  if (!ok) return result;

  vector_partition sol;
  sol.pairs.resize(inst.bases.size());
  sol.g.resize(inst.bases.size());
  std::vector<std::size_t> cursor(search.classes().size(), 0);
  for (const auto& [x, y, c, j] : search.chosen()) {
    const std::size_t i = search.classes()[c][cursor[c]++];
    sol.pairs[i] = {decode(x, inst.p, inst.k), decode(y, inst.p, inst.k)};
    sol.g[i] = j;
  }
  result.solution = std::move(sol);
  return result;
}

}  // namespace fpairs
