#pragma once

/**
 * Translate packing: pick t_i in T_i so that X_1 + t_1, ..., X_m + t_m are
 * pairwise disjoint, either in Z/(n) or in the integers (characteristic 0,
 * with explicit finite X_i and T_i).
 *
 * check_packing_hypotheses reports which sufficient condition for
 * feasibility the instance meets:
 *   theorem        field, (md)!/(d!)^m != 0, |X_i - X_j| <= 2d, |T_i| >= (m-1)d + 1
 *   remark-square  T_i = F_p for all i and sum ceil(|X_i|^2 / 2) < p
 *   remark-weights T_i = F_p and some a_i >= 0 with |X_i - X_j| <= a_i + a_j, sum a_i <= p - 1
 */

#include <fpairs/algebra/integer.hpp>
#include <fpairs/algebra/mod_ring.hpp>
#include <fpairs/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpairs {

struct packing_instance {
  std::optional<std::uint64_t> modulus;  // nullopt: the integers
  std::vector<std::vector<std::int64_t>> X;
  std::vector<std::vector<std::int64_t>> T;
  std::uint64_t d = 1;

  std::size_t m() const { return X.size(); }
  std::int64_t reduce(std::int64_t v) const {
    if (!modulus) return v;
    auto n = static_cast<std::int64_t>(*modulus);
    auto r = v % n;
    return r < 0 ? r + n : r;
  }
};

// Reduces (finite mode), sorts and deduplicates every set; rejects malformed input.
inline packing_instance normalize(packing_instance inst) {
  if (inst.modulus && *inst.modulus < 2) throw invalid_instance("modulus must be >= 2");
  if (inst.X.empty()) throw invalid_instance("no sets to pack");
  if (inst.X.size() != inst.T.size()) throw invalid_instance("X and T must have the same length");
  if (inst.d == 0) throw invalid_instance("d must be positive");
  auto clean = [&](std::vector<std::int64_t>& s, const char* what) {
    if (s.empty()) throw invalid_instance(std::string(what) + " set is empty");
    for (auto& v : s) v = inst.reduce(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  };
  for (auto& s : inst.X) clean(s, "X");
  for (auto& s : inst.T) clean(s, "T");
  return inst;
}

struct packing_result {
  std::optional<std::vector<std::int64_t>> translates;
  std::uint64_t nodes = 0;
  bool feasible() const { return translates.has_value(); }
};

namespace detail {

class packing_search {
 public:
  explicit packing_search(const packing_instance& inst) : inst_(inst) {
    // compress every reachable cell x + t to an index
    std::vector<std::int64_t> cells;
    for (std::size_t i = 0; i < inst.m(); ++i)
      for (auto t : inst.T[i])
        for (auto x : inst.X[i]) cells.push_back(inst.reduce(x + t));
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    occupied_.assign(cells.size(), 0);
    footprint_.resize(inst.m());
    for (std::size_t i = 0; i < inst.m(); ++i) {
      for (auto t : inst.T[i]) {
        std::vector<std::uint32_t> fp;
        for (auto x : inst.X[i]) {
          auto it = std::lower_bound(cells.begin(), cells.end(), inst.reduce(x + t));
          fp.push_back(static_cast<std::uint32_t>(it - cells.begin()));
        }
        footprint_[i].push_back(std::move(fp));
      }
    }
    choice_.assign(inst.m(), 0);
  }

  bool run() { return step(0); }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::int64_t> translates() const {
    std::vector<std::int64_t> t;
    for (std::size_t i = 0; i < choice_.size(); ++i) t.push_back(inst_.T[i][choice_[i]]);
    return t;
  }

 private:
  bool step(std::size_t i) {
    ++nodes_;
    if (i == inst_.m()) return true;
    for (std::size_t c = 0; c < footprint_[i].size(); ++c) {
      const auto& fp = footprint_[i][c];
      bool clash = false;
      for (auto cell : fp) clash = clash || occupied_[cell];
      if (clash) continue;
      for (auto cell : fp) occupied_[cell] = 1;
      choice_[i] = c;
      if (step(i + 1)) return true;
      for (auto cell : fp) occupied_[cell] = 0;
    }
    return false;
  }

  const packing_instance& inst_;
  std::vector<std::vector<std::vector<std::uint32_t>>> footprint_;
  std::vector<char> occupied_;
  std::vector<std::size_t> choice_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Lexicographically first translate vector (T_i scanned ascending).
inline packing_result solve_translate_packing(const packing_instance& raw) {
  const auto inst = normalize(raw);
  detail::packing_search search(inst);
  packing_result result;
  const bool ok = search.run();
  result.nodes = search.nodes();
  if (ok) result.translates = search.translates();
  return result;
}

// X_i - X_j as a sorted set
inline std::vector<std::int64_t> difference_set(const packing_instance& inst, const std::vector<std::int64_t>& A,
                                                const std::vector<std::int64_t>& B) {
  std::vector<std::int64_t> out;
  for (auto a : A)
    for (auto b : B) out.push_back(inst.reduce(a - b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct packing_report {
  std::size_t m = 0;
  std::uint64_t d = 0;
  bool field = false;              // ambient ring is a field (prime n, or the integers inside Q)
  bool factorial_nonzero = false;  // (md)!/(d!)^m != 0 in the ambient field
  bool differences_ok = false;     // |X_i - X_j| <= 2d for all i < j
  bool translates_ok = false;      // |T_i| >= (m-1)d + 1 for all i
  std::vector<std::vector<std::size_t>> difference_sizes;  // upper triangle of |X_i - X_j|
  bool full_translate_sets = false;                        // T_i = F_p for all i
  bool remark_square = false;
  bool remark_weights = false;
  std::optional<std::vector<std::uint64_t>> weights;  // a_i witnessing remark_weights
  std::string guarantee = "none";                     // theorem | remark-square | remark-weights | none
};

namespace detail {

// Some a_i >= 0 with a_i + a_j >= D_ij (i<j) and sum a_i <= budget; branch
// and bound over a_i in index order.
inline std::optional<std::vector<std::uint64_t>> find_weights(const std::vector<std::vector<std::size_t>>& D,
                                                              std::uint64_t budget) {
  const std::size_t m = D.size();
  std::vector<std::uint64_t> a(m, 0);
  auto lower = [&](std::size_t i) {
    std::uint64_t lo = 0;
    for (std::size_t j = 0; j < i; ++j) lo = std::max<std::uint64_t>(lo, D[j][i] > a[j] ? D[j][i] - a[j] : 0);
    return lo;
  };
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used) -> bool {
    if (i == m) return true;
    // every later index is bounded below by the already fixed weights
    std::uint64_t future = 0;
    for (std::size_t k = i; k < m; ++k) future += lower(k);
    if (used + future > budget) return false;
    for (std::uint64_t v = lower(i); used + v <= budget; ++v) {
      a[i] = v;
      if (self(self, i + 1, used + v)) return true;
    }
    a[i] = 0;
    return false;
  };
  if (rec(rec, 0, 0)) return a;
  return std::nullopt;
}

}  // namespace detail

inline packing_report check_packing_hypotheses(const packing_instance& raw) {
  const auto inst = normalize(raw);
  packing_report r;
  r.m = inst.m();
  r.d = inst.d;
  r.field = !inst.modulus || is_prime(*inst.modulus);
  r.factorial_nonzero =
      !inst.modulus || factorial_quotient_mod(inst.m(), inst.d, *inst.modulus).value != 0;

  r.difference_sizes.assign(r.m, std::vector<std::size_t>(r.m, 0));
  r.differences_ok = true;
  for (std::size_t i = 0; i < r.m; ++i) {
    for (std::size_t j = i + 1; j < r.m; ++j) {
      const auto s = difference_set(inst, inst.X[i], inst.X[j]).size();
      r.difference_sizes[i][j] = r.difference_sizes[j][i] = s;
      r.differences_ok = r.differences_ok && s <= 2 * inst.d;
    }
  }
  r.translates_ok = true;
  for (const auto& t : inst.T) r.translates_ok = r.translates_ok && t.size() >= (r.m - 1) * inst.d + 1;

  if (inst.modulus && is_prime(*inst.modulus)) {
    const auto p = *inst.modulus;
    r.full_translate_sets = true;
    for (const auto& t : inst.T) r.full_translate_sets = r.full_translate_sets && t.size() == p;
    if (r.full_translate_sets) {
      std::uint64_t sq = 0;
      for (const auto& x : inst.X) sq += (x.size() * x.size() + 1) / 2;
      r.remark_square = sq < p;
      r.weights = detail::find_weights(r.difference_sizes, p - 1);
      r.remark_weights = r.weights.has_value();
    }
  }

  if (r.field && r.factorial_nonzero && r.differences_ok && r.translates_ok)
    r.guarantee = "theorem";
  else if (r.remark_square)
    r.guarantee = "remark-square";
  else if (r.remark_weights)
    r.guarantee = "remark-weights";
  return r;
}

}  // namespace fpairs
