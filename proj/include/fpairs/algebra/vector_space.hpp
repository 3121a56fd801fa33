#pragma once

// The F_p-vector space V = (F_p)^k.

#include <fpairs/errors.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fpairs {

struct vector_elem {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coords;

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const vector_elem&, const vector_elem&) = default;
  friend auto operator<=>(const vector_elem&, const vector_elem&) = default;
};

inline vector_elem make_vector(std::uint32_t p, std::vector<std::int64_t> coords) {
  vector_elem v{p, {}};
  v.coords.reserve(coords.size());
  for (auto c : coords) {
    auto r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v.coords.push_back(static_cast<std::uint32_t>(r));
  }
  return v;
}

namespace detail {
inline void require_same_shape(const vector_elem& a, const vector_elem& b) {
  if (a.p != b.p || a.dim() != b.dim())
    throw dimension_mismatch("vectors over F_" + std::to_string(a.p) + "^" + std::to_string(a.dim()) +
                             " and F_" + std::to_string(b.p) + "^" + std::to_string(b.dim()));
}
}  // namespace detail

inline vector_elem operator+(const vector_elem& a, const vector_elem& b) {
  detail::require_same_shape(a, b);
  vector_elem r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % a.p;
  return r;
}

inline vector_elem operator-(const vector_elem& a, const vector_elem& b) {
  detail::require_same_shape(a, b);
  vector_elem r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] = (a.coords[i] + a.p - b.coords[i]) % a.p;
  return r;
}

// Mixed-radix code of a vector, first coordinate most significant, so that
// code order coincides with lexicographic coordinate order.
inline std::uint64_t encode(const vector_elem& v) {
  std::uint64_t code = 0;
  for (auto c : v.coords) code = code * v.p + c;
  return code;
}

inline vector_elem decode(std::uint64_t code, std::uint32_t p, std::size_t k) {
  vector_elem v{p, std::vector<std::uint32_t>(k)};
  for (std::size_t i = k; i-- > 0;) {
    v.coords[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

// Rank over F_p by Gaussian elimination; p must be prime.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t scale = inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * scale % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + (p - f) * rows[rank][c]) % p);
    }
    ++rank;
  }
  return rank;
}

inline bool is_basis(const std::vector<vector_elem>& vectors, std::uint32_t p, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& v : vectors) {
    if (v.dim() != k || v.p != p)
      throw dimension_mismatch("expected a vector over F_" + std::to_string(p) + "^" + std::to_string(k));
    rows.push_back(v.coords);
  }
  if (vectors.size() != k) return false;
  return rank_mod_p(std::move(rows), p) == k;
}

// A validated basis of (F_p)^k.
class basis {
 public:
  basis(std::uint32_t p, std::size_t k, std::vector<vector_elem> vectors)
      : p_(p), k_(k), vectors_(std::move(vectors)) {
    if (!is_basis(vectors_, p_, k_)) throw invalid_instance("vectors do not form a basis of F_p^k");
  }

  // Skips the independence check; used to build the degenerate inputs of
  // the counterexample constructors.
  static basis unchecked(std::uint32_t p, std::size_t k, std::vector<vector_elem> vectors) {
    return basis(p, k, std::move(vectors), 0);
  }

  std::uint32_t p() const { return p_; }
  std::size_t k() const { return k_; }
  const std::vector<vector_elem>& vectors() const { return vectors_; }
  const vector_elem& operator[](std::size_t j) const { return vectors_[j]; }

  friend bool operator==(const basis&, const basis&) = default;

 private:
  basis(std::uint32_t p, std::size_t k, std::vector<vector_elem> vectors, int)
      : p_(p), k_(k), vectors_(std::move(vectors)) {}

  std::uint32_t p_;
  std::size_t k_;
  std::vector<vector_elem> vectors_;
};

}  // namespace fpairs
