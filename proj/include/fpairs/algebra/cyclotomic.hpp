#pragma once

/**
 * Cyclotomic integers Z[w], w = exp(2*pi*i/n), held as integer coefficient
 * vectors modulo x^n - 1.
 *
 * The representation is not canonical: distinct vectors may denote the same
 * element. Equality and zero tests go through exact division by the n-th
 * cyclotomic polynomial, which is the minimal polynomial of w.
 */

#include <fpairs/algebra/integer.hpp>
#include <fpairs/errors.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace fpairs {

// Dense integer polynomial, coefficient i at x^i. Trailing zeros trimmed.
using int_poly = std::vector<big_int>;

inline void trim(int_poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int_poly poly_mul(const int_poly& a, const int_poly& b) {
  if (a.empty() || b.empty()) return {};
  int_poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Division by a monic polynomial; returns {quotient, remainder}.
inline std::pair<int_poly, int_poly> poly_divmod_monic(int_poly f, const int_poly& g) {
  if (g.empty() || g.back() != 1) throw invalid_argument("divisor must be monic");
  trim(f);
  const std::size_t dg = g.size() - 1;
  if (f.size() <= dg) return {{}, f};
  int_poly q(f.size() - dg);
  for (std::size_t i = f.size(); i-- > dg;) {
    const big_int c = f[i];
    if (c == 0) continue;
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  trim(q);
  trim(f);
  return {q, f};
}

inline big_int eval_at_one(const int_poly& f) {
  big_int s = 0;
  for (const auto& c : f) s += c;
  return s;
}

namespace detail {

inline int_poly compute_cyclotomic(std::uint64_t n, std::map<std::uint64_t, int_poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  int_poly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  int_poly den{1};
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, compute_cyclotomic(d, memo));
  auto [q, r] = poly_divmod_monic(std::move(num), den);
  if (!r.empty()) throw std::logic_error("x^n - 1 not divisible by lower cyclotomic factors");
  memo.emplace(n, q);
  return q;
}

}  // namespace detail

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, memoized across calls.
inline int_poly cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw invalid_argument("cyclotomic_poly needs n >= 1");
  static std::mutex mu;
  static std::map<std::uint64_t, int_poly> memo;
  std::lock_guard lock(mu);
  return detail::compute_cyclotomic(n, memo);
}

class cyclo_int {
 public:
  cyclo_int() = default;
  explicit cyclo_int(std::uint64_t n) : n_(n), coeffs_(n) {
    if (n == 0) throw invalid_argument("root-of-unity order must be >= 1");
  }
  // Coefficients are folded modulo x^n - 1.
  cyclo_int(std::uint64_t n, const std::vector<big_int>& coeffs) : cyclo_int(n) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i % n] += coeffs[i];
  }

  static cyclo_int constant(std::uint64_t n, const big_int& c) {
    cyclo_int r(n);
    r.coeffs_[0] = c;
    return r;
  }
  // c * w^e
  static cyclo_int monomial(std::uint64_t n, std::int64_t e, const big_int& c = 1) {
    cyclo_int r(n);
    auto sn = static_cast<std::int64_t>(n);
    r.coeffs_[static_cast<std::size_t>(((e % sn) + sn) % sn)] = c;
    return r;
  }

  std::uint64_t order() const { return n_; }
  const std::vector<big_int>& coeffs() const { return coeffs_; }

  void add_monomial(std::int64_t e, const big_int& c) {
    auto sn = static_cast<std::int64_t>(n_);
    coeffs_[static_cast<std::size_t>(((e % sn) + sn) % sn)] += c;
  }

  cyclo_int& operator+=(const cyclo_int& b) {
    require_same_order(b);
    for (std::size_t i = 0; i < n_; ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  cyclo_int& operator-=(const cyclo_int& b) {
    require_same_order(b);
    for (std::size_t i = 0; i < n_; ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }
  cyclo_int& operator*=(const cyclo_int& b) { return *this = *this * b; }

  friend cyclo_int operator+(cyclo_int a, const cyclo_int& b) { return a += b; }
  friend cyclo_int operator-(cyclo_int a, const cyclo_int& b) { return a -= b; }
  friend cyclo_int operator-(cyclo_int a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  // Cyclic convolution.
  friend cyclo_int operator*(const cyclo_int& a, const cyclo_int& b) {
    a.require_same_order(b);
    cyclo_int r(a.n_);
    const std::size_t n = a.n_;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        std::size_t k = i + j;
        if (k >= n) k -= n;
        r.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend cyclo_int operator*(cyclo_int a, const big_int& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  // Representation equality (same coefficient vector); see cyclo_equal for
  // equality in Z[w].
  friend bool operator==(const cyclo_int&, const cyclo_int&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (coeffs_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[i].str();
      if (i > 0) s += "*w^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void require_same_order(const cyclo_int& b) const {
    if (n_ != b.n_)
      throw order_mismatch("Z[w_" + std::to_string(n_) + "] vs Z[w_" + std::to_string(b.n_) + "]");
  }

  std::uint64_t n_ = 1;
  std::vector<big_int> coeffs_{big_int(0)};
};

inline cyclo_int cyclo_mul(const cyclo_int& a, const cyclo_int& b) { return a * b; }

// Zero in Z[w] iff Phi_n divides the representing polynomial.
inline bool cyclo_is_zero(const cyclo_int& a) {
  int_poly f(a.coeffs().begin(), a.coeffs().end());
  trim(f);
  if (f.empty()) return true;
  return poly_divmod_monic(std::move(f), cyclotomic_poly(a.order())).second.empty();
}

inline bool cyclo_equal(const cyclo_int& a, const cyclo_int& b) { return cyclo_is_zero(a - b); }

inline big_int cyclo_eval_at_one(const cyclo_int& a) {
  big_int s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

}  // namespace fpairs
