#pragma once

/**
 * Sumset lower bound in Z/(p^alpha).
 *
 * beta_p(r, s) is the least n >= 1 such that p | C(n, k) for every k with
 * n - r < k < s; for all nonempty A, B in Z/(p^alpha), |A + B| >= beta_p(|A|, |B|).
 *
 * Subsets of Z/(N), N <= 64, are bitmasks; A + B is the OR of B rotated by
 * each a in A.
 */

#include <fpairs/algebra/cyclotomic.hpp>
#include <fpairs/algebra/integer.hpp>
#include <fpairs/errors.hpp>
#include <fpairs/util/parallel.hpp>
#include <fpairs/util/random.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpairs {

// Reference route: exact binomials reduced mod p.
inline std::uint64_t beta(std::uint64_t p, std::uint64_t r, std::uint64_t s) {
  if (r == 0 || s == 0) throw invalid_argument("beta needs r, s >= 1");
  for (std::uint64_t n = 1;; ++n) {
    bool all_divisible = true;
    // open range n - r < k < s, intersected with 0 <= k <= n (C(n,k) = 0 outside)
    const std::int64_t lo = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(r) + 1;
    for (std::int64_t k = std::max<std::int64_t>(lo, 0); k < static_cast<std::int64_t>(s) && all_divisible; ++k)
      all_divisible = binomial(n, static_cast<std::uint64_t>(k)) % p == 0;
    if (all_divisible) return n;
  }
}

// C(n, k) mod p via the base-p digits of n and k.
inline std::uint64_t binomial_mod_lucas(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    r = r * mod_reduce(binomial(nd, kd), p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

inline std::uint64_t beta_lucas(std::uint64_t p, std::uint64_t r, std::uint64_t s) {
  if (r == 0 || s == 0) throw invalid_argument("beta needs r, s >= 1");
  for (std::uint64_t n = 1;; ++n) {
    bool all_divisible = true;
    const std::int64_t lo = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(r) + 1;
    for (std::int64_t k = std::max<std::int64_t>(lo, 0); k < static_cast<std::int64_t>(s) && all_divisible; ++k)
      all_divisible = k > static_cast<std::int64_t>(n) || binomial_mod_lucas(n, static_cast<std::uint64_t>(k), p) == 0;
    if (all_divisible) return n;
  }
}

inline std::vector<std::uint64_t> sumset(const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B,
                                         std::uint64_t modulus) {
  std::vector<std::uint64_t> out;
  for (auto a : A)
    for (auto b : B) out.push_back((a % modulus + b % modulus) % modulus);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using subset_mask = std::uint64_t;

inline std::vector<std::uint64_t> mask_elements(subset_mask m) {
  std::vector<std::uint64_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
  return out;
}

inline subset_mask elements_mask(const std::vector<std::uint64_t>& s) {
  subset_mask m = 0;
  for (auto v : s) m |= subset_mask{1} << v;
  return m;
}

// Cyclic rotation by `shift` inside N bits.
inline subset_mask rotate_mask(subset_mask m, unsigned shift, unsigned N) {
  if (shift == 0) return m;
  const subset_mask full = N == 64 ? ~subset_mask{0} : (subset_mask{1} << N) - 1;
  return ((m << shift) | (m >> (N - shift))) & full;
}

inline subset_mask sumset_mask(subset_mask A, subset_mask B, unsigned N) {
  subset_mask out = 0;
  for (; A; A &= A - 1) out |= rotate_mask(B, static_cast<unsigned>(std::countr_zero(A)), N);
  return out;
}

struct sumset_pair {
  std::vector<std::uint64_t> A, B;
  std::uint64_t sum_size = 0;
  std::uint64_t bound = 0;
};

struct sumset_report {
  std::uint64_t p = 0;
  std::uint64_t alpha = 0;
  std::uint64_t modulus = 0;
  bool sampled = false;
  std::uint64_t pairs = 0;
  std::vector<sumset_pair> violations;
  std::uint64_t tight_count = 0;
  std::vector<sumset_pair> tight;  // first max_tight equality cases in enumeration order
};

struct sumset_options {
  std::optional<std::uint64_t> sample_count = std::nullopt;  // nullopt: exhaustive
  std::uint64_t seed = 0;
  std::uint64_t max_tight = UINT64_MAX;
  unsigned threads = 0;
};

inline sumset_report verify_cd_bound(std::uint64_t p, std::uint64_t alpha, const sumset_options& opts = {}) {
  if (!is_prime(p) || alpha == 0) throw invalid_argument("need prime p and alpha >= 1");
  std::uint64_t N = 1;
  for (std::uint64_t i = 0; i < alpha; ++i) {
    N *= p;
    if (N > 64) throw invalid_argument("p^alpha must be at most 64");
  }
  if (!opts.sample_count && N > 12) throw invalid_argument("exhaustive mode supports p^alpha <= 12");
  const auto n = static_cast<unsigned>(N);

  std::vector<std::vector<std::uint64_t>> bound(N + 1, std::vector<std::uint64_t>(N + 1, 0));
  for (std::uint64_t r = 1; r <= N; ++r)
    for (std::uint64_t s = 1; s <= N; ++s) bound[r][s] = beta(p, r, s);

  auto record = [&](sumset_report& rep, subset_mask A, subset_mask B) {
    ++rep.pairs;
    const auto sz = static_cast<std::uint64_t>(std::popcount(sumset_mask(A, B, n)));
    const auto b = bound[std::popcount(A)][std::popcount(B)];
    if (sz < b) rep.violations.push_back({mask_elements(A), mask_elements(B), sz, b});
    if (sz == b) {
      if (rep.tight_count < opts.max_tight) rep.tight.push_back({mask_elements(A), mask_elements(B), sz, b});
      ++rep.tight_count;
    }
  };

  sumset_report rep;
  rep.p = p;
  rep.alpha = alpha;
  rep.modulus = N;
  rep.sampled = opts.sample_count.has_value();
  const subset_mask full = N == 64 ? ~subset_mask{0} : (subset_mask{1} << N) - 1;
  if (opts.sample_count) {
    rng gen(opts.seed);
    auto draw = [&] {
      for (;;) {
        subset_mask m = gen() & full;
        if (m) return m;
      }
    };
    for (std::uint64_t i = 0; i < *opts.sample_count; ++i) {
      const auto A = draw();
      const auto B = draw();
      record(rep, A, B);
    }
    return rep;
  }

  // one chunk per A, merged in A order
  auto parts = parallel_map<sumset_report>(full, resolve_threads(opts.threads), [&](std::size_t i) {
    sumset_report part;
    const subset_mask A = i + 1;
    for (subset_mask B = 1; B <= full; ++B) record(part, A, B);
    return part;
  });
  for (auto& part : parts) {
    rep.pairs += part.pairs;
    for (auto& v : part.violations) rep.violations.push_back(std::move(v));
    for (auto& t : part.tight)
      if (rep.tight.size() < opts.max_tight) rep.tight.push_back(std::move(t));
    rep.tight_count += part.tight_count;
  }
  return rep;
}

struct symmetric_coefficient {
  std::uint64_t k = 0;       // exponent of x in x^k y^{n-k}
  cyclo_int coefficient;     // (-1)^{n-k} sigma_{n-k}(c_1..c_n)
  bool vanishes = false;     // zero in Z[z]
  big_int value_at_one;      // (-1)^{n-k} C(n, k)
  bool divisible_by_p = false;
};

// Coefficients of prod_{c in C} (x - c y) for C a set of p^alpha-th roots of
// unity z^{e}, given by exponents e. Whenever a coefficient vanishes in Z[z]
// its value at z = 1 must be divisible by p.
inline std::vector<symmetric_coefficient> symmetric_coefficients(std::uint64_t p, std::uint64_t alpha,
                                                                 const std::vector<std::uint64_t>& exponents) {
  std::uint64_t N = 1;
  for (std::uint64_t i = 0; i < alpha; ++i) N *= p;
  const std::size_t n = exponents.size();
  // sigma[j] = e_j(c_1..c_i), built one root at a time
  std::vector<cyclo_int> sigma(n + 1, cyclo_int(N));
  sigma[0] = cyclo_int::constant(N, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = cyclo_int::monomial(N, static_cast<std::int64_t>(exponents[i] % N));
    for (std::size_t j = i + 1; j-- > 0;) sigma[j + 1] += sigma[j] * c;
  }
  std::vector<symmetric_coefficient> out;
  for (std::size_t k = 0; k <= n; ++k) {
    symmetric_coefficient sc;
    sc.k = k;
    sc.coefficient = (n - k) % 2 ? -sigma[n - k] : sigma[n - k];
    sc.vanishes = cyclo_is_zero(sc.coefficient);
    sc.value_at_one = cyclo_eval_at_one(sc.coefficient);
    sc.divisible_by_p = sc.value_at_one % p == 0;
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace fpairs
