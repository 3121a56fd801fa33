#include <fpairs/conjectures/permanent.hpp>
#include <fpairs/conjectures/scan.hpp>
#include <fpairs/io/json.hpp>
#include <fpairs/poly/factored_poly.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

namespace fpairs {
namespace {

// Z[w_n] as a coefficient ring, test-only: lets the generic polynomial code
// expand F directly as an oracle for the permanent formulas.
struct cyclo_ring {
  using value_type = cyclo_int;
  std::uint64_t n = 1;
  cyclo_int zero() const { return cyclo_int(n); }
  cyclo_int one() const { return cyclo_int::constant(n, 1); }
  cyclo_int from_integer(std::int64_t v) const { return cyclo_int::constant(n, v); }
  cyclo_int from_integer(const big_int& v) const { return cyclo_int::constant(n, 1) * v; }
  cyclo_int add(const cyclo_int& a, const cyclo_int& b) const { return a + b; }
  cyclo_int sub(const cyclo_int& a, const cyclo_int& b) const { return a - b; }
  cyclo_int mul(const cyclo_int& a, const cyclo_int& b) const { return a * b; }
  cyclo_int neg(const cyclo_int& a) const { return -a; }
  bool is_zero(const cyclo_int& a) const { return a == zero(); }
  std::optional<cyclo_int> inverse(const cyclo_int&) const { return std::nullopt; }
  std::optional<cyclo_int> divide_exact(const cyclo_int&, const cyclo_int&) const { return std::nullopt; }
  std::string to_string(const cyclo_int& a) const { return a.to_string(); }
  cyclo_int parse(const std::string&) const { throw invalid_argument("not parsable"); }
  std::string name() const { return "Z[w_" + std::to_string(n) + "]"; }
  friend bool operator==(const cyclo_ring&, const cyclo_ring&) = default;
};
static_assert(coefficient_ring<cyclo_ring>);

// coefficient of prod x_i^{2m-2} in prod_{i<j} (x_i - x_j)(w_i x_i - x_j)(x_i - w_j x_j)(w_i x_i - w_j x_j)
cyclo_int expanded_coefficient(std::uint64_t n, const std::vector<std::uint64_t>& d) {
  const cyclo_ring R{n};
  const std::size_t m = d.size();
  using F = affine_factor<cyclo_ring>;
  auto w = [&](std::size_t i) { return cyclo_int::monomial(n, static_cast<std::int64_t>(d[i] % n)); };
  const auto one = R.one(), minus = R.from_integer(-1);
  std::vector<F> fs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      fs.push_back(F{{{i, one}, {j, minus}}, R.zero()});
      fs.push_back(F{{{i, w(i)}, {j, minus}}, R.zero()});
      fs.push_back(F{{{i, one}, {j, -w(j)}}, R.zero()});
      fs.push_back(F{{{i, w(i)}, {j, -w(j)}}, R.zero()});
    }
  return product_of_affine_factors(R, m, fs).coefficient(exponent(m, static_cast<std::uint32_t>(2 * m - 2)));
}

std::vector<std::uint64_t> random_units(std::mt19937_64& g, std::uint64_t n, std::size_t m) {
  const auto u = units_mod(static_cast<std::uint32_t>(n));
  std::vector<std::uint64_t> d(m);
  for (auto& v : d) v = u[g() % u.size()];
  return d;
}

// ---- permanents -------------------------------------------------------------------

TEST(PermanentTest, IntegerExamples) {
  square_matrix<big_int> a{{1, 2}, {3, 4}};
  EXPECT_EQ(permanent_naive(a, big_int(0)), 10);
  EXPECT_EQ(permanent_ryser(a, big_int(0)), 10);
  square_matrix<big_int> ones(5, std::vector<big_int>(5, 1));
  EXPECT_EQ(permanent(ones, big_int(0)), 120);
  EXPECT_THROW(permanent_naive(square_matrix<big_int>{}, big_int(0)), invalid_argument);
}

TEST(PermanentTest, RyserMatchesNaive) {
  std::mt19937_64 g(97);
  std::uniform_int_distribution<int> c(-4, 4);
  for (std::size_t m = 1; m <= 8; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      square_matrix<big_int> a(m, std::vector<big_int>(m));
      for (auto& row : a)
        for (auto& x : row) x = c(g);
      EXPECT_EQ(permanent_ryser(a, big_int(0)), permanent_naive(a, big_int(0))) << m;
    }
  }
  // the dispatcher switches to Ryser above 8; all-ones gives m!
  square_matrix<big_int> ones(10, std::vector<big_int>(10, 1));
  EXPECT_EQ(permanent(ones, big_int(0)), factorial(10));
}

TEST(PermanentTest, CycloEntriesRyserMatchesNaive) {
  std::mt19937_64 g(101);
  for (std::uint64_t n : {7u, 9u, 12u}) {
    const auto d = random_units(g, n, 5);
    const auto M = permanent2_matrix(n, d);
    EXPECT_EQ(permanent_ryser(M, cyclo_int(n)), permanent_naive(M, cyclo_int(n)));
  }
}

// ---- the coefficient of F ------------------------------------------------------------

TEST(CoefficientTest, Examples) {
  EXPECT_EQ(permanent2_coefficient(3, {1}), cyclo_int::constant(3, 1));
  EXPECT_EQ(permanent_coefficient(3, {1}), cyclo_int(3, {1, -1}));
  auto x = permanent2_coefficient(5, {1, 1});
  EXPECT_EQ(cyclo_eval_at_one(x), 6);
  EXPECT_FALSE(cyclo_is_zero(x));
  EXPECT_TRUE(cyclo_equal(permanent_coefficient(5, {1, 2}),
                          permanent2_coefficient(5, {1, 2}) * unit_factor_product(5, {1, 2})));
  EXPECT_THROW(permanent2_coefficient(6, {2, 1, 1}), invalid_instance);
  EXPECT_THROW(permanent_coefficient(5, {}), invalid_instance);
}

TEST(CoefficientTest, DivisionByUnitFactorsHolds) {
  std::mt19937_64 g(103);
  for (std::uint64_t n = 3; n <= 9; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto d = random_units(g, n, n / 2);
      EXPECT_TRUE(cyclo_equal(permanent_coefficient(n, d), permanent2_coefficient(n, d) * unit_factor_product(n, d)))
          << n;
    }
  }
}

TEST(CoefficientTest, MatchesExpandedPolynomial) {
  std::mt19937_64 g(107);
  for (std::uint64_t n = 3; n <= 9; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto d = random_units(g, n, n / 2);
      EXPECT_TRUE(cyclo_equal(expanded_coefficient(n, d), permanent2_coefficient(n, d))) << n;
    }
  }
}

TEST(CoefficientTest, ValueAtOneIsIndependentOfD) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const std::size_t m = (p - 1) / 2;
    const big_int expected = factorial(m) * odd_double_factorial(m);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= p - 1;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint64_t> d(m);
      auto code = c;
      for (auto& v : d) {
        v = 1 + code % (p - 1);
        code /= p - 1;
      }
      const auto x = permanent2_coefficient(p, d);
      EXPECT_EQ(cyclo_eval_at_one(x), expected);
      EXPECT_FALSE(cyclo_is_zero(x));
    }
  }
}

TEST(CertificateTest, Examples) {
  auto c = prime_nonzero_certificate(5, {1, 1});
  EXPECT_EQ(c.value_at_one, 6);
  EXPECT_TRUE(c.matches_expected && c.nonzero);
  c = prime_nonzero_certificate(3, {2});
  EXPECT_EQ(c.value_at_one, 1);
  EXPECT_TRUE(c.nonzero);
  c = prime_nonzero_certificate(7, {1, 3, 6});
  EXPECT_EQ(c.value_at_one, 90);
  EXPECT_EQ(c.value_at_one % 7, 6);
  EXPECT_TRUE(c.matches_expected && c.nonzero);
  EXPECT_THROW(prime_nonzero_certificate(9, {1, 1, 1, 1}), invalid_instance);
  EXPECT_THROW(prime_nonzero_certificate(7, {1}), invalid_instance);
}

TEST(CertificateTest, HoldsForLargerPrimes) {
  std::mt19937_64 g(109);
  for (std::uint64_t p : {11u, 13u}) {
    const auto c = prime_nonzero_certificate(p, random_units(g, p, (p - 1) / 2));
    EXPECT_TRUE(c.matches_expected);
    EXPECT_TRUE(c.nonzero);
  }
}

// ---- the divisibility lemma ----------------------------------------------------------

TEST(LemmaTest, Examples) {
  EXPECT_TRUE(divisibility_lemma_check(cyclotomic_poly(5), 5));
  EXPECT_EQ(eval_at_one(cyclotomic_poly(5)), 5);
  EXPECT_TRUE(divisibility_lemma_check({1}, 5));
  const auto f = poly_mul({2, 1}, cyclotomic_poly(7));
  EXPECT_TRUE(divisibility_lemma_check(f, 7));
  EXPECT_EQ(eval_at_one(f), 21);
}

TEST(LemmaTest, RandomPolynomials) {
  std::mt19937_64 g(113);
  std::uniform_int_distribution<int> c(-9, 9);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (int trial = 0; trial < 200; ++trial) {
      int_poly h(1 + g() % 10);
      for (auto& x : h) x = c(g);
      const bool multiple = trial % 2 == 0;
      const auto f = multiple ? poly_mul(h, cyclotomic_poly(p)) : h;
      EXPECT_TRUE(divisibility_lemma_check(f, p));
      if (multiple) {
        EXPECT_TRUE(cyclo_is_zero(cyclo_int(p, f)));
      }
    }
  }
}

// ---- scans ------------------------------------------------------------------------------

TEST(ScanTest, Examples) {
  auto r = scan_conjecture(5, exhaustive_scan{});
  EXPECT_EQ(r.total, 16u);
  EXPECT_TRUE(r.holds());
  r = scan_conjecture(9, exhaustive_scan{});
  EXPECT_EQ(r.total, 1296u);
  EXPECT_EQ(r.feasible, 1296u);
  EXPECT_TRUE(r.failures.empty());
  r = scan_conjecture(4, exhaustive_scan{});
  EXPECT_EQ(r.total, 4u);
  EXPECT_EQ(r.mode, universe::full);
  EXPECT_TRUE(r.holds());
  EXPECT_THROW(scan_conjecture(2, exhaustive_scan{}), invalid_argument);
}

TEST(ScanTest, SmallModuliHold) {
  for (std::uint32_t n = 3; n <= 12; ++n) {
    const auto r = scan_conjecture(n, exhaustive_scan{}, {.threads = 2});
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < n / 2; ++i) expected *= units_mod(n).size();
    EXPECT_EQ(r.total, expected) << n;
    EXPECT_TRUE(r.holds()) << n;
  }
}

TEST(ScanTest, SamplesAreDeterministic) {
  const auto a = scan_conjecture(13, sampled_scan{500, 7}, {.threads = 1});
  const auto b = scan_conjecture(13, sampled_scan{500, 7}, {.threads = 4});
  EXPECT_EQ(io::scan_report_to_json(a, false).dump(), io::scan_report_to_json(b, false).dump());
  EXPECT_EQ(a.total, 500u);
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.seed, 7u);
  EXPECT_EQ(io::scan_report_to_json(a, false).count("seconds"), 0u);
  EXPECT_EQ(io::scan_report_to_json(a, true).count("seconds"), 1u);
}

TEST(ScanTest, ThreadCountDoesNotChangeExhaustiveReport) {
  const auto a = scan_conjecture(11, exhaustive_scan{}, {.threads = 1});
  const auto b = scan_conjecture(11, exhaustive_scan{}, {.threads = 3});
  EXPECT_EQ(io::scan_report_to_json(a, false), io::scan_report_to_json(b, false));
}

class CheckpointTest : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("fpairs_ck_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + ".ndjson");
    std::filesystem::remove(path_);
  }
  void TearDown() override { std::filesystem::remove(path_); }
  std::filesystem::path path_;
};

TEST_F(CheckpointTest, ResumesFromCompletedShards) {
  const auto fresh = scan_conjecture(9, exhaustive_scan{}, {.threads = 2, .checkpoint = path_});
  EXPECT_EQ(fresh.resumed_shards, 0u);

  // keep 10 completed shards and a torn final line, as after an interrupt
  std::vector<std::string> lines;
  {
    std::ifstream in(path_);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  ASSERT_EQ(lines.size(), 36u);
  {
    std::ofstream out(path_, std::ios::trunc);
    for (std::size_t i = 0; i < 10; ++i) out << lines[i] << '\n';
    out << lines[10].substr(0, lines[10].size() / 2);
  }
  const auto resumed = scan_conjecture(9, exhaustive_scan{}, {.threads = 2, .checkpoint = path_});
  EXPECT_EQ(resumed.resumed_shards, 10u);
  EXPECT_EQ(io::scan_report_to_json(resumed, false), io::scan_report_to_json(fresh, false));

  const auto again = scan_conjecture(9, exhaustive_scan{}, {.threads = 1, .checkpoint = path_});
  EXPECT_EQ(again.resumed_shards, 36u);
  EXPECT_EQ(again.total, 1296u);
}

TEST_F(CheckpointTest, RejectsForeignCheckpoint) {
  scan_conjecture(5, exhaustive_scan{}, {.checkpoint = path_});
  EXPECT_THROW(scan_conjecture(7, exhaustive_scan{}, {.checkpoint = path_}), invalid_argument);
}

}  // namespace
}  // namespace fpairs
