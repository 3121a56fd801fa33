// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Wall time is printed next to each budget; exceeding it is reported, not failed.

#include <fpairs/fpairs.hpp>
#include <fpairs/io/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace fpairs;

unsigned worker_count() {
  const unsigned env = resolve_threads(0);
  if (std::getenv("FPAIRS_THREADS")) return env;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Collects the first few mismatches of a criterion.
struct check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

struct criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(check&, std::string&)> run;
};

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// d in (1..base)^m from a mixed-radix code
std::vector<std::uint32_t> decode_vector(std::uint64_t code, std::uint32_t base, std::size_t m) {
  std::vector<std::uint32_t> d(m);
  for (auto& v : d) {
    v = 1 + static_cast<std::uint32_t>(code % base);
    code /= base;
  }
  return d;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// ---- 1 ------------------------------------------------------------------------

void dyson_identity(check& c, std::string& summary) {
  // n = 1 has no pairs; its exponent is capped at 16 as well
  std::vector<std::vector<std::uint64_t>> instances;
  std::vector<std::uint64_t> a;
  std::function<void(std::uint64_t)> grow = [&](std::uint64_t sum) {
    for (std::uint64_t v = 1; v <= 16; ++v) {
      if (a.size() * (sum + v) > 16 && !a.empty()) break;
      a.push_back(v);
      instances.push_back(a);
      if (a.size() < 4) grow(sum + v);
      a.pop_back();
    }
  };
  grow(0);
  for (const auto& v : instances) {
    const dyson_instance inst(v);
    const auto f = dyson_formula(inst);
    const auto b = dyson_bruteforce(inst, 16);
    const auto e = dyson_via_evaluation(inst);
    c.expect(f == b && b == e, "a=" + join(std::vector<std::uint32_t>(v.begin(), v.end())) + ": " + f.str() + " " +
                                   b.str() + " " + e.str());
  }
  summary = std::to_string(instances.size()) + " a-vectors";
}

// ---- 2 ------------------------------------------------------------------------

void quartic_coefficient(check& c, std::string& summary) {
  const integer_ring Z;
  for (std::size_t m = 1; m <= 3; ++m) {
    factored_poly<integer_ring> f(Z, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (int r = 0; r < 4; ++r) f.push(affine_factor<integer_ring>::difference(Z, i, j, 0));
    const auto coeff = f.expand().coefficient(exponent(m, static_cast<std::uint32_t>(2 * m - 2)));
    const big_int expected = factorial(2 * m) / (big_int(1) << m);
    c.expect(coeff == expected, "m=" + std::to_string(m) + ": " + coeff.str() + " vs " + expected.str());
    c.expect(packing_coefficient(m, 2) == expected, "packing_coefficient m=" + std::to_string(m));
  }
  int primes = 0;
  for (std::uint64_t p = 3; p <= 23; p += 2) {
    if (!is_prime(p)) continue;
    const std::uint64_t m = (p - 1) / 2;
    const big_int value = factorial(2 * m) / (big_int(1) << m);
    c.expect(value % p != 0, "divisible by p=" + std::to_string(p));
    c.expect(factorial_quotient_mod(m, 2, p).value != 0, "factorial quotient vanishes mod " + std::to_string(p));
    ++primes;
  }
  summary = "m<=3 expanded, " + std::to_string(primes) + " primes";
}

// ---- 3 ------------------------------------------------------------------------

void pair_partition_exhaustive(check& c, std::string& summary) {
  const unsigned threads = worker_count();
  std::uint64_t total = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const std::size_t m = (p - 1) / 2;
    const std::uint64_t count = power(p - 1, m);
    auto ok = parallel_map<char>(count, threads, [&](std::size_t code) -> char {
      partition_instance inst{p, decode_vector(code, p - 1, m), universe::nonzero, false};
      auto r = solve_pair_partition(inst);
      return r.feasible() && verify_solution(inst, *r.solution);
    });
    for (std::uint64_t code = 0; code < count; ++code)
      c.expect(ok[code], "p=" + std::to_string(p) + " d=" + join(decode_vector(code, p - 1, m)));
    total += count;
  }
  summary = std::to_string(total) + " instances";
}

// ---- 4 ------------------------------------------------------------------------

void counterexamples(check& c, std::string& summary) {
  // d_i = n/q: (9, 3) gives all 3s, (15, 3) all 5s, (15, 5) all 3s
  for (auto [n, q] : {std::pair{9u, 3u}, std::pair{15u, 3u}, std::pair{15u, 5u}}) {
    const auto inst = zn_counterexample(n, q);
    c.expect(inst.d == std::vector<std::uint32_t>((n - 1) / 2, n / q), "shape n=" + std::to_string(n));
    c.expect(!solve_pair_partition(inst).feasible(),
             "n=" + std::to_string(n) + " d=" + join(inst.d) + " found a partition");
  }
  const auto single = single_direction_counterexample(3, 2);
  c.expect(!solve_vector_partition(single, false).feasible(), "single-direction instance found a partition");
  bool rejected = false;
  try {
    solve_vector_partition(single, true);
  } catch (const invalid_instance&) {
    rejected = true;
  }
  c.expect(rejected, "single-direction instance accepted as bases");
  summary = "4 instances infeasible";
}

// ---- 5 ------------------------------------------------------------------------

basis random_basis(rng& g, std::uint32_t p, std::size_t k) {
  const auto size = power(p, k);
  for (;;) {
    std::vector<vector_elem> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(decode(uniform_below(g, size), p, k));
    if (is_basis(vs, p, k)) return basis(p, k, vs);
  }
}

void vector_partition_sampled(check& c, std::string& summary) {
  rng g(20240501);
  for (int trial = 0; trial < 1000; ++trial) {
    vector_partition_instance inst{3, 2, {}};
    for (int i = 0; i < 4; ++i) inst.bases.push_back(random_basis(g, 3, 2));
    auto r = solve_vector_partition(inst);
    c.expect(r.feasible() && verify_solution(inst, *r.solution),
             "trial " + std::to_string(trial) + ": " + io::vector_instance_to_json(inst).dump());
  }
  summary = "1000 basis 4-tuples";
}

// ---- 6 ------------------------------------------------------------------------

std::vector<std::int64_t> random_subset(rng& g, std::uint64_t p, std::size_t size) {
  std::set<std::int64_t> s;
  while (s.size() < size) s.insert(static_cast<std::int64_t>(uniform_below(g, p)));
  return {s.begin(), s.end()};
}

void packing_theorem(check& c, std::string& summary) {
  rng g(7031);
  const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
  std::uint64_t accepted = 0, drawn = 0;
  while (accepted < 10000) {
    ++drawn;
    const std::uint64_t p = primes[uniform_below(g, primes.size())];
    const std::uint64_t d = 1 + uniform_below(g, 3);
    if (d >= p) continue;
    const std::size_t max_m = (p - 1) / d;
    const std::size_t m = 1 + uniform_below(g, std::min<std::size_t>(max_m, 6));
    packing_instance inst{p, {}, {}, d};
    for (std::size_t i = 0; i < m; ++i) {
      inst.X.push_back(random_subset(g, p, 1 + uniform_below(g, std::min<std::uint64_t>(d + 1, 3))));
      const std::size_t ts = std::min<std::uint64_t>(p, (m - 1) * d + 1 + uniform_below(g, 3));
      inst.T.push_back(random_subset(g, p, ts));
    }
    const auto rep = check_packing_hypotheses(inst);
    if (rep.guarantee != "theorem") continue;
    ++accepted;
    auto r = solve_translate_packing(inst);
    c.expect(r.feasible() && verify_solution(inst, *r.translates), io::packing_instance_to_json(inst).dump());
  }

  std::uint64_t reductions = 0;
  for (std::uint32_t p : {5u, 7u}) {
    const std::size_t m = (p - 1) / 2;
    for (std::uint64_t code = 0; code < power(p - 1, m); ++code) {
      const auto d = decode_vector(code, p - 1, m);
      packing_instance inst{p, {}, {}, 2};
      for (auto di : d) {
        inst.X.push_back({0, static_cast<std::int64_t>(di)});
        std::vector<std::int64_t> t;
        for (std::uint32_t v = 1; v < p; ++v)
          if ((v + di) % p != 0) t.push_back(v);
        inst.T.push_back(t);
      }
      c.expect(check_packing_hypotheses(inst).guarantee == "theorem", "reduction hypotheses p=" + std::to_string(p));
      auto r = solve_translate_packing(inst);
      bool ok = r.feasible();
      if (ok) {
        partition_instance part{p, d, universe::nonzero, false};
        pair_partition sol;
        for (std::size_t i = 0; i < m; ++i) {
          const auto x = static_cast<std::uint32_t>((*r.translates)[i]);
          sol.pairs.emplace_back(x, (x + d[i]) % p);
        }
        ok = verify_solution(part, sol);
      }
      c.expect(ok, "reduction p=" + std::to_string(p) + " d=" + join(d));
      ++reductions;
    }
  }
  summary = std::to_string(accepted) + " of " + std::to_string(drawn) + " draws met the hypotheses, " +
            std::to_string(reductions) + " reductions";
}

// ---- 7 ------------------------------------------------------------------------

void integral_identity(check& c, std::string& summary) {
  rng g(4242);
  const unsigned threads = worker_count();
  for (std::uint64_t p : {5u, 7u}) {
    const mod_ring F(p);
    const std::size_t m = (p - 1) / 2;
    const auto ig = integral_over_field(odd_numbers_polynomial(F, m), threads);
    c.expect(ig != F.zero(), "integral of g vanishes for p=" + std::to_string(p));
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<mod_elem> d;
      for (std::size_t i = 0; i < m; ++i) d.push_back(F(static_cast<std::int64_t>(1 + uniform_below(g, p - 1))));
      const auto f = integral_over_field(pairing_polynomial(F, d), threads);
      c.expect(f == ig, "p=" + std::to_string(p) + ": " + F.to_string(f) + " vs " + F.to_string(ig));
    }
  }
  summary = "200 d-vectors";
}

// ---- 8 ------------------------------------------------------------------------

void cn_matches_expansion(check& c, std::string& summary) {
  rng g(99);
  const rational_ring Q;
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 1 + uniform_below(g, 3);
    std::vector<std::vector<big_rational>> sets(n);
    std::uint64_t csum = 0;
    for (auto& s : sets) {
      const std::size_t size = 1 + uniform_below(g, 4);
      std::set<std::int64_t> pts;
      while (pts.size() < size) pts.insert(static_cast<std::int64_t>(uniform_below(g, 11)) - 5);
      for (auto v : pts) s.push_back(Q.from_integer(v));
      csum += size - 1;
    }
    if (csum > 9) continue;
    multi_poly<rational_ring> f(Q, n);
    const std::uint64_t terms = 1 + uniform_below(g, 10);
    for (std::uint64_t t = 0; t < terms; ++t) {
      exponent e(n, 0);
      std::uint64_t left = uniform_below(g, csum + 1);
      for (std::size_t i = 0; i < n && left > 0; ++i) {
        e[i] = static_cast<std::uint32_t>(uniform_below(g, left + 1));
        left -= e[i];
      }
      f.add_term(e, Q.from_integer(static_cast<std::int64_t>(uniform_below(g, 21)) - 10));
    }
    const grid_spec<rational_ring> grid(Q, sets);
    const auto got = cn_coefficient(f, grid);
    const auto want = f.coefficient(grid.target());
    c.expect(got == want, "cn " + Q.to_string(got) + " vs expansion " + Q.to_string(want));
    ++checked;
  }
  summary = "200 polynomials";
}

// ---- 9 ------------------------------------------------------------------------

void cyclotomic_permanents(check& c, std::string& summary) {
  rng g(31337);
  int sampled = 0;
  for (std::uint64_t n = 3; n <= 9; ++n) {
    const auto units = units_mod(static_cast<std::uint32_t>(n));
    const std::size_t m = n / 2;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint64_t> d(m);
      for (auto& v : d) v = units[uniform_below(g, units.size())];
      const auto lhs = permanent_coefficient(n, d);
      const auto rhs = permanent2_coefficient(n, d) * unit_factor_product(n, d);
      c.expect(cyclo_equal(lhs, rhs), "n=" + std::to_string(n));
      ++sampled;
    }
  }
  std::uint64_t exhaustive = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const std::size_t m = (p - 1) / 2;
    const big_int expected = factorial(m) * odd_double_factorial(m);
    for (std::uint64_t code = 0; code < power(p - 1, m); ++code) {
      const auto d32 = decode_vector(code, p - 1, m);
      const std::vector<std::uint64_t> d(d32.begin(), d32.end());
      const auto cert = prime_nonzero_certificate(p, d);
      c.expect(cert.value_at_one == expected && cert.matches_expected, "p=" + std::to_string(p) + " d=" + join(d32));
      c.expect(cert.nonzero, "certificate failed p=" + std::to_string(p) + " d=" + join(d32));
      ++exhaustive;
    }
  }
  summary = std::to_string(sampled) + " sampled identities, " + std::to_string(exhaustive) + " certificates";
}

// ---- 10 -----------------------------------------------------------------------

void conjecture_scans(check& c, std::string& summary) {
  const unsigned threads = worker_count();
  std::uint64_t total = 0;
  for (std::uint32_t n = 3; n <= 15; ++n) {
    const auto r = scan_conjecture(n, exhaustive_scan{}, {.threads = threads});
    c.expect(r.holds(), "n=" + std::to_string(n) + " failures=" + std::to_string(r.failures.size()));
    c.expect(r.total == power(units_mod(n).size(), n / 2), "n=" + std::to_string(n) + " incomplete enumeration");
    total += r.total;
  }
  const auto s = scan_conjecture(24, sampled_scan{100000, 24}, {.threads = threads});
  c.expect(s.holds() && s.total == 100000, "n=24 sampled failures=" + std::to_string(s.failures.size()));
  summary = std::to_string(total) + " exhaustive d-vectors for n=3..15, 100000 samples at n=24";
}

// ---- 11 -----------------------------------------------------------------------

void sumset_bound(check& c, std::string& summary) {
  const unsigned threads = worker_count();
  std::uint64_t pairs = 0;
  for (auto [p, alpha] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    const auto r = verify_cd_bound(p, alpha, {.threads = threads});
    c.expect(r.violations.empty(), "violations in Z/(" + std::to_string(r.modulus) + ")");
    const std::uint64_t subsets = (std::uint64_t{1} << r.modulus) - 1;
    c.expect(r.pairs == subsets * subsets, "incomplete enumeration of Z/(" + std::to_string(r.modulus) + ")");
    pairs += r.pairs;
  }
  c.expect(beta(5, 2, 2) == 3, "beta_5(2,2)");
  c.expect(beta(2, 2, 2) == 2, "beta_2(2,2)");
  summary = std::to_string(pairs) + " pairs";
}

// ---- 12 -----------------------------------------------------------------------

void property_suites(check& c, std::string& summary) {
  rng g(1212);
  // soundness: solve, serialize, parse back, verify
  int roundtrips = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(uniform_below(g, 14));
    std::vector<std::int64_t> d((n % 2 ? n - 1 : n) / 2);
    for (auto& v : d) v = 1 + static_cast<std::int64_t>(uniform_below(g, n - 1));
    const auto inst = make_partition_instance(n, d);
    const auto out = io::partition_result_to_json(inst, solve_pair_partition(inst));
    const auto back = nlohmann::json::parse(out.dump());
    const auto inst2 = io::partition_instance_from_json(back);
    if (back.at("result") == "feasible")
      c.expect(verify_solution(inst2, io::pair_partition_from_json(back)), "pair round trip " + out.dump());
    else
      c.expect(!solve_pair_partition(inst2).feasible(), "pair infeasibility not reproduced " + out.dump());
    ++roundtrips;
  }
  for (int trial = 0; trial < 100; ++trial) {
    vector_partition_instance inst{3, 2, {}};
    for (int i = 0; i < 4; ++i) inst.bases.push_back(random_basis(g, 3, 2));
    const auto out = nlohmann::json::parse(io::vector_result_to_json(inst, solve_vector_partition(inst)).dump());
    const auto inst2 = io::vector_instance_from_json(out);
    c.expect(verify_solution(inst2, io::vector_partition_from_json(inst2, out)), "vector round trip " + out.dump());
    ++roundtrips;
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11}[uniform_below(g, 3)];
    packing_instance inst{p, {}, {}, 1};
    const std::size_t m = 1 + uniform_below(g, 3);
    for (std::size_t i = 0; i < m; ++i) {
      inst.X.push_back(random_subset(g, p, 1 + uniform_below(g, 2)));
      inst.T.push_back(random_subset(g, p, 1 + uniform_below(g, p)));
    }
    const auto r = solve_translate_packing(inst);
    const auto out = nlohmann::json::parse(
        io::packing_result_to_json(inst, r, check_packing_hypotheses(inst)).dump());
    const auto inst2 = io::packing_instance_from_json(out);
    if (out.at("result") == "feasible")
      c.expect(verify_solution(inst2, out.at("t").get<std::vector<std::int64_t>>()), "packing round trip " + out.dump());
    else
      c.expect(!solve_translate_packing(inst2).feasible(), "packing infeasibility not reproduced " + out.dump());
    ++roundtrips;
  }

  // divisibility lemma on multiples of Phi_p
  const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = primes[uniform_below(g, primes.size())];
    int_poly h(1 + uniform_below(g, 2 * p));
    for (auto& v : h) v = static_cast<std::int64_t>(uniform_below(g, 41)) - 20;
    const auto f = poly_mul(h, cyclotomic_poly(p));
    c.expect(cyclo_is_zero(cyclo_int(p, f)), "Phi_p multiple not zero at w");
    c.expect(eval_at_one(f) % p == 0, "Phi_p multiple not divisible at 1");
    c.expect(divisibility_lemma_check(f, p), "lemma check failed");
  }

  // determinism: identical configuration, different worker counts
  const auto s1 = io::scan_report_to_json(scan_conjecture(13, sampled_scan{2000, 5}, {.threads = 1}), false).dump();
  const auto s4 = io::scan_report_to_json(scan_conjecture(13, sampled_scan{2000, 5}, {.threads = 4}), false).dump();
  c.expect(s1 == s4, "sampled scan differs across thread counts");
  const auto e1 = io::scan_report_to_json(scan_conjecture(11, exhaustive_scan{}, {.threads = 1}), false).dump();
  const auto e3 = io::scan_report_to_json(scan_conjecture(11, exhaustive_scan{}, {.threads = 3}), false).dump();
  c.expect(e1 == e3, "exhaustive scan differs across thread counts");
  const auto u1 = io::sumset_report_to_json(verify_cd_bound(5, 2, {.sample_count = 3000, .seed = 8, .max_tight = 20}));
  const auto u2 = io::sumset_report_to_json(
      verify_cd_bound(5, 2, {.sample_count = 3000, .seed = 8, .max_tight = 20, .threads = 4}));
  c.expect(u1.dump() == u2.dump(), "sampled sumset report differs across thread counts");
  const auto inst = make_partition_instance(17, {1, 2, 3, 4, 5, 6, 7, 8});
  c.expect(io::partition_result_to_json(inst, solve_pair_partition(inst)).dump() ==
               io::partition_result_to_json(inst, solve_pair_partition(inst)).dump(),
           "solver output not reproducible");

  summary = std::to_string(roundtrips) + " round trips, 1000 Phi_p multiples, 4 determinism checks";
}

}  // namespace

int main() {
  const std::vector<criterion> criteria{
      {1, "Dyson constant term, three routes agree", 60, dyson_identity},
      {2, "coefficient of prod x_i^(2m-2) in prod (x_i-x_j)^4", 30, quartic_coefficient},
      {3, "pair partitions of F_p^*, p in {3,5,7,11}, all d", 300, pair_partition_exhaustive},
      {4, "counterexamples certified infeasible", 10, counterexamples},
      {5, "vector partitions, p=3 k=2, random bases", 120, vector_partition_sampled},
      {6, "translate packing under the hypotheses", 300, packing_theorem},
      {7, "integral of pairing polynomial equals odd-numbers integral", 120, integral_identity},
      {8, "grid-sum coefficient equals expansion", 30, cn_matches_expansion},
      {9, "cyclotomic permanents and nonzero certificates", 120, cyclotomic_permanents},
      {10, "unit-difference scans, n=3..15 exhaustive, n=24 sampled", 900, conjecture_scans},
      {11, "|A+B| >= beta_p(|A|,|B|) in Z/4, Z/8, Z/9", 300, sumset_bound},
      {12, "round trips, Phi_p-multiple fuzzing, determinism", 300, property_suites},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    check c;
    std::string summary;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c, summary);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.1fs / budget %.0fs%s", secs, cr.budget_seconds,
                  secs > cr.budget_seconds ? " OVER BUDGET" : "");
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " [" << summary << "] ("
              << timing << ")\n";
    for (const auto& note : c.notes) std::cout << "    " << note << '\n';
    std::cout.flush();
    if (!c.ok) ++failed;
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
