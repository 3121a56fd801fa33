#pragma once

/**
 * Scans of the Z/(n) pairing conjectures: for every (or a seeded sample of)
 * d in ((Z/n)^*)^m, run the pair-partition solver and collect the d-vectors
 * it certifies infeasible.
 *
 * Exhaustive scans are sharded by the first `prefix_length` coordinates of d.
 * Shards are independent and merged by exact counting, and a completed shard
 * can be appended to a checkpoint file (one JSON object per line) so an
 * interrupted run resumes where it stopped.
 */

#include <fpairs/errors.hpp>
#include <fpairs/solvers/pair_partition.hpp>
#include <fpairs/util/parallel.hpp>
#include <fpairs/util/random.hpp>

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fpairs {

struct exhaustive_scan {};
struct sampled_scan {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using scan_mode = std::variant<exhaustive_scan, sampled_scan>;

struct scan_options {
  unsigned threads = 0;  // 0: FPAIRS_THREADS or 1
  std::optional<std::filesystem::path> checkpoint = std::nullopt;
  std::size_t prefix_length = 2;
};

struct scan_report {
  std::uint32_t n = 0;
  universe mode = universe::nonzero;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t total = 0;
  std::uint64_t feasible = 0;
  std::vector<std::vector<std::uint32_t>> failures;  // sorted
  std::uint64_t resumed_shards = 0;
  double seconds = 0;

  bool holds() const { return failures.empty() && feasible == total; }
};

inline std::vector<std::uint32_t> units_mod(std::uint32_t n) {
  std::vector<std::uint32_t> u;
  for (std::uint32_t v = 1; v < n; ++v)
    if (std::gcd(v, n) == 1) u.push_back(v);
  return u;
}

namespace detail {

struct shard_result {
  std::uint64_t total = 0;
  std::uint64_t feasible = 0;
  std::vector<std::vector<std::uint32_t>> failures;
};

inline bool pairing_exists(std::uint32_t n, universe mode, const std::vector<std::uint32_t>& d) {
  partition_instance inst{n, d, mode, true};
  return solve_pair_partition(inst).feasible();
}

// All d with the given prefix. Feasibility depends only on the multiset of
// differences, so verdicts are cached per sorted d within the shard.
inline shard_result run_shard(std::uint32_t n, universe mode, std::size_t m, const std::vector<std::uint32_t>& units,
                              const std::vector<std::uint32_t>& prefix) {
  shard_result r;
  std::map<std::vector<std::uint32_t>, bool> verdicts;
  std::vector<std::size_t> idx(m - prefix.size(), 0);
  std::vector<std::uint32_t> d(prefix);
  d.resize(m);
  std::vector<std::uint32_t> key(m);
  for (;;) {
    for (std::size_t i = 0; i < idx.size(); ++i) d[prefix.size() + i] = units[idx[i]];
    key = d;
    std::sort(key.begin(), key.end());
    auto it = verdicts.find(key);
    if (it == verdicts.end()) it = verdicts.emplace(key, pairing_exists(n, mode, d)).first;
    ++r.total;
    if (it->second)
      ++r.feasible;
    else
      r.failures.push_back(d);
    std::size_t k = idx.size();
    while (k > 0 && ++idx[k - 1] == units.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return r;
}

inline nlohmann::json shard_to_json(std::uint32_t n, const std::vector<std::uint32_t>& prefix, const shard_result& r) {
  return {{"n", n}, {"prefix", prefix}, {"total", r.total}, {"feasible", r.feasible}, {"failures", r.failures}};
}

inline std::map<std::vector<std::uint32_t>, shard_result> read_checkpoint(const std::filesystem::path& path,
                                                                           std::uint32_t n) {
  std::map<std::vector<std::uint32_t>, shard_result> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;  // torn final line of an interrupted run
    if (j.at("n").get<std::uint32_t>() != n)
      throw invalid_argument("checkpoint " + path.string() + " belongs to n = " + j.at("n").dump());
    shard_result r{j.at("total").get<std::uint64_t>(), j.at("feasible").get<std::uint64_t>(),
                   j.at("failures").get<std::vector<std::vector<std::uint32_t>>>()};
    done[j.at("prefix").get<std::vector<std::uint32_t>>()] = std::move(r);
  }
  return done;
}

}  // namespace detail

inline scan_report scan_conjecture(std::uint32_t n, const scan_mode& mode, const scan_options& opts = {}) {
  if (n < 3) throw invalid_argument("conjecture scans need n >= 3");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = n / 2;
  const universe u = n % 2 ? universe::nonzero : universe::full;
  const auto units = units_mod(n);
  const unsigned threads = resolve_threads(opts.threads);

  scan_report report;
  report.n = n;
  report.mode = u;

  if (const auto* s = std::get_if<sampled_scan>(&mode)) {
    report.sampled = true;
    report.seed = s->seed;
    rng gen(s->seed);
    std::vector<std::vector<std::uint32_t>> draws(s->count, std::vector<std::uint32_t>(m));
    for (auto& d : draws)
      for (auto& v : d) v = units[uniform_below(gen, units.size())];
    auto ok = parallel_map<char>(draws.size(), threads,
                                 [&](std::size_t i) -> char { return detail::pairing_exists(n, u, draws[i]); });
    for (std::size_t i = 0; i < draws.size(); ++i) {
      ++report.total;
      if (ok[i])
        ++report.feasible;
      else
        report.failures.push_back(draws[i]);
    }
  } else {
    const std::size_t L = std::min(opts.prefix_length, m);
    std::vector<std::vector<std::uint32_t>> prefixes{{}};
    for (std::size_t i = 0; i < L; ++i) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& p : prefixes)
        for (auto v : units) {
          next.push_back(p);
          next.back().push_back(v);
        }
      prefixes = std::move(next);
    }
    std::map<std::vector<std::uint32_t>, detail::shard_result> done;
    if (opts.checkpoint) done = detail::read_checkpoint(*opts.checkpoint, n);
    std::mutex io_mu;
    std::ofstream ck;
    if (opts.checkpoint) {
      bool torn = false;
      if (std::ifstream in(*opts.checkpoint, std::ios::binary); in && in.seekg(-1, std::ios::end)) {
        char last = '\n';
        in.get(last);
        torn = last != '\n';
      }
      ck.open(*opts.checkpoint, std::ios::app);
      if (torn) ck << '\n';  // never glue a new shard onto a partial line
    }

    auto shards = parallel_map<detail::shard_result>(prefixes.size(), threads, [&](std::size_t i) {
      if (auto it = done.find(prefixes[i]); it != done.end()) return it->second;
      auto r = detail::run_shard(n, u, m, units, prefixes[i]);
      if (ck.is_open()) {
        std::lock_guard lock(io_mu);
        ck << detail::shard_to_json(n, prefixes[i], r).dump() << '\n';
        ck.flush();
      }
      return r;
    });
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      if (done.contains(prefixes[i])) ++report.resumed_shards;
      report.total += shards[i].total;
      report.feasible += shards[i].feasible;
      for (auto& f : shards[i].failures) report.failures.push_back(std::move(f));
    }
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fpairs
