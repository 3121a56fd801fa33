// fpairs: command-line front end.
//
// Exit codes: 0 feasible / pass, 2 certified negative, 1 error (diagnostic on stderr).

#include <fpairs/fpairs.hpp>
#include <fpairs/io/json.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fpairs;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_negative = 2;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return json::parse(text);
}

template <class J>
void emit(const J& j) {
  std::cout << j.dump() << '\n';
}

// Decimal big integers stay JSON numbers while they fit in 64 bits.
ordered_json big_to_json(const big_int& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// ---- partition ------------------------------------------------------------------

struct partition_args {
  std::string input;
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> d;
  std::string universe;
};

int cmd_partition(const partition_args& a) {
  json in;
  if (!a.input.empty()) {
    in = read_json(a.input);
  } else {
    if (!a.n) throw invalid_argument("need --input or --n with --d");
    in = {{"n", *a.n}, {"d", a.d}};
    if (!a.universe.empty()) in["universe"] = a.universe;
  }
  if (in.contains("bases")) {
    const bool check = in.value("check_bases", true);
    const auto inst = io::vector_instance_from_json(in, check);
    const auto r = solve_vector_partition(inst, check);
    auto out = io::vector_result_to_json(inst, r);
    if (!check) out["check_bases"] = false;
    emit(out);
    return r.feasible() ? exit_ok : exit_negative;
  }
  const auto inst = io::partition_instance_from_json(in);
  const auto r = solve_pair_partition(inst);
  emit(io::partition_result_to_json(inst, r));
  return r.feasible() ? exit_ok : exit_negative;
}

// ---- pack -----------------------------------------------------------------------

int cmd_pack(const std::string& input) {
  const auto inst = io::packing_instance_from_json(read_json(input));
  const auto report = check_packing_hypotheses(inst);
  const auto r = solve_translate_packing(inst);
  emit(io::packing_result_to_json(inst, r, report));
  return r.feasible() ? exit_ok : exit_negative;
}

// ---- dyson ----------------------------------------------------------------------

int cmd_dyson(const std::vector<std::uint64_t>& a, std::uint64_t max_degree, std::uint64_t budget) {
  const dyson_instance inst(a);
  const auto formula = dyson_formula(inst);
  const auto brute = dyson_bruteforce(inst, max_degree, expansion_budget{budget});
  const auto eval = dyson_via_evaluation(inst);
  ordered_json out;
  out["formula"] = big_to_json(formula);
  out["bruteforce"] = big_to_json(brute);
  out["evaluation"] = big_to_json(eval);
  emit(out);
  return formula == brute && brute == eval ? exit_ok : exit_negative;
}

// ---- cn-coeff -------------------------------------------------------------------

struct cn_args {
  std::string input;
  std::string grid;
  std::optional<std::uint64_t> modulus;
  bool rationals = false;
  bool pairing = false;
  std::optional<std::uint64_t> p;
  std::vector<std::int64_t> d;
  unsigned threads = 0;
};

template <coefficient_ring R>
int run_cn(const R& ring, const cn_args& a) {
  const auto f = io::poly_from_json(ring, read_json(a.input));
  std::vector<std::vector<typename R::value_type>> sets;
  for (const auto& block : split(a.grid, ';')) {
    sets.emplace_back();
    for (const auto& tok : split(block, ','))
      if (!tok.empty()) sets.back().push_back(ring.parse(tok));
  }
  const grid_spec<R> grid(ring, std::move(sets));
  const auto c = cn_coefficient(f, grid, resolve_threads(a.threads));
  const auto w = cn_witness(f, grid);
  ordered_json out;
  out["ring"] = ring.name();
  out["target"] = grid.target();
  out["coefficient"] = ring.to_string(c);
  if (w) {
    ordered_json pt = ordered_json::array();
    for (const auto& v : *w) pt.push_back(ring.to_string(v));
    out["witness"] = pt;
  } else {
    out["witness"] = nullptr;
  }
  emit(out);
  return exit_ok;
}

// Pairing polynomial f of d over F_p: its integral, the integral of the
// odd-numbers polynomial, the top coefficient and a grid witness.
int run_pairing(const cn_args& a) {
  if (!a.p || *a.p < 3 || !is_prime(*a.p)) throw invalid_argument("--pairing needs an odd prime --p");
  const mod_ring F(*a.p);
  const std::size_t m = a.d.size();
  if (m == 0 || 2 * m > *a.p - 1) throw invalid_argument("need 1 <= |d| <= (p - 1)/2");
  std::vector<mod_elem> d;
  for (auto v : a.d) {
    d.push_back(F(v));
    if (d.back() == F.zero()) throw invalid_instance("zero difference");
  }
  const unsigned threads = resolve_threads(a.threads);
  const auto f = pairing_polynomial(F, d);
  const auto integral_f = integral_over_field(f, threads);
  const auto integral_g = integral_over_field(odd_numbers_polynomial(F, m), threads);
  std::vector<mod_elem> all;
  for (std::uint64_t v = 0; v < *a.p; ++v) all.push_back(F(static_cast<std::int64_t>(v)));
  const auto coeff = cn_coefficient(f, grid_spec<mod_ring>(F, std::vector(m, all)), threads);
  const auto w = cn_witness(pair_disjointness_polynomial(F, d), pairing_grid(F, d));

  ordered_json out;
  out["p"] = *a.p;
  std::vector<std::uint64_t> dv;
  for (const auto& v : d) dv.push_back(v.value);
  out["d"] = dv;
  out["integral_f"] = integral_f.value;
  out["integral_g"] = integral_g.value;
  out["coefficient"] = coeff.value;
  if (w) {
    std::vector<std::uint64_t> pt;
    for (const auto& v : *w) pt.push_back(v.value);
    out["witness"] = pt;
    ordered_json pairs = ordered_json::array();
    for (std::size_t i = 0; i < m; ++i) pairs.push_back({pt[i], (pt[i] + dv[i]) % *a.p});
    out["pairs"] = pairs;
  } else {
    out["witness"] = nullptr;
  }
  emit(out);
  return w ? exit_ok : exit_negative;
}

int cmd_cn(const cn_args& a) {
  if (a.pairing) return run_pairing(a);
  if (a.input.empty() || a.grid.empty()) throw invalid_argument("need --input and --grid (or --pairing)");
  if (a.modulus) return run_cn(mod_ring(*a.modulus), a);
  if (a.rationals) return run_cn(rational_ring{}, a);
  return run_cn(integer_ring{}, a);
}

// ---- conjecture-scan ------------------------------------------------------------

struct scan_args {
  std::uint32_t n = 0;
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
  std::string checkpoint;
  std::string format = "json";
  unsigned threads = 0;
  bool timing = false;
};

int cmd_scan(const scan_args& a) {
  scan_options opts;
  opts.threads = a.threads;
  scan_mode mode = exhaustive_scan{};
  if (a.sample) {
    if (!a.seed) throw invalid_argument("--seed is required with --sample");
    if (!a.checkpoint.empty()) throw invalid_argument("--checkpoint applies to exhaustive scans only");
    mode = sampled_scan{*a.sample, *a.seed};
  }
  if (!a.checkpoint.empty()) opts.checkpoint = a.checkpoint;
  const auto r = scan_conjecture(a.n, mode, opts);
  if (a.format == "tsv")
    std::cout << io::scan_report_to_tsv(r, a.timing);
  else
    emit(io::scan_report_to_json(r, a.timing));
  return r.holds() ? exit_ok : exit_negative;
}

// ---- sumset ---------------------------------------------------------------------

struct sumset_args {
  std::uint64_t p = 0;
  std::uint64_t alpha = 1;
  std::optional<std::uint64_t> sample;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_tight = 100;
  unsigned threads = 0;
};

int cmd_sumset(const sumset_args& a) {
  sumset_options opts;
  opts.threads = a.threads;
  opts.max_tight = a.max_tight;
  if (a.sample) {
    if (!a.seed) throw invalid_argument("--seed is required with --sample");
    opts.sample_count = *a.sample;
    opts.seed = *a.seed;
  }
  const auto r = verify_cd_bound(a.p, a.alpha, opts);
  emit(io::sumset_report_to_json(r));
  return r.violations.empty() ? exit_ok : exit_negative;
}

// ---- verify ---------------------------------------------------------------------

// Feasible results are checked directly; "infeasible" claims are re-derived by a fresh search.
int cmd_verify(const std::string& input) {
  const auto in = read_json(input);
  const bool claims_feasible = in.at("result").get<std::string>() == "feasible";
  bool valid = false;
  std::string kind;
  if (in.contains("bases")) {
    kind = "vector-partition";
    const bool check = in.value("check_bases", true);
    const auto inst = io::vector_instance_from_json(in, check);
    valid = claims_feasible ? verify_solution(inst, io::vector_partition_from_json(inst, in))
                            : !solve_vector_partition(inst, check).feasible();
  } else if (in.contains("X")) {
    kind = "packing";
    const auto inst = io::packing_instance_from_json(in);
    valid = claims_feasible ? verify_solution(inst, in.at("t").get<std::vector<std::int64_t>>())
                            : !solve_translate_packing(inst).feasible();
  } else {
    kind = "pair-partition";
    const auto inst = io::partition_instance_from_json(in);
    valid = claims_feasible ? verify_solution(inst, io::pair_partition_from_json(in))
                            : !solve_pair_partition(inst).feasible();
  }
  ordered_json out;
  out["kind"] = kind;
  out["result"] = claims_feasible ? "feasible" : "infeasible";
  out["valid"] = valid;
  emit(out);
  return valid ? exit_ok : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pair partitions with prescribed differences, and the polynomial-method tools behind them."};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 feasible/pass, 2 certified negative, 1 error.\n"
             "Worker threads default to $FPAIRS_THREADS, else 1.");

  partition_args part;
  auto* partition = app.add_subcommand("partition", "Pair-partition or vector-partition solver");
  auto* part_in = partition->add_option("--input", part.input, "Instance JSON file ('-' for stdin)");
  partition->add_option("--n", part.n, "Modulus")->excludes(part_in);
  partition->add_option("--d", part.d, "Differences, comma separated")->delimiter(',')->excludes(part_in);
  partition->add_option("--universe", part.universe, "nonzero | full (default: by parity of n)")
      ->check(CLI::IsMember({"nonzero", "full"}))
      ->excludes(part_in);

  std::string pack_input;
  auto* pack = app.add_subcommand("pack", "Translate packing solver with hypothesis report");
  pack->add_option("--input", pack_input, "Packing JSON file ('-' for stdin)")->required();

  std::vector<std::uint64_t> dyson_a;
  std::uint64_t max_degree = 24;
  std::uint64_t budget = expansion_budget{}.max_terms;
  auto* dyson = app.add_subcommand("dyson", "Constant term by formula, expansion and evaluation");
  dyson->add_option("--a", dyson_a, "Exponents, comma separated")->delimiter(',')->required();
  dyson->add_option("--max-degree", max_degree, "Largest total degree to expand")->capture_default_str();
  dyson->add_option("--budget", budget, "Term budget for expansion")->capture_default_str();

  cn_args cn;
  auto* cnc = app.add_subcommand("cn-coeff", "Coefficient from grid values");
  auto* cn_pairing = cnc->add_flag("--pairing", cn.pairing, "Pairing polynomial over F_p for --d");
  cnc->add_option("--input", cn.input, "Polynomial JSON file ('-' for stdin)")->excludes(cn_pairing);
  cnc->add_option("--grid", cn.grid, "Grid sets, e.g. \"0,1;0,1\"")->excludes(cn_pairing);
  auto* cn_mod = cnc->add_option("--modulus", cn.modulus, "Coefficients in Z/(n) (default: integers)");
  cnc->add_flag("--rationals", cn.rationals, "Coefficients in Q")->excludes(cn_mod);
  cnc->add_option("--p", cn.p, "Prime for --pairing")->needs(cn_pairing);
  cnc->add_option("--d", cn.d, "Differences for --pairing")->delimiter(',')->needs(cn_pairing);
  cnc->add_option("--threads", cn.threads, "Worker threads");

  scan_args sc;
  auto* scan = app.add_subcommand("conjecture-scan", "Pair-partition scan over all unit d-vectors mod n");
  scan->add_option("--n", sc.n, "Modulus")->required();
  auto* sc_ex = scan->add_flag("--exhaustive", "Enumerate every d-vector (default)");
  scan->add_option("--sample", sc.sample, "Number of seeded random d-vectors")->excludes(sc_ex);
  scan->add_option("--seed", sc.seed, "Seed (required with --sample)");
  scan->add_option("--checkpoint", sc.checkpoint, "Append completed shards here and resume from it");
  scan->add_option("--format", sc.format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  scan->add_option("--threads", sc.threads, "Worker threads");
  scan->add_flag("--timing", sc.timing, "Include wall-clock seconds");

  sumset_args ss;
  auto* sumset = app.add_subcommand("sumset", "Check |A + B| >= beta_p(|A|, |B|) in Z/(p^alpha)");
  sumset->add_option("--p", ss.p, "Prime")->required();
  sumset->add_option("--alpha", ss.alpha, "Exponent")->capture_default_str();
  auto* ss_ex = sumset->add_flag("--exhaustive", "Enumerate every pair (default)");
  sumset->add_option("--sample", ss.sample, "Number of seeded random pairs")->excludes(ss_ex);
  sumset->add_option("--seed", ss.seed, "Seed (required with --sample)");
  sumset->add_option("--max-tight", ss.max_tight, "Equality cases to list")->capture_default_str();
  sumset->add_option("--threads", ss.threads, "Worker threads");

  std::string verify_input;
  auto* verify = app.add_subcommand("verify", "Re-check a result emitted by partition or pack");
  verify->add_option("--input", verify_input, "Result JSON file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*partition) return cmd_partition(part);
    if (*pack) return cmd_pack(pack_input);
    if (*dyson) return cmd_dyson(dyson_a, max_degree, budget);
    if (*cnc) return cmd_cn(cn);
    if (*scan) return cmd_scan(sc);
    if (*sumset) return cmd_sumset(ss);
    if (*verify) return cmd_verify(verify_input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
