#pragma once

// JSON forms of instances, solutions and reports.

#include <fpairs/conjectures/scan.hpp>
#include <fpairs/errors.hpp>
#include <fpairs/poly/multi_poly.hpp>
#include <fpairs/solvers/packing.hpp>
#include <fpairs/solvers/pair_partition.hpp>
#include <fpairs/solvers/vector_partition.hpp>
#include <fpairs/sumsets.hpp>

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace fpairs::io {

using nlohmann::json;

// {"arity": n, "terms": [{"e": [...], "c": "<decimal>"}]}, terms in lexicographic exponent order
template <coefficient_ring R>
json poly_to_json(const multi_poly<R>& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"e", e}, {"c", f.ring().to_string(c)}});
  return {{"arity", f.arity()}, {"terms", terms}};
}

template <coefficient_ring R>
multi_poly<R> poly_from_json(const R& ring, const json& j) {
  multi_poly<R> f(ring, j.at("arity").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("c");
    f.add_term(t.at("e").get<exponent>(), ring.parse(c.is_string() ? c.get<std::string>() : c.dump()));
  }
  return f;
}

// --- pair partitions -------------------------------------------------------

inline partition_instance partition_instance_from_json(const json& j) {
  const auto n = j.at("n").get<std::int64_t>();
  if (n < 2 || n > (1 << 24)) throw invalid_instance("n out of range");
  auto inst = make_partition_instance(static_cast<std::uint32_t>(n), j.at("d").get<std::vector<std::int64_t>>());
  if (j.contains("universe")) inst.mode = parse_universe(j.at("universe").get<std::string>());
  return inst;
}

inline json partition_instance_to_json(const partition_instance& inst) {
  return {{"n", inst.n}, {"universe", to_string(inst.mode)}, {"d", inst.d}};
}

inline json partition_result_to_json(const partition_instance& inst, const partition_result& r) {
  json j = partition_instance_to_json(inst);
  if (r.feasible()) {
    j["result"] = "feasible";
    json pairs = json::array();
    for (const auto& [x, y] : r.solution->pairs) pairs.push_back({x, y});
    j["pairs"] = pairs;
  } else {
    j["result"] = "infeasible";
  }
  j["nodes"] = r.nodes;
  return j;
}

inline pair_partition pair_partition_from_json(const json& j) {
  pair_partition sol;
  for (const auto& p : j.at("pairs")) sol.pairs.emplace_back(p.at(0).get<std::uint32_t>(), p.at(1).get<std::uint32_t>());
  return sol;
}

// --- vector partitions -----------------------------------------------------

inline vector_elem vector_from_json(std::uint32_t p, std::size_t k, const json& j) {
  auto v = make_vector(p, j.get<std::vector<std::int64_t>>());
  if (v.dim() != k) throw dimension_mismatch("vector of length " + std::to_string(v.dim()) + ", expected " + std::to_string(k));
  return v;
}

inline vector_partition_instance vector_instance_from_json(const json& j, bool check_bases = true) {
  vector_partition_instance inst;
  inst.p = j.at("p").get<std::uint32_t>();
  inst.k = j.at("k").get<std::size_t>();
  for (const auto& b : j.at("bases")) {
    std::vector<vector_elem> vs;
    for (const auto& v : b) vs.push_back(vector_from_json(inst.p, inst.k, v));
    inst.bases.push_back(check_bases ? basis(inst.p, inst.k, std::move(vs)) : basis::unchecked(inst.p, inst.k, std::move(vs)));
  }
  return inst;
}

inline json vector_instance_to_json(const vector_partition_instance& inst) {
  json bases = json::array();
  for (const auto& b : inst.bases) {
    json vs = json::array();
    for (const auto& v : b.vectors()) vs.push_back(v.coords);
    bases.push_back(vs);
  }
  return {{"p", inst.p}, {"k", inst.k}, {"bases", bases}};
}

inline json vector_result_to_json(const vector_partition_instance& inst, const vector_partition_result& r) {
  json j = vector_instance_to_json(inst);
  if (r.feasible()) {
    j["result"] = "feasible";
    json pairs = json::array();
    for (const auto& [x, y] : r.solution->pairs) pairs.push_back({x.coords, y.coords});
    j["pairs"] = pairs;
    j["g"] = r.solution->g;
  } else {
    j["result"] = "infeasible";
  }
  j["nodes"] = r.nodes;
  return j;
}

inline vector_partition vector_partition_from_json(const vector_partition_instance& inst, const json& j) {
  vector_partition sol;
  for (const auto& p : j.at("pairs"))
    sol.pairs.emplace_back(vector_from_json(inst.p, inst.k, p.at(0)), vector_from_json(inst.p, inst.k, p.at(1)));
  sol.g = j.at("g").get<std::vector<std::size_t>>();
  return sol;
}

// --- packing -----------------------------------------------------------------

inline packing_instance packing_instance_from_json(const json& j) {
  packing_instance inst;
  const auto& n = j.at("n");
  if (!(n.is_string() && n.get<std::string>() == "integers")) {
    const auto v = n.get<std::int64_t>();
    if (v < 2) throw invalid_instance("n must be >= 2 or \"integers\"");
    inst.modulus = static_cast<std::uint64_t>(v);
  }
  inst.X = j.at("X").get<std::vector<std::vector<std::int64_t>>>();
  inst.T = j.at("T").get<std::vector<std::vector<std::int64_t>>>();
  const auto d = j.at("d").get<std::int64_t>();
  if (d < 1) throw invalid_instance("d must be positive");
  inst.d = static_cast<std::uint64_t>(d);
  return inst;
}

inline json packing_instance_to_json(const packing_instance& inst) {
  json j;
  if (inst.modulus)
    j["n"] = *inst.modulus;
  else
    j["n"] = "integers";
  j["X"] = inst.X;
  j["T"] = inst.T;
  j["d"] = inst.d;
  return j;
}

inline json packing_report_to_json(const packing_report& r) {
  json j = {{"field", r.field},
            {"factorial_nonzero", r.factorial_nonzero},
            {"differences_ok", r.differences_ok},
            {"translates_ok", r.translates_ok},
            {"difference_sizes", r.difference_sizes},
            {"full_translate_sets", r.full_translate_sets},
            {"remark_square", r.remark_square},
            {"remark_weights", r.remark_weights},
            {"guarantee", r.guarantee}};
  if (r.weights) j["weights"] = *r.weights;
  return j;
}

inline json packing_result_to_json(const packing_instance& inst, const packing_result& r, const packing_report& rep) {
  json j = packing_instance_to_json(inst);
  if (r.feasible()) {
    j["result"] = "feasible";
    j["t"] = *r.translates;
  } else {
    j["result"] = "infeasible";
  }
  j["nodes"] = r.nodes;
  j["hypotheses"] = packing_report_to_json(rep);
  return j;
}

// --- reports -----------------------------------------------------------------

inline json scan_report_to_json(const scan_report& r, bool with_timing) {
  json j = {{"n", r.n}, {"universe", to_string(r.mode)}, {"mode", r.sampled ? "sample" : "exhaustive"}};
  if (r.sampled) j["seed"] = r.seed;
  j["total"] = r.total;
  j["feasible"] = r.feasible;
  j["failures"] = r.failures;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

inline std::string scan_report_to_tsv(const scan_report& r, bool with_timing) {
  std::ostringstream os;
  os << "n\tuniverse\tmode\ttotal\tfeasible\tfailures";
  if (with_timing) os << "\tseconds";
  os << '\n'
     << r.n << '\t' << to_string(r.mode) << '\t' << (r.sampled ? "sample" : "exhaustive") << '\t' << r.total << '\t'
     << r.feasible << '\t' << r.failures.size();
  if (with_timing) os << '\t' << r.seconds;
  os << '\n';
  return os.str();
}

inline json sumset_pair_to_json(const sumset_pair& s) {
  return {{"A", s.A}, {"B", s.B}, {"sum", s.sum_size}, {"beta", s.bound}};
}

inline json sumset_report_to_json(const sumset_report& r) {
  json v = json::array(), t = json::array();
  for (const auto& s : r.violations) v.push_back(sumset_pair_to_json(s));
  for (const auto& s : r.tight) t.push_back(sumset_pair_to_json(s));
  return {{"p", r.p},         {"alpha", r.alpha},           {"mode", r.sampled ? "sample" : "exhaustive"},
          {"pairs", r.pairs}, {"violations", v},            {"tight_count", r.tight_count},
          {"tight", t}};
}

}  // namespace fpairs::io
