#include "maroni/json_io.hpp"

namespace maroni {

json to_json(const GradedTate& g) {
  json out = json::array();
  for (const auto& [key, mult] : g.entries())
    out.push_back({{"degree", key.first}, {"weight", key.second}, {"mult", mult}});
  return out;
}

GradedTate graded_from_json(const json& j) {
  GradedTate g;
  for (const auto& rec : j)
    g.add(rec.at("degree").get<int>(), rec.at("weight").get<int>(),
          rec.at("mult").get<long long>());
  return g;
}

json to_json(const SurfaceSpec& spec) {
  return {{"n", spec.n}, {"h", spec.h}, {"d", spec.d}};
}

json to_json(const StratumInfo& info) {
  return {{"n", info.n}, {"d", info.d}, {"g", info.g},
          {"codim", info.codim}, {"dim", info.dim}};
}

json monomials_to_json(const std::vector<Monomial>& basis, const SurfaceSpec& spec) {
  json out = json::array();
  for (const auto& m : basis) {
    if (spec.n == 0)
      out.push_back({m.a, spec.h - m.a, m.b, spec.d - m.b});
    else
      out.push_back({m.a, m.b, m.c});
  }
  return out;
}

json to_json(const VassilievPage& page) {
  json columns;
  for (const auto& [p, col] : page.columns) columns[std::to_string(p)] = to_json(col);
  return {{"spec", to_json(page.spec)},
          {"v", page.v},
          {"cutoff", page.cutoff_n},
          {"valid_from_bm_degree", page.valid_from_bm_degree},
          {"columns", columns},
          {"assumptions", assumptions_spectral()}};
}

json to_json(const CodimReport& report, bool include_timing) {
  json out{{"spec", to_json(report.spec)},
           {"N", report.N},
           {"mode", codim_mode_name(report.mode)},
           {"trials", report.trials},
           {"seed", report.seed},
           {"prime", report.prime},
           {"force_on_e", report.force_on_e},
           {"expected_rank", report.expected_rank},
           {"min_rank", report.min_rank},
           {"failures", report.failures},
           {"failed_trials", report.failed_trials},
           {"seeds_of_failures", report.seeds_of_failures},
           {"escalations", report.escalations}};
  if (report.mode == CodimMode::sharpness)
    out["witnessed_deficit"] = report.witnessed_deficit;
  if (include_timing) out["elapsed"] = report.elapsed_seconds;
  return out;
}

json to_json(const PairedReport& report) {
  return {{"spec", to_json(report.spec)},
          {"k", report.k},
          {"seed", report.seed},
          {"prime", report.prime},
          {"conditions", report.conditions},
          {"rank", report.rank},
          {"kernel_dim", report.kernel_dim},
          {"expected_kernel", report.expected_kernel},
          {"line_family_dim", report.line_family_dim},
          {"ok", report.ok}};
}

json to_json(const TschirnhausenIdeal& ideal) {
  json gens = json::array();
  for (const auto& gen : ideal.generators) {
    json terms = json::array();
    for (const auto& [mono, coeff] : gen.terms)
      terms.push_back({{"n1", mono.a}, {"m1", mono.b}, {"c2", mono.c}, {"coeff", coeff}});
    gens.push_back(terms);
  }
  return {{"g", ideal.g}, {"n", ideal.n}, {"b", ideal.b}, {"generators", gens}};
}

json to_json(const EulerRanks& ranks) {
  json out = json::object();
  for (const auto& [from, rank] : ranks.ranks)
    out[std::to_string(from) + "->" + std::to_string(from + 2)] = rank;
  return out;
}

json to_json(const MaroniTable& table) {
  json cols = json::array();
  for (const auto& col : table.columns) {
    json placed = json::array();
    for (const auto& pc : col.placed)
      placed.push_back(
          {{"p", pc.p}, {"q", pc.q}, {"weight", pc.weight}, {"mult", pc.mult}});
    cols.push_back({{"stratum", to_json(col.stratum)},
                    {"k", col.k},
                    {"window", col.window},
                    {"profile", to_json(col.profile)},
                    {"entries", placed}});
  }
  return {{"g", table.g},
          {"framed", table.framed},
          {"bound", table.bound},
          {"strict", table.strict},
          {"quarters", table.quarters},
          {"columns", cols}};
}

json to_json(const CancellationReport& report) {
  json pairs = json::array();
  for (const auto& pair : report.pairs)
    pairs.push_back({{"source", {{"p", pair.source.p}, {"q", pair.source.q},
                                 {"weight", pair.source.weight}}},
                     {"target", {{"p", pair.target.p}, {"q", pair.target.q},
                                 {"weight", pair.target.weight}}}});
  return {{"pairs", pairs},
          {"survivors", to_json(report.survivors)},
          {"window_degree", report.window_degree}};
}

json assumptions_spectral() {
  return json::array(
      {"the first page of the discriminant spectral sequence degenerates in the stable "
       "range (cross-checked against the product decomposition)"});
}

json assumptions_stratification() {
  return json::array(
      {"fundamental classes of strata with Maroni invariant >= 4 vanish",
       "stratification differentials touching powers of kappa_1 have rank 1",
       "the square of kappa_1 vanishes on each stratum (verified by the graded ideal "
       "computation)"});
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace maroni
