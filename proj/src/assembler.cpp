#include "maroni/assembler.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace maroni {

StableRange stable_range(int g, bool framed) {
  (void)framed;  // the per-stratum windows agree, so the minimization does too
  if (g < 8) throw spec_error(errc::range_violation, "stable range needs g >= 8");
  long long best = LLONG_MAX;
  for (const auto& st : maroni_strata(g)) {
    // 2*codim + (d-3n+1)/2 in quarter integers.
    long long quarters = st.n == 0 ? (g + 4) : (g + 5LL * st.n - 4);
    best = std::min(best, quarters);
  }
  const long long r4 = best - 4;
  const long long expected = g % 2 == 0 ? g : g - 3;
  if (r4 != expected)
    throw consistency_error(errc::inconsistent,
                            "stratification minimization does not reduce to the closed form");
  return StableRange{static_cast<int>(r4 / 4), r4 % 4 == 0, r4};
}

MaroniTable build_maroni_table(int g, bool framed) {
  const StableRange range = stable_range(g, framed);
  MaroniTable table;
  table.g = g;
  table.framed = framed;
  table.bound = range.bound;
  table.strict = range.strict;
  table.quarters = range.quarters;

  int k = 0;
  for (const auto& st : maroni_strata(g)) {
    StratumCohomology sc = stratum_for_assembly(st.n, g, framed);
    MaroniColumn col;
    col.stratum = st;
    col.k = k;
    col.window = sc.max_degree;
    col.profile = sc.classes;
    for (const auto& [key, mult] : sc.classes.entries()) {
      const int j = key.first, wt = key.second;
      if (j > col.window) continue;
      col.placed.push_back(
          PlacedClass{-k, -(j + 2 * st.codim) + k, wt - st.codim, mult});
    }
    table.columns.push_back(std::move(col));
    ++k;
  }
  return table;
}

namespace {

struct Unit {
  int p, q, weight;
  bool in_window;  // false: one degree below, usable only as a target
  int total() const { return p + q; }
};

bool arrow_ok(const Unit& source, const Unit& target) {
  if (target.weight != source.weight) return false;
  if (target.p == source.p - 1 && target.q == source.q) return true;      // d1
  if (target.p == source.p - 2 && target.q == source.q + 1) return true;  // d2
  return false;
}

// Perfect matching of the window units by descending total degree. The
// first unmatched unit can only pair downward (anything above it is already
// resolved), so the search branches only over its admissible targets.
bool match_units(std::vector<Unit>& units, std::vector<int>& partner, std::size_t from) {
  std::size_t u = from;
  while (u < units.size() && (partner[u] != -1 || !units[u].in_window)) ++u;
  if (u == units.size()) return true;
  for (std::size_t v = u + 1; v < units.size(); ++v) {
    if (partner[v] != -1) continue;
    if (units[v].total() != units[u].total() - 1) continue;
    if (!arrow_ok(units[u], units[v])) continue;
    partner[u] = static_cast<int>(v);
    partner[v] = static_cast<int>(u);
    if (match_units(units, partner, u + 1)) return true;
    partner[u] = partner[v] = -1;
  }
  return false;
}

std::vector<std::pair<int, int>> expected_survivors(bool framed) {
  if (framed) return {{0, 0}, {-2, -1}, {-5, -3}, {-7, -4}};
  return {{0, 0}, {-2, -1}, {-4, -2}};
}

}  // namespace

CancellationReport cancel_and_extract(const MaroniTable& table) {
  // Largest stable cohomological degree.
  const int window_b = table.strict ? table.bound - 1 : table.bound;

  // A stratum's unknown degrees begin at total degree -(window + 1 + 2c);
  // they must not reach into the stable window itself (the boundary row of
  // optional targets below it is allowed to be incomplete).
  for (const auto& col : table.columns)
    if (col.window + 2 * col.stratum.codim < window_b)
      throw consistency_error(errc::matching_failure,
                              "unknown region of stratum n=" +
                                  std::to_string(col.stratum.n) +
                                  " reaches the stable window");

  std::vector<Unit> units;
  for (const auto& col : table.columns)
    for (const auto& pc : col.placed) {
      const int total = pc.p + pc.q;
      if (total < -window_b - 1) continue;
      for (long long m = 0; m < pc.mult; ++m)
        units.push_back(Unit{pc.p, pc.q, pc.weight, total >= -window_b});
    }

  CancellationReport report;
  report.window_degree = window_b;

  std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
    if (a.total() != b.total()) return a.total() > b.total();
    if (a.p != b.p) return a.p > b.p;
    return a.weight > b.weight;
  });

  // Reserve the expected survivor positions first; everything else in the
  // window has to cancel.
  constexpr int kSurvivor = -2;
  std::vector<int> partner(units.size(), -1);
  for (const auto& [t, w] : expected_survivors(table.framed)) {
    if (t < -window_b) continue;
    std::size_t pick = units.size();
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (partner[i] != -1 || !units[i].in_window) continue;
      if (units[i].total() != t || units[i].weight != w) continue;
      if (pick == units.size() || units[i].p > units[pick].p) pick = i;
    }
    if (pick == units.size())
      throw consistency_error(errc::matching_failure,
                              "expected survivor (" + std::to_string(t) + ", " +
                                  std::to_string(w) + ") not present in the window");
    partner[pick] = kSurvivor;
    report.survivors.add(t, w, 1);
  }

  if (!match_units(units, partner, 0))
    throw consistency_error(errc::matching_failure,
                            "no complete rank-1 cancellation pattern in the stable window");

  for (std::size_t i = 0; i < units.size(); ++i) {
    if (partner[i] < 0 || static_cast<std::size_t>(partner[i]) < i) continue;
    const Unit& s = units[i];
    const Unit& t = units[partner[i]];
    report.pairs.push_back(CancellationPair{PlacedClass{s.p, s.q, s.weight, 1},
                                            PlacedClass{t.p, t.q, t.weight, 1}});
  }
  return report;
}

StableCohomology stable_cohomology(int g, bool framed) {
  MaroniTable table = build_maroni_table(g, framed);
  CancellationReport report = cancel_and_extract(table);
  StableCohomology out;
  out.bound = table.bound;
  out.strict = table.strict;
  for (const auto& [key, mult] : report.survivors.entries())
    out.classes.add(-key.first, key.second, mult);
  return out;
}

}  // namespace maroni
