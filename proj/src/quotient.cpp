#include "maroni/quotient.hpp"

#include <algorithm>
#include <string>

namespace maroni {

namespace groups {

GradedTate c_star() {
  GradedTate g = GradedTate::unit();
  g.add(1, -1);
  return g;
}

GradedTate sl2() {
  GradedTate g = GradedTate::unit();
  g.add(3, -2);
  return g;
}

GradedTate gl2() {
  GradedTate g = GradedTate::unit();
  g.add(1, -1);
  g.add(3, -2);
  g.add(4, -3);
  return g;
}

GradedTate g0_reductive() { return c_star().tensor(sl2()).tensor(sl2()); }

}  // namespace groups

SectionCohomology x_mod_gl2(const SurfaceSpec& spec) {
  if (spec.n < 1 || spec.h != 3)
    throw spec_error(errc::invalid_spec, "the GL2 quotient step needs n >= 1 and h = 3");
  SectionCohomology out;
  out.classes = sections_profile_untruncated(spec).divide(groups::gl2());
  out.max_degree = sections_stable_bound(spec);
  return out;
}

namespace {

// Multiset of classes of `source` in one degree, viewed as (weight -> mult).
GradedTate degree_slice(const GradedTate& source, int degree) {
  GradedTate out;
  for (const auto& [w, m] : source.weights_in_degree(degree)) out.add(degree, w, m);
  return out;
}

// All sub-multisets of `slice` (classes in one degree) of the given size.
void weight_subsets(const std::vector<std::pair<int, long long>>& weights, std::size_t pos,
                    long long remaining, int degree, GradedTate current,
                    std::vector<GradedTate>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (pos == weights.size()) return;
  long long take_max = std::min<long long>(weights[pos].second, remaining);
  for (long long take = take_max; take >= 0; --take) {
    GradedTate next = current;
    if (take > 0) next.add(degree, weights[pos].first, take);
    weight_subsets(weights, pos + 1, remaining - take, degree, next, out);
  }
}

std::vector<GradedTate> kill_set_candidates(const GradedTate& degree_classes, int degree,
                                            long long size) {
  std::vector<GradedTate> out;
  weight_subsets(degree_classes.weights_in_degree(degree), 0, size, degree, GradedTate{},
                 out);
  return out;
}

bool contains(const GradedTate& big, const GradedTate& small) {
  for (const auto& [key, mult] : small.entries())
    if (big.multiplicity(key.first, key.second) < mult) return false;
  return true;
}

GradedTate minus(const GradedTate& big, const GradedTate& small) {
  GradedTate out = big;
  for (const auto& [key, mult] : small.entries()) out.add(key.first, key.second, -mult);
  return out;
}

struct GysinSearch {
  const GradedTate& total;
  const EulerRanks& ranks;
  int max_degree;
  std::vector<GradedTate> base;    // base[j]: classes in degree j
  std::vector<GradedTate> killed;  // killed[j]: chosen kill set in degree j

  // Degree j of the total couples base degrees j and j-1:
  //   total^j = (base^j - xi*killed^{j-2}) + (base^{j-1} - killed^{j-1})(-1).
  // base^j is determined once killed^{j-1} is chosen, so the search runs over
  // kill sets only.
  bool step(int j) {
    if (j > max_degree) return true;
    const long long r = ranks.at(j - 1);
    if (r > base[j - 1].class_count()) return false;
    const GradedTate total_j = degree_slice(total, j);
    for (const GradedTate& kill : kill_set_candidates(base[j - 1], j - 1, r)) {
      GradedTate row1 = minus(base[j - 1], kill).twist_shift(1, -1);
      if (!contains(total_j, row1)) continue;
      GradedTate image =
          j >= 2 ? killed[j - 2].twist_shift(2, -1) : GradedTate{};
      killed[j - 1] = kill;
      base[j] = minus(total_j, row1) + image;
      if (step(j + 1)) return true;
    }
    killed[j - 1] = GradedTate{};
    base[j] = GradedTate{};
    return false;
  }
};

}  // namespace

GysinSolution solve_circle_gysin_full(const GradedTate& total, const EulerRanks& ranks,
                                      int max_degree) {
  if (max_degree < 0) throw spec_error(errc::invalid_spec, "max_degree must be >= 0");
  if (degree_slice(total, 0) != GradedTate::unit())
    throw spec_error(errc::invalid_spec, "total must start with a single (0,0) class");
  for (const auto& [key, mult] : total.entries())
    if (key.first < 0)
      throw spec_error(errc::invalid_spec, "total has classes in negative degree");

  GysinSearch search{total, ranks, max_degree,
                     std::vector<GradedTate>(max_degree + 1),
                     std::vector<GradedTate>(max_degree + 1)};
  search.base[0] = GradedTate::unit();
  if (!search.step(1))
    throw consistency_error(errc::inconsistent,
                            "no base realizes the total with the given Euler ranks");

  GysinSolution sol;
  for (int j = 0; j <= max_degree; ++j) sol.base = sol.base + search.base[j];
  sol.killed = std::move(search.killed);

  if (gysin_total_from_base(sol, max_degree) != total.truncate(max_degree))
    throw consistency_error(errc::inconsistent, "Gysin reconstruction mismatch");
  return sol;
}

GradedTate solve_circle_gysin(const GradedTate& total, const EulerRanks& ranks,
                              int max_degree) {
  return solve_circle_gysin_full(total, ranks, max_degree).base;
}

GradedTate gysin_total_from_base(const GysinSolution& sol, int max_degree) {
  auto kill_at = [&](int j) -> GradedTate {
    if (j < 0 || j >= static_cast<int>(sol.killed.size())) return {};
    return sol.killed[j];
  };
  GradedTate rebuilt;
  for (int j = 0; j <= max_degree; ++j) {
    rebuilt = rebuilt + minus(degree_slice(sol.base, j), kill_at(j - 2).twist_shift(2, -1));
    if (j >= 1)
      rebuilt =
          rebuilt + minus(degree_slice(sol.base, j - 1), kill_at(j - 1)).twist_shift(1, -1);
  }
  return rebuilt;
}

int stratum_window(int n, int g) {
  if (!is_valid_stratum(g, n))
    throw spec_error(errc::invalid_stratum,
                     "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")");
  return n >= 1 ? (g - 3 * n + 2) / 4 : (g + 2) / 4;
}

namespace {

// Lowest cohomological degree each page column can contribute to.
int max_needed_column(int window) {
  if (window >= 12) return 4;
  if (window >= 7) return 3;
  if (window >= 4) return 2;
  if (window >= 1) return 1;
  return 0;
}

// The window is honest only when every column feeding it sits strictly below
// the verified cutoff.
void check_stratum_range(int n, int g) {
  SurfaceSpec spec{n, 3, fiber_degree(g, n)};
  const int needed = max_needed_column(stratum_window(n, g));
  if (needed >= 1 && vassiliev_cutoff(spec) <= needed)
    throw spec_error(errc::range_violation,
                     "window of stratum (g,n)=(" + std::to_string(g) + "," +
                         std::to_string(n) + ") needs page column " + std::to_string(needed) +
                         " beyond the verified cutoff");
}

// Smallest genus for this n where the full page is available and the window
// already shows the whole profile. The profile is genus independent, so it
// can be computed here once and reused for smaller strata.
int reference_genus(int n) { return n == 0 ? 18 : 3 * n + 26; }

GradedTate stratum_profile_at(int n, int g) {
  SurfaceSpec spec{n, 3, fiber_degree(g, n)};
  GradedTate sections = sections_profile_untruncated(spec);
  if (n == 0) return sections.divide(groups::g0_reductive());
  GradedTate quotient = sections.divide(groups::gl2());
  return solve_circle_gysin(quotient, euler_ranks(g, n), quotient.max_degree() + 2);
}

GradedTate stratum_profile(int n, int g) {
  SurfaceSpec spec{n, 3, fiber_degree(g, n)};
  if (vassiliev_cutoff(spec) >= 5) return stratum_profile_at(n, g);
  return stratum_profile_at(n, reference_genus(n));
}

}  // namespace

StratumCohomology stratum_cohomology(int n, int g) {
  check_stratum_range(n, g);
  return {stratum_profile(n, g), stratum_window(n, g)};
}

StratumCohomology framed_stratum_cohomology(int n, int g) {
  check_stratum_range(n, g);
  const int window = stratum_window(n, g);
  if (n >= 1) return {stratum_profile(n, g).tensor(groups::sl2()), window};

  SurfaceSpec spec{0, 3, fiber_degree(g, 0)};
  GradedTate sections = vassiliev_cutoff(spec) >= 5
                            ? sections_profile_untruncated(spec)
                            : sections_profile_untruncated(
                                  SurfaceSpec{0, 3, fiber_degree(reference_genus(0), 0)});
  return {sections.divide(groups::c_star().tensor(groups::sl2())), window};
}

StratumCohomology stratum_for_assembly(int n, int g, bool framed) {
  if (!is_valid_stratum(g, n))
    throw spec_error(errc::invalid_stratum,
                     "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")");
  // Degrees covered by the open page columns: with c columns verified, the
  // profile is complete through the last degree before column c+1 starts.
  static constexpr int kCoveredDegree[5] = {0, 3, 6, 11, 1 << 20};
  SurfaceSpec spec{n, 3, fiber_degree(g, n)};
  const int open = std::max(0, std::min(4, vassiliev_cutoff(spec) - 1));
  const int window = std::min(stratum_window(n, g), kCoveredDegree[open]);

  const int ref = reference_genus(n);
  GradedTate profile;
  if (n == 0) {
    GradedTate sections = sections_profile_untruncated(
        SurfaceSpec{0, 3, fiber_degree(vassiliev_cutoff(spec) >= 5 ? g : ref, 0)});
    profile = framed ? sections.divide(groups::c_star().tensor(groups::sl2()))
                     : sections.divide(groups::g0_reductive());
  } else {
    profile = stratum_profile(n, g);
    if (framed) profile = profile.tensor(groups::sl2());
  }
  return {profile, window};
}

}  // namespace maroni
