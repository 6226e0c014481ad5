#include "maroni/vassiliev.hpp"

#include <string>

namespace maroni {

int vassiliev_cutoff(const SurfaceSpec& spec) {
  spec.validate();
  return (spec.d - spec.h * spec.n + 1) / 2;
}

int sections_stable_bound(const SurfaceSpec& spec) {
  spec.validate();
  return (spec.d - spec.h * spec.n) / 2;
}

namespace {

void require_full_page(const SurfaceSpec& spec) {
  const int cutoff = vassiliev_cutoff(spec);
  if (cutoff < 5)
    throw spec_error(errc::range_violation,
                     "columns 1..4 need cutoff N >= 5, got N = " + std::to_string(cutoff) +
                         " for d = " + std::to_string(spec.d));
}

// Column i: configurations of i singular points. The space of such pairs is
// a bundle over B(F_n, i) whose twisted Borel-Moore homology gets shifted by
// the fiber dimension v - 3i (degree 2(v-3i), weight v-3i) and by the open
// (i-1)-simplex factor (degree i-1).
GradedTate column(int v, int i) {
  GradedTate base = twisted_bm_config(CellStratification::hirzebruch(), i);
  return base.twist_shift(2 * (v - 3 * i) + (i - 1), v - 3 * i);
}

}  // namespace

VassilievPage e1_page(const SurfaceSpec& spec) {
  require_full_page(spec);
  VassilievPage page;
  page.spec = spec;
  page.v = section_dimension(spec);
  page.cutoff_n = vassiliev_cutoff(spec);
  page.valid_from_bm_degree = 2 * page.v - page.cutoff_n;
  for (int i = 1; i <= 4; ++i) {
    GradedTate col = column(page.v, i);
    // All entries are pure Tate with weight (t - i + 1)/2.
    for (const auto& [key, mult] : col.entries()) {
      if (2 * key.second != key.first - i + 1)
        throw consistency_error(errc::inconsistent, "column entry off the Tate line");
    }
    page.columns[i] = col;
  }
  return page;
}

GradedTate sections_profile_untruncated(const SurfaceSpec& spec) {
  require_full_page(spec);
  const int v = section_dimension(spec);
  GradedTate out = GradedTate::unit();
  for (int i = 1; i <= 4; ++i) {
    // Alexander duality: a Borel-Moore class of the discriminant in total
    // degree t and weight w gives a class in degree 2v - 1 - t of weight
    // w - v.
    const GradedTate col = column(v, i);
    for (const auto& [key, mult] : col.entries())
      out.add(2 * v - 1 - key.first, key.second - v, mult);
  }
  return out;
}

SectionCohomology stable_cohomology_sections(const SurfaceSpec& spec) {
  SectionCohomology out;
  out.max_degree = sections_stable_bound(spec);
  out.classes = sections_profile_untruncated(spec).truncate(out.max_degree);
  return out;
}

}  // namespace maroni
