#ifndef MARONI_VASSILIEV_HPP
#define MARONI_VASSILIEV_HPP

#include <map>

#include "maroni/confspace.hpp"
#include "maroni/graded.hpp"
#include "maroni/surface.hpp"

namespace maroni {

// First page of the spectral sequence of the simplicial resolution of the
// discriminant in V_{d,n}. Column p holds the Borel-Moore homology of the
// p-th stratum, indexed by total degree p+q; only p = 1..4 are nonzero below
// the cutoff column, whose own homology is controlled by a vanishing bound.
struct VassilievPage {
  SurfaceSpec spec;
  int v = 0;                        // dim V_{d,n}
  int cutoff_n = 0;                 // largest column with verified codimension
  int valid_from_bm_degree = 0;     // = 2v - cutoff_n; degrees below are unknown
  std::map<int, GradedTate> columns;
};

struct SectionCohomology {
  GradedTate classes;
  int max_degree = 0;  // degrees above are not asserted
};

// Largest N such that the configurations of N singular points have the
// expected codimension: floor((d - hn + 1)/2).
int vassiliev_cutoff(const SurfaceSpec& spec);

// Stable range for the cohomology of the smooth locus: floor((d - hn)/2),
// i.e. floor((g + (3-2h)n + 2)/4) for the genus g = 2d - 3n - 2.
int sections_stable_bound(const SurfaceSpec& spec);

// Columns 1..4. Requires vassiliev_cutoff >= 5 so all four sit strictly
// below the cutoff.
VassilievPage e1_page(const SurfaceSpec& spec);

// The full list of stable classes dual to columns 1..4 plus H^0; no
// truncation. Same precondition as e1_page.
GradedTate sections_profile_untruncated(const SurfaceSpec& spec);

// Cohomology of the space of smooth sections: Alexander duality applied to
// the page, truncated to the stable bound. No differentials are applied; the
// degeneration in range is enforced by the product cross-check in the
// quotient module.
SectionCohomology stable_cohomology_sections(const SurfaceSpec& spec);

}  // namespace maroni

#endif
