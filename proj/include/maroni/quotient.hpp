#ifndef MARONI_QUOTIENT_HPP
#define MARONI_QUOTIENT_HPP

#include <vector>

#include "maroni/chow.hpp"
#include "maroni/graded.hpp"
#include "maroni/vassiliev.hpp"

namespace maroni {

// Fixed rational cohomology of the reductive groups acting on the section
// spaces. Classical values, recorded as fixtures.
namespace groups {
GradedTate c_star();      // {(0,0), (1,-1)}
GradedTate sl2();         // {(0,0), (3,-2)}
GradedTate gl2();         // {(0,0), (1,-1), (3,-2), (4,-3)}
GradedTate g0_reductive();// c_star x sl2 x sl2
}  // namespace groups

// Cohomology of X_{d,n}/GL_2 by exact division of the stable section
// cohomology. Requires n >= 1, h = 3 and the full Vassiliev page.
SectionCohomology x_mod_gl2(const SurfaceSpec& spec);

// Base of a C*-bundle from its total space: solves the Gysin sequence
// degree by degree, with the ranks of multiplication by the Euler class
// (weight -1) supplied by the caller. Throws errc::inconsistent when no
// base realizes the total with the given ranks.
GradedTate solve_circle_gysin(const GradedTate& total, const EulerRanks& ranks,
                              int max_degree);

// One chosen kill-set per degree: the classes of B^j with nonzero Euler
// multiplication, as picked by the solver run.
struct GysinSolution {
  GradedTate base;
  std::vector<GradedTate> killed;  // killed[j] lives in degree j
};
GysinSolution solve_circle_gysin_full(const GradedTate& total, const EulerRanks& ranks,
                                      int max_degree);

// Rebuilds the total space cohomology from a solved base and its kill sets;
// the reconstruction check for the solver.
GradedTate gysin_total_from_base(const GysinSolution& sol, int max_degree);

// Stable rational cohomology of the Maroni stratum N_n for genus g, with the
// degree up to which it is asserted. The profile is genus independent; below
// the full-page threshold it is derived at a reference genus for the same n.
struct StratumCohomology {
  GradedTate classes;
  int max_degree = 0;
};
StratumCohomology stratum_cohomology(int n, int g);

// Cohomology of the SL_2-cover of the stratum.
StratumCohomology framed_stratum_cohomology(int n, int g);

// Degree up to which the stratum cohomology is asserted:
// floor((g-3n+2)/4) for n >= 1, floor((g+2)/4) for n = 0.
int stratum_window(int n, int g);

// Column data for the stratification table. Unlike the public operations
// this never refuses a valid stratum: the window is capped by the page
// columns actually verified at this genus (deep strata of small degree may
// only be known in degree 0, which is all the table needs from them).
StratumCohomology stratum_for_assembly(int n, int g, bool framed);

}  // namespace maroni

#endif
