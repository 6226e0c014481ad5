#ifndef MARONI_SURFACE_HPP
#define MARONI_SURFACE_HPP

#include <vector>

#include "maroni/errors.hpp"

namespace maroni {

// Section space of O(h E_n + d F_n) on the Hirzebruch surface F_n.
// For n >= 1 sections are weighted polynomials in x, y, z with
// deg x = deg y = 1, deg z = n; for n = 0 they are bidegree-(h, d)
// polynomials on P^1 x P^1.
struct SurfaceSpec {
  int n = 1;  // Hirzebruch degree, n >= 0
  int h = 3;  // coefficient of E_n, h >= 3
  int d = 0;  // coefficient of the fiber class, d >= h*n

  void validate() const;
};

// A basis monomial of the section space.
// n >= 1: x^a y^b z^c with a + b + n*c = d and 0 <= c <= h.
// n = 0:  x0^a0 x1^a1 y0^b0 y1^b1 with a0 + a1 = h and b0 + b1 = d; the
//         (a, b, c) fields then hold (a0, b0, c = a0) and the complementary
//         exponents are recovered from the spec.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
};

// One stratum of the Maroni stratification of the moduli of genus-g
// trigonal curves: curves embedded in F_n.
struct StratumInfo {
  int n = 0;
  int d = 0;
  int g = 0;
  int codim = 0;  // codimension in the moduli of trigonal curves
  int dim = 0;
};

// dim V_{d,n}; equals 4d + 4 - 6n when h = 3, n >= 1, and (h+1)(d+1) when
// n = 0.
int section_dimension(const SurfaceSpec& spec);

// Deterministic monomial order: descending z-exponent (descending a0 for
// n = 0), then descending a (resp. b0).
std::vector<Monomial> monomial_basis(const SurfaceSpec& spec);

// d on F_n for a genus-g curve of Maroni invariant n.
int fiber_degree(int g, int n);

bool is_valid_stratum(int g, int n);
StratumInfo stratum_info(int g, int n);

// All Maroni strata for genus g >= 5, ascending n.
std::vector<StratumInfo> maroni_strata(int g);

}  // namespace maroni

#endif
