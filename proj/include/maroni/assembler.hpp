#ifndef MARONI_ASSEMBLER_HPP
#define MARONI_ASSEMBLER_HPP

#include <vector>

#include "maroni/quotient.hpp"
#include "maroni/surface.hpp"

namespace maroni {

// One placed class of the stratification spectral sequence. A stratum class
// in cohomological degree j with weight -w, in the column of the k-th
// stratum (codimension c), sits at p = -k, q = -(j + 2c) + k with weight
// -(w + c); its total degree p + q = -(j + 2c) is column independent.
struct PlacedClass {
  int p = 0;
  int q = 0;
  int weight = 0;
  long long mult = 0;
};

struct MaroniColumn {
  StratumInfo stratum;
  int k = 0;           // column index, ascending Maroni invariant
  int window = 0;      // degrees of the stratum profile that are asserted
  GradedTate profile;  // full stable profile (degrees beyond window unplaced)
  std::vector<PlacedClass> placed;
};

struct MaroniTable {
  int g = 0;
  bool framed = false;
  int bound = 0;            // floor of the stable range
  bool strict = false;      // true: stable for i < bound; false: i <= bound
  long long quarters = 0;   // 4 * (minimization value), an exact integer
  std::vector<MaroniColumn> columns;
};

struct CancellationPair {
  PlacedClass source;  // arrow tail (larger p)
  PlacedClass target;  // (p-1, q) or (p-2, q+1), equal weight
};

struct CancellationReport {
  std::vector<CancellationPair> pairs;
  GradedTate survivors;   // keyed by total degree p+q and weight
  int window_degree = 0;  // survivors reported for total degree >= -window_degree
};

struct StableRange {
  int bound = 0;
  bool strict = false;
  long long quarters = 0;
};

struct StableCohomology {
  GradedTate classes;
  int bound = 0;
  bool strict = false;
};

// Minimum over strata of 2*codim + (d-3n+1)/2, minus 1, computed exactly in
// quarter integers. The result is g/4 for even g and (g-3)/4 for odd g; the
// operation verifies that identity before flooring. Stable degrees are
// i < bound when strict, i <= bound otherwise.
StableRange stable_range(int g, bool framed);

MaroniTable build_maroni_table(int g, bool framed);

// Matches every in-window class outside the expected survivor set with a
// partner of equal weight one total degree below, along a (p-1, q) or
// (p-2, q+1) arrow. Throws errc::matching_failure when the cancellation
// pattern cannot be completed.
CancellationReport cancel_and_extract(const MaroniTable& table);

// End-to-end stable cohomology of the moduli of trigonal curves (or of its
// framed SL2-cover): build the table, cancel, read the survivors.
StableCohomology stable_cohomology(int g, bool framed);

}  // namespace maroni

#endif
