#ifndef MARONI_CHOW_HPP
#define MARONI_CHOW_HPP

#include <map>
#include <vector>

#include "maroni/exact_matrix.hpp"

namespace maroni {

// Ranks of multiplication by the Euler class xi (weight -1, degree +2) on the
// cohomology of a Maroni stratum, keyed by source degree; absent keys are 0.
struct EulerRanks {
  std::map<int, int> ranks;

  int at(int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
  }
};

// Element of Q[n1, m1, c2] with deg n1 = deg m1 = 1, deg c2 = 2.
// Monomial exponents (a, b, c) mean n1^a m1^b c2^c; coefficients are integers
// (every substitution b = (g+n+2)/2 made here lands in Z).
struct GradedPolynomial {
  struct Exponent {
    int a = 0, b = 0, c = 0;
    int degree() const { return a + b + 2 * c; }
    auto operator<=>(const Exponent&) const = default;
  };
  std::map<Exponent, long long> terms;  // canonical: no zero coefficients

  void add(Exponent e, long long coeff);
  GradedPolynomial times_monomial(Exponent e) const;
  bool homogeneous_of_degree(int t) const;
  bool is_zero() const { return terms.empty(); }
};

// The four generators of the relation ideal of the Chow ring of the stratum
// N_n, in Q[n1, m1, c2] with the splitting-type parameter b = (g+n+2)/2.
struct TschirnhausenIdeal {
  int g = 0, n = 0;
  long long b = 0;
  std::vector<GradedPolynomial> generators;  // degrees 1, 2, 2, 3
};

TschirnhausenIdeal ideal_generators(int g, int n);

// Monomials of degree t in (n1, m1, c2), deterministic order.
std::vector<GradedPolynomial::Exponent> monomials_of_degree(int t);

// Graded dimensions of Q[n1,m1,c2]/I for degrees 0..up_to, by Macaulay
// truncation: in each degree the span of {monomial * generator} products is
// subtracted via an exact rank.
std::vector<int> truncated_quotient_dims(const TschirnhausenIdeal& ideal, int up_to);

// As above but over F_p; used to confirm that the fast path agrees with the
// rational computation.
std::vector<int> truncated_quotient_dims_fp(const TschirnhausenIdeal& ideal, int up_to,
                                            PrimeField field);

// Euler-class ranks for the circle-bundle step of the stratum pipeline:
// rank(0->2) = 1 when the degree-1 quotient is nonzero, rank(2->4) = the
// degree-2 quotient dimension, rank(5->7) = 1.
EulerRanks euler_ranks(int g, int n);

}  // namespace maroni

#endif
