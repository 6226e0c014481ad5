#ifndef MARONI_CONFSPACE_HPP
#define MARONI_CONFSPACE_HPP

#include <vector>

#include "maroni/graded.hpp"

namespace maroni {

// Stratification of a space into affine cells, recorded by complex cell
// dimensions (a multiset). F_n is {2, 1, 1, 0}: P^2 minus a point plus a P^1.
struct CellStratification {
  std::vector<int> cells;

  static CellStratification hirzebruch() { return {{2, 1, 1, 0}}; }
  static CellStratification p2_minus_point() { return {{2, 1}}; }
  static CellStratification projective_space(int dim);  // {N, N-1, ..., 0}
};

// Twisted (+-Q) Borel-Moore homology of the unordered configuration space
// B(Z, k) for Z stratified into affine cells. Configurations putting two or
// more points in one affine cell contribute nothing, so each k-element
// subset S of the cells yields one class Q(s) in degree 2s, s = sum of S.
GradedTate twisted_bm_config(const CellStratification& cells, int k);

// Independent oracle for Z = P^(m-1): the twisted Borel-Moore homology of
// B(P^(m-1), k) is the homology of the Grassmannian G(k, C^m) shifted up by
// k(k-1). Expanded from the Gaussian binomial coefficient [m choose k]_q.
GradedTate grassmannian_bm(int k, int m);

// Coefficients of the Gaussian binomial [m choose k]_q, ascending powers.
std::vector<long long> gaussian_binomial(int m, int k);

}  // namespace maroni

#endif
