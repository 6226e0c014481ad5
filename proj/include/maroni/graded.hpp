#ifndef MARONI_GRADED_HPP
#define MARONI_GRADED_HPP

#include <map>
#include <utility>
#include <vector>

#include "maroni/errors.hpp"

namespace maroni {

// Finitely supported multiset of Tate summands, indexed by (degree, weight).
//
// Weight convention: the stored weight is the Tate index k of Q(k).
//   * Borel-Moore classes carry k >= 0, e.g. Q(3) in degree 6 -> (6, +3).
//   * Cohomology classes carry k <= 0, e.g. Q(-1) in degree 2 -> (2, -1).
// One type serves both sides; the duality step in the Vassiliev module
// performs the degree/sign flip between them.
//
// All multiplicities are strictly positive; absent entries mean zero.
class GradedTate {
 public:
  using Key = std::pair<int, int>;  // (degree, weight)
  using Map = std::map<Key, long long>;

  GradedTate() = default;

  // {(0,0): 1}, the tensor unit.
  static GradedTate unit();

  // Single class Q(weight) in the given degree, with multiplicity.
  static GradedTate single(int degree, int weight, long long mult = 1);

  void add(int degree, int weight, long long mult = 1);

  long long multiplicity(int degree, int weight) const;
  bool empty() const { return entries_.empty(); }

  // Total number of classes counted with multiplicity.
  long long class_count() const;

  // Sum of (-1)^degree * multiplicity; multiplicative under tensor.
  long long euler() const;

  int min_degree() const;  // throws on empty
  int max_degree() const;

  // Convolution product: (d1+d2, w1+w2) with multiplicities multiplied.
  GradedTate tensor(const GradedTate& other) const;

  // Shift every entry by (d_degree, d_weight).
  GradedTate twist_shift(int d_degree, int d_weight) const;

  // Exact division: returns q with q.tensor(fiber) == *this.
  // Requires fiber to contain (0,0) with multiplicity 1 and all other
  // entries in strictly positive degree. Throws errc::not_divisible when no
  // such quotient exists.
  GradedTate divide(const GradedTate& fiber) const;

  // Division of data known only up to max_degree: the quotient is computed
  // degree by degree for degrees <= max_degree and mismatches above the cut
  // are ignored.
  GradedTate divide_up_to(const GradedTate& fiber, int max_degree) const;

  // Entries of degree <= max_degree.
  GradedTate truncate(int max_degree) const;

  // Multiset of weights in one fixed degree.
  std::vector<std::pair<int, long long>> weights_in_degree(int degree) const;

  GradedTate operator+(const GradedTate& other) const;  // direct sum
  bool operator==(const GradedTate& other) const { return entries_ == other.entries_; }
  bool operator!=(const GradedTate& other) const { return !(*this == other); }

  const Map& entries() const { return entries_; }

 private:
  // Subtracts other from *this; returns false (leaving *this unspecified)
  // if any multiplicity would go negative.
  bool subtract(const GradedTate& other);
  // As above, but entries of other above max_degree are skipped.
  bool subtract_up_to(const GradedTate& other, int max_degree);

  GradedTate divide_impl(const GradedTate& fiber, bool truncated, int max_degree) const;

  Map entries_;
};

}  // namespace maroni

#endif
