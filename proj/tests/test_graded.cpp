#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "maroni/graded.hpp"
#include "maroni/modarith.hpp"

using maroni::GradedTate;

namespace {

GradedTate from_list(std::initializer_list<std::tuple<int, int, long long>> items) {
  GradedTate g;
  for (const auto& [d, w, m] : items) g.add(d, w, m);
  return g;
}

// Small random summand with entries in a fixed window.
GradedTate random_tate(maroni::SplitMix64& rng, int max_entries, bool with_unit) {
  GradedTate g;
  if (with_unit) g.add(0, 0, 1);
  const int count = static_cast<int>(rng.below(max_entries + 1));
  for (int i = 0; i < count; ++i) {
    int degree = 1 + static_cast<int>(rng.below(6));
    int weight = static_cast<int>(rng.below(7)) - 3;
    g.add(degree, weight, 1 + static_cast<long long>(rng.below(3)));
  }
  return g;
}

}  // namespace

TEST_CASE("tensor unit and single-entry convolution") {
  GradedTate a = from_list({{2, -1, 1}, {5, 0, 2}});
  CHECK(a.tensor(GradedTate::unit()) == a);
  CHECK(GradedTate::single(2, -1).tensor(GradedTate::single(3, -2)) ==
        GradedTate::single(5, -3));
}

TEST_CASE("tensor of a stratum profile with the SL2 fixture") {
  GradedTate stratum = from_list({{0, 0, 1}, {2, -1, 1}, {5, -3, 1}, {7, -4, 1}});
  GradedTate sl2 = from_list({{0, 0, 1}, {3, -2, 1}});
  GradedTate expected = from_list({{0, 0, 1},
                                   {2, -1, 1},
                                   {3, -2, 1},
                                   {5, -3, 2},
                                   {7, -4, 1},
                                   {8, -5, 1},
                                   {10, -6, 1}});
  CHECK(stratum.tensor(sl2) == expected);
}

TEST_CASE("twist_shift basics") {
  CHECK(GradedTate::unit().twist_shift(2, -1) == GradedTate::single(2, -1));
  GradedTate a = from_list({{1, -1, 2}, {4, -3, 1}});
  CHECK(a.twist_shift(0, 0) == a);
  // Borel-Moore profile of single-point configurations, shifted as in the
  // first spectral-sequence column with v = 10.
  GradedTate bm = from_list({{0, 0, 1}, {2, 1, 2}, {4, 2, 1}});
  GradedTate shifted = bm.twist_shift(2 * (10 - 3), 10 - 3);
  CHECK(shifted == from_list({{14, 7, 1}, {16, 8, 2}, {18, 9, 1}}));
}

TEST_CASE("divide round trip on random pairs") {
  maroni::SplitMix64 rng(42);
  for (int it = 0; it < 200; ++it) {
    GradedTate a = random_tate(rng, 4, false);
    GradedTate b = random_tate(rng, 3, true);
    CHECK(a.tensor(b).divide(b) == a);
  }
}

TEST_CASE("division fixture: stable sections by GL2") {
  GradedTate gl2 = from_list({{0, 0, 1}, {1, -1, 1}, {3, -2, 1}, {4, -3, 1}});
  GradedTate quotient = from_list({{0, 0, 1}, {3, -2, 1}, {5, -3, 1}, {8, -5, 1}});
  GradedTate total = quotient.tensor(gl2);
  // The 16-class stable profile.
  CHECK(total == from_list({{0, 0, 1},
                            {1, -1, 1},
                            {3, -2, 2},
                            {4, -3, 2},
                            {5, -3, 1},
                            {6, -4, 2},
                            {7, -5, 1},
                            {8, -5, 2},
                            {9, -6, 2},
                            {11, -7, 1},
                            {12, -8, 1}}));
  CHECK(total.divide(gl2) == quotient);
}

TEST_CASE("divide failure leaves no quotient") {
  GradedTate total = from_list({{0, 0, 1}, {1, -1, 1}});
  GradedTate fiber = from_list({{0, 0, 1}, {2, -1, 1}});
  CHECK_THROWS_AS((void)total.divide(fiber), maroni::consistency_error);
}

TEST_CASE("divide_up_to ignores the unknown range") {
  GradedTate fiber = from_list({{0, 0, 1}, {1, -1, 1}, {3, -2, 1}, {4, -3, 1}});
  GradedTate quotient = from_list({{0, 0, 1}, {3, -2, 1}, {5, -3, 1}, {8, -5, 1}});
  GradedTate truncated = quotient.tensor(fiber).truncate(5);
  CHECK(truncated.divide_up_to(fiber, 5) == quotient.truncate(5));
  CHECK_THROWS_AS((void)truncated.divide(fiber), maroni::consistency_error);
}

TEST_CASE("tensor is commutative and associative") {
  maroni::SplitMix64 rng(7);
  for (int it = 0; it < 100; ++it) {
    GradedTate a = random_tate(rng, 4, false);
    GradedTate b = random_tate(rng, 4, false);
    GradedTate c = random_tate(rng, 4, true);
    CHECK(a.tensor(b) == b.tensor(a));
    CHECK(a.tensor(b).tensor(c) == a.tensor(b.tensor(c)));
  }
}

TEST_CASE("tensor associativity, exhaustive over a small support pool") {
  // Every multiset over a fixed three-class pool with support size <= 4.
  const std::array<std::pair<int, int>, 3> pool = {{{1, 0}, {2, -1}, {3, 2}}};
  std::vector<GradedTate> all;
  for (int c0 = 0; c0 <= 2; ++c0)
    for (int c1 = 0; c1 <= 2; ++c1)
      for (int c2 = 0; c2 <= 2; ++c2) {
        GradedTate t;
        t.add(pool[0].first, pool[0].second, c0);
        t.add(pool[1].first, pool[1].second, c1);
        t.add(pool[2].first, pool[2].second, c2);
        all.push_back(t);
      }
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(a.tensor(b) == b.tensor(a));
      CHECK(a.tensor(b).tensor(all[5]) == a.tensor(b.tensor(all[5])));
    }
}

TEST_CASE("euler characteristic is multiplicative") {
  maroni::SplitMix64 rng(11);
  for (int it = 0; it < 100; ++it) {
    GradedTate a = random_tate(rng, 4, true);
    GradedTate b = random_tate(rng, 4, false);
    CHECK(a.tensor(b).euler() == a.euler() * b.euler());
  }
}

TEST_CASE("multiplicities stay strictly positive") {
  GradedTate g;
  g.add(1, 1, 2);
  g.add(1, 1, -2);
  CHECK(g.empty());
  CHECK_THROWS(g.add(0, 0, -1));
}
