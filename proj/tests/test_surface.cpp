#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maroni/surface.hpp"

using maroni::SurfaceSpec;

TEST_CASE("section dimension closed forms") {
  CHECK(maroni::section_dimension({1, 3, 5}) == 18);   // 4d + 4 - 6n
  CHECK(maroni::section_dimension({0, 3, 7}) == 32);   // (h+1)(d+1)
  CHECK(maroni::section_dimension({2, 4, 8}) == 25);   // enumerated below
}

TEST_CASE("basis enumeration agrees with the closed form") {
  for (int n = 0; n <= 3; ++n)
    for (int h = 3; h <= 5; ++h)
      for (int d = h * n; d <= h * n + 9; ++d) {
        SurfaceSpec spec{n, h, d};
        auto basis = maroni::monomial_basis(spec);
        CHECK(static_cast<int>(basis.size()) == maroni::section_dimension(spec));
        if (n >= 1)
          for (const auto& m : basis) {
            CHECK(m.a + m.b + n * m.c == d);
            CHECK(m.c >= 0);
            CHECK(m.c <= h);
          }
      }
}

TEST_CASE("brute-force count for (n=2, h=4, d=8)") {
  int count = 0;
  for (int c = 0; c <= 4; ++c)
    for (int a = 0; a + 2 * c <= 8; ++a) ++count;  // b = 8 - a - 2c
  CHECK(count == 25);
  CHECK(maroni::section_dimension({2, 4, 8}) == count);
}

TEST_CASE("monomial order is descending in the z-exponent") {
  auto basis = maroni::monomial_basis({2, 3, 6});
  REQUIRE(!basis.empty());
  CHECK(basis.front().a == 0);
  CHECK(basis.front().b == 0);
  CHECK(basis.front().c == 3);  // z^3 is the unique top-row monomial

  auto rows = maroni::monomial_basis({1, 3, 3});
  CHECK(rows.size() == 10);  // row lengths 1, 2, 3, 4
  int per_row[4] = {0, 0, 0, 0};
  for (const auto& m : rows) ++per_row[m.c];
  CHECK(per_row[3] == 1);
  CHECK(per_row[2] == 2);
  CHECK(per_row[1] == 3);
  CHECK(per_row[0] == 4);

  CHECK(maroni::monomial_basis({0, 3, 1}).size() == 8);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS((void)maroni::section_dimension({2, 3, 5}), maroni::spec_error);
  CHECK_THROWS_AS((void)maroni::section_dimension({1, 2, 9}), maroni::spec_error);
}

TEST_CASE("maroni strata for small genus") {
  auto g5 = maroni::maroni_strata(5);
  REQUIRE(g5.size() == 1);
  CHECK(g5[0].n == 1);
  CHECK(g5[0].d == 5);
  CHECK(g5[0].codim == 0);
  CHECK(g5[0].dim == 11);  // 2g + 2 - n

  auto g10 = maroni::maroni_strata(10);
  REQUIRE(g10.size() == 3);
  CHECK(g10[0].n == 0);
  CHECK(g10[1].n == 2);
  CHECK(g10[2].n == 4);
  CHECK(g10[0].d == 6);
  CHECK(g10[1].d == 9);
  CHECK(g10[2].d == 12);
  CHECK(g10[0].dim == 21);
  CHECK(g10[1].dim == 20);
  CHECK(g10[2].dim == 18);
  CHECK(g10[0].codim == 0);
  CHECK(g10[1].codim == 1);
  CHECK(g10[2].codim == 3);

  auto g11 = maroni::maroni_strata(11);
  REQUIRE(g11.size() == 2);
  CHECK(g11[0].n == 1);
  CHECK(g11[1].n == 3);
  CHECK(g11[0].d == 8);
  CHECK(g11[1].d == 11);
}

TEST_CASE("genus and fiber degree are mutually inverse") {
  for (int g = 5; g <= 40; ++g)
    for (const auto& st : maroni::maroni_strata(g)) {
      CHECK(st.g == 2 * st.d - 3 * st.n - 2);
      CHECK(st.d == maroni::fiber_degree(st.g, st.n));
      CHECK((st.g - st.n) % 2 == 0);
      CHECK(3 * st.n <= st.g + 2);
    }
}

TEST_CASE("h = 3 dimension formula") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 3 * n; d <= 3 * n + 12; ++d)
      CHECK(maroni::section_dimension({n, 3, d}) == 4 * d + 4 - 6 * n);
}
