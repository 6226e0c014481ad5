#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maroni/exact_matrix.hpp"

using maroni::FpMatrix;
using maroni::PrimeField;
using maroni::ZMatrix;

namespace {

FpMatrix random_fp(maroni::SplitMix64& rng, std::size_t rows, std::size_t cols,
                   const PrimeField& field, int zero_chance_pct) {
  FpMatrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.below(100) >= static_cast<std::uint64_t>(zero_chance_pct))
        m.at(r, c) = rng.below(field.p);
  return m;
}

}  // namespace

TEST_CASE("rank fixtures") {
  PrimeField F;
  FpMatrix id(3, 3, F);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(id.rank() == 3);

  FpMatrix zero(4, 5, F);
  CHECK(zero.rank() == 0);
  CHECK(FpMatrix(0, 7, F).rank() == 0);

  // Two proportional rows plus an independent one.
  FpMatrix m(3, 3, F);
  m.set_int(0, 0, 1), m.set_int(0, 1, 2), m.set_int(0, 2, 3);
  m.set_int(1, 0, 2), m.set_int(1, 1, 4), m.set_int(1, 2, 6);
  m.set_int(2, 0, 0), m.set_int(2, 1, 1), m.set_int(2, 2, 0);
  CHECK(m.rank() == 2);
}

TEST_CASE("serial and parallel elimination agree") {
  PrimeField F;
  maroni::SplitMix64 rng(3);
  for (int it = 0; it < 30; ++it) {
    std::size_t rows = 1 + rng.below(40);
    std::size_t cols = 1 + rng.below(40);
    FpMatrix m = random_fp(rng, rows, cols, F, 40);
    CHECK(m.rank_serial() == m.rank_parallel());
  }
}

TEST_CASE("rank is invariant under transposition") {
  PrimeField F;
  maroni::SplitMix64 rng(5);
  for (int it = 0; it < 20; ++it) {
    FpMatrix m = random_fp(rng, 2 + rng.below(20), 2 + rng.below(20), F, 50);
    CHECK(m.rank() == m.transposed().rank());
  }
}

TEST_CASE("bareiss rank matches the product construction") {
  maroni::SplitMix64 rng(9);
  for (int it = 0; it < 20; ++it) {
    // B (rows x r) * C (r x cols) has rank r for generic small entries.
    const std::size_t r = 1 + rng.below(4);
    const std::size_t rows = r + rng.below(4);
    const std::size_t cols = r + rng.below(4);
    std::vector<long long> B(rows * r), C(r * cols);
    for (auto& v : B) v = static_cast<long long>(rng.below(19)) - 9;
    for (auto& v : C) v = static_cast<long long>(rng.below(19)) - 9;
    ZMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long long acc = 0;
        for (std::size_t t = 0; t < r; ++t) acc += B[i * r + t] * C[t * cols + j];
        m.at(i, j) = static_cast<long>(acc);
      }
    CHECK(m.rank() <= r);
    CHECK(m.rank_serial() == m.rank_parallel());

    // The mod-p rank never exceeds the rational one.
    PrimeField F;
    FpMatrix fp(rows, cols, F);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        fp.set_int(i, j, mpz_get_si(m.at(i, j).get_mpz_t()));
    CHECK(fp.rank() <= m.rank());
  }
}

TEST_CASE("bareiss handles rank-deficient and tall matrices") {
  ZMatrix m(3, 2);
  m.at(0, 0) = 2, m.at(0, 1) = 4;
  m.at(1, 0) = 3, m.at(1, 1) = 6;
  m.at(2, 0) = 5, m.at(2, 1) = 10;
  CHECK(m.rank() == 1);

  ZMatrix big(2, 2);
  big.at(0, 0) = mpz_class("123456789012345678901234567890");
  big.at(0, 1) = 1;
  big.at(1, 0) = mpz_class("246913578024691357802469135780");
  big.at(1, 1) = 2;
  CHECK(big.rank() == 1);
}

TEST_CASE("rational input is scaled row by row") {
  std::vector<mpq_class> entries = {mpq_class(1, 2), mpq_class(1, 3),
                                    mpq_class(2, 4), mpq_class(2, 6)};
  ZMatrix m = ZMatrix::from_rationals(2, 2, entries);
  CHECK(m.rank() == 1);
}

TEST_CASE("mod-p rank can genuinely drop") {
  PrimeField small{5};
  FpMatrix m(1, 1, small);
  m.set_int(0, 0, 10);  // 10 = 0 mod 5
  CHECK(m.rank() == 0);
  ZMatrix z(1, 1);
  z.at(0, 0) = 10;
  CHECK(z.rank() == 1);
}
