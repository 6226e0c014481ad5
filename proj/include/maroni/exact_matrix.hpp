#ifndef MARONI_EXACT_MATRIX_HPP
#define MARONI_EXACT_MATRIX_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "maroni/modarith.hpp"

namespace maroni {

// Dense matrices over exact coefficients with rank computation.
//
// Two backends:
//   * FpMatrix -- entries in F_p, classical row elimination. This is the hot
//     kernel; it exists in a serial reference version and an OpenMP version
//     that must agree entry for entry.
//   * ZMatrix  -- integer entries, fraction-free Bareiss elimination. Its
//     rank is the rank over the rationals and serves as ground truth when a
//     mod-p computation looks degenerate.

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void set_int(std::size_t r, std::size_t c, long long v) { at(r, c) = field_.reduce_int(v); }

  FpMatrix transposed() const;

  // Serial reference elimination.
  std::size_t rank_serial() const;
  // OpenMP row-update kernel; identical arithmetic, identical result.
  std::size_t rank_parallel() const;
  // Default entry point (parallel kernel for large matrices).
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

class ZMatrix {
 public:
  ZMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Clears denominators row by row; row scaling does not change the rank.
  static ZMatrix from_rationals(std::size_t rows, std::size_t cols,
                                const std::vector<mpq_class>& entries);

  ZMatrix transposed() const;

  // Rank over Q via fraction-free (Bareiss) elimination.
  std::size_t rank_serial() const;
  std::size_t rank_parallel() const;
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> data_;
};

}  // namespace maroni

#endif
