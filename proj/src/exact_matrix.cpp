#include "maroni/exact_matrix.hpp"

#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace maroni {

namespace {
// Below this many row*col cells the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 16 * 1024;
}  // namespace

FpMatrix FpMatrix::transposed() const {
  FpMatrix out(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

// Row echelon elimination. `use_omp` only changes who executes the row
// updates; the arithmetic and pivot choices are identical, so both variants
// return the same value for the same input.
static std::size_t fp_rank(const FpMatrix& m, bool use_omp) {
  const PrimeField& F = m.field();
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c)
        std::swap(a[pivot * cols + c], a[rank * cols + c]);

    const std::uint64_t inv = F.inv(a[rank * cols + col]);
    const std::size_t lead = rank * cols;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (use_omp)
#endif
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t head = a[r * cols + col];
      if (head == 0) continue;
      std::uint64_t factor = F.mul(head, inv);
      a[r * cols + col] = 0;
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r * cols + c] = F.sub(a[r * cols + c], F.mul(factor, a[lead + c]));
    }
    ++rank;
  }
  return rank;
}

std::size_t FpMatrix::rank_serial() const { return fp_rank(*this, false); }
std::size_t FpMatrix::rank_parallel() const { return fp_rank(*this, true); }

std::size_t FpMatrix::rank() const {
  return fp_rank(*this, rows_ * cols_ >= kParallelThreshold);
}

ZMatrix ZMatrix::from_rationals(std::size_t rows, std::size_t cols,
                                const std::vector<mpq_class>& entries) {
  ZMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              entries[r * cols + c].get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class scaled = entries[r * cols + c] * mpq_class(lcm);
      out.at(r, c) = scaled.get_num();
    }
  }
  return out;
}

ZMatrix ZMatrix::transposed() const {
  ZMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

// Bareiss two-step elimination. After step k the submatrix entries are the
// k-th order minors divided by the previous pivot, so every division below is
// exact and the entries stay integral.
static std::size_t z_rank(const ZMatrix& m, bool use_omp) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);

  mpz_class prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c)
        std::swap(a[pivot * cols + c], a[rank * cols + c]);

    const std::size_t lead = rank * cols;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (use_omp)
#endif
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class head = a[r * cols + col];
      a[r * cols + col] = 0;
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class t = a[lead + col] * a[r * cols + c] - head * a[lead + c];
        mpz_divexact(a[r * cols + c].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = a[lead + col];
    ++rank;
  }
  return rank;
}

std::size_t ZMatrix::rank_serial() const { return z_rank(*this, false); }
std::size_t ZMatrix::rank_parallel() const { return z_rank(*this, true); }

std::size_t ZMatrix::rank() const {
  return z_rank(*this, rows_ * cols_ >= kParallelThreshold);
}

}  // namespace maroni
