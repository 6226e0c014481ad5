// Compares the serial reference elimination kernels with the OpenMP ones on
// random inputs, and the seeded verification suite end to end.

#include <chrono>
#include <cstdio>
#include <string>

#include "maroni/evalmap.hpp"
#include "maroni/exact_matrix.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using maroni::FpMatrix;
using maroni::PrimeField;
using maroni::ZMatrix;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FpMatrix random_fp(maroni::SplitMix64& rng, std::size_t size, const PrimeField& field) {
  FpMatrix m(size, size, field);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m.at(r, c) = rng.below(field.p);
  return m;
}

ZMatrix random_z(maroni::SplitMix64& rng, std::size_t size) {
  ZMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      m.at(r, c) = static_cast<long>(rng.below(1000003)) - 500000;
  return m;
}

template <typename M>
void compare(const std::string& label, const M& m) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t serial = m.rank_serial();
  double serial_time = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::size_t parallel = m.rank_parallel();
  double parallel_time = seconds_since(t0);

  std::printf("%-24s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   rank %zu%s\n",
              label.c_str(), serial_time, parallel_time,
              parallel_time > 0 ? serial_time / parallel_time : 0.0, serial,
              serial == parallel ? "" : "  ** MISMATCH **");
}

}  // namespace

int main() {
#if defined(_OPENMP)
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("compiled without openmp\n");
#endif

  maroni::SplitMix64 rng(2024);
  PrimeField field;
  for (std::size_t size : {std::size_t{128}, std::size_t{256}, std::size_t{512}})
    compare("mod-p rank " + std::to_string(size) + "^2", random_fp(rng, size, field));
  for (std::size_t size : {std::size_t{48}, std::size_t{64}})
    compare("bareiss rank " + std::to_string(size) + "^2", random_z(rng, size));

  // The verification suite parallelizes over trials; the per-trial work is
  // identical either way, so this measures the harness throughput.
  auto t0 = std::chrono::steady_clock::now();
  auto report =
      maroni::verify_codimension({3, 4, 21}, 5, 200, 0, maroni::CodimMode::generic);
  std::printf("%-24s %8.3f s   (%d trials, %d failures)\n", "verification suite",
              seconds_since(t0), report.trials, report.failures);
  return 0;
}
