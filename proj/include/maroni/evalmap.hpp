#ifndef MARONI_EVALMAP_HPP
#define MARONI_EVALMAP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maroni/exact_matrix.hpp"
#include "maroni/surface.hpp"

namespace maroni {

// A point of F_n in one of its charts, with integer coordinates (interpreted
// mod p on the fast path and as integers when a computation escalates to the
// rationals).
struct SurfacePoint {
  enum class Kind {
    off_e,  // n >= 1, weighted chart coordinates (x, y, z), (x, y) != (0, 0)
    on_e,   // n >= 1, point (x0, y0) of the exceptional section
    pq,     // n = 0, (X0, X1, Y0, Y1) on P^1 x P^1
  };

  Kind kind = Kind::off_e;
  long long c0 = 0, c1 = 0, c2 = 0, c3 = 0;

  static SurfacePoint off_e(long long x, long long y, long long z) {
    return {Kind::off_e, x, y, z, 0};
  }
  static SurfacePoint on_e(long long x0, long long y0) {
    return {Kind::on_e, x0, y0, 0, 0};
  }
  static SurfacePoint pq(long long x0, long long x1, long long y0, long long y1) {
    return {Kind::pq, x0, x1, y0, y1};
  }

  // Reduced (num, den) of the base point of the ruling fiber through this
  // point; (1, 0) is the fiber at infinity.
  std::pair<long long, long long> fiber_id() const;

  bool operator==(const SurfacePoint&) const = default;
};

struct PointConfiguration {
  std::vector<SurfacePoint> points;

  // Throws when points repeat or some fiber carries more than max_per_fiber
  // points (1 generic, 2 paired).
  void validate(const SurfaceSpec& spec, int max_per_fiber) const;
};

// The 3N x v matrix of the conditions "singular at every point of config" on
// the monomial basis of V_{d,n}. Rows 3i..3i+2 belong to point i and are the
// coordinate partials in the point's chart (for points of the exceptional
// section: the partials of the top coefficient and the value of the next).
FpMatrix evaluation_matrix_fp(const PointConfiguration& config, const SurfaceSpec& spec,
                              const PrimeField& field);
ZMatrix evaluation_matrix_z(const PointConfiguration& config, const SurfaceSpec& spec);

inline std::size_t exact_rank(const FpMatrix& m) { return m.rank(); }
inline std::size_t exact_rank(const ZMatrix& m) { return m.rank(); }

enum class CodimMode { generic, sharpness };

struct CodimReport {
  SurfaceSpec spec;
  int N = 0;
  CodimMode mode = CodimMode::generic;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  bool force_on_e = false;

  int expected_rank = 0;
  int min_rank = 0;
  int failures = 0;                             // trials with rank < 3N after escalation
  std::vector<int> failed_trials;               // ascending trial indices
  std::vector<std::uint64_t> seeds_of_failures; // derived seeds of those trials
  int escalations = 0;                          // mod-p misses re-checked over Q
  bool witnessed_deficit = false;               // sharpness: some rank < 3N seen
  double elapsed_seconds = 0.0;
};

// Generic mode: N points on N distinct ruling fibers per trial, asserting
// rank 3N; requires d >= 2N + hn - 1. A mod-p rank below 3N is re-checked
// over the rationals before being counted as a failure.
// Sharpness mode: d is set to 2N + 3n - 2 and all points are placed on the
// exceptional section, where the rank must drop below 3N.
CodimReport verify_codimension(SurfaceSpec spec, int N, int trials, std::uint64_t seed,
                               CodimMode mode, PrimeField field = PrimeField{},
                               bool force_on_e = false);

struct PairedReport {
  SurfaceSpec spec;
  int k = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  int conditions = 0;       // 6k
  int rank = 0;
  int kernel_dim = 0;       // v - rank
  int expected_kernel = 0;  // dim V_{d-k,n} - 2k
  int line_family_dim = 0;  // dim of {l_1...l_k * g} computed independently
  bool ok = false;
};

// k distinct fibers with two singular points each: the 6k conditions must be
// independent and their kernel must match the space of sections divisible by
// the k fiber equations, counted through the residual section space.
PairedReport paired_fiber_codimension(SurfaceSpec spec, int k, PrimeField field,
                                      std::uint64_t seed);

const char* codim_mode_name(CodimMode mode);

}  // namespace maroni

#endif
