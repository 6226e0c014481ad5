#include "maroni/evalmap.hpp"

#include <algorithm>
#include <chrono>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace maroni {

const char* codim_mode_name(CodimMode mode) {
  return mode == CodimMode::generic ? "generic" : "sharpness";
}

std::pair<long long, long long> SurfacePoint::fiber_id() const {
  long long num = 0, den = 1;
  switch (kind) {
    case Kind::off_e:
    case Kind::on_e:
      num = c1;  // fiber over [x : y], parameter y/x
      den = c0;
      break;
    case Kind::pq:
      num = c3;  // fiber over [Y0 : Y1], parameter Y1/Y0
      den = c2;
      break;
  }
  if (den == 0) return {1, 0};
  long long g = std::gcd(std::abs(num), std::abs(den));
  if (g != 0) num /= g, den /= g;
  if (den < 0) num = -num, den = -den;
  return {num, den};
}

void PointConfiguration::validate(const SurfaceSpec& spec, int max_per_fiber) const {
  for (const auto& pt : points) {
    const bool planar = (pt.kind == SurfacePoint::Kind::pq);
    if (planar != (spec.n == 0))
      throw spec_error(errc::invalid_spec, "point chart does not match the surface");
    switch (pt.kind) {
      case SurfacePoint::Kind::off_e:
        if (pt.c0 == 0 && pt.c1 == 0)
          throw spec_error(errc::bad_chart, "off-E point with x = y = 0 lies on E_n");
        break;
      case SurfacePoint::Kind::on_e:
        if (pt.c0 == 0 && pt.c1 == 0)
          throw spec_error(errc::bad_chart, "(x0, y0) = (0, 0) is not a point of E_n");
        break;
      case SurfacePoint::Kind::pq:
        if ((pt.c0 == 0 && pt.c1 == 0) || (pt.c2 == 0 && pt.c3 == 0))
          throw spec_error(errc::bad_chart, "degenerate point of P^1 x P^1");
        break;
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw spec_error(errc::invalid_spec, "repeated point in configuration");

  std::map<std::pair<long long, long long>, int> per_fiber;
  for (const auto& pt : points)
    if (++per_fiber[pt.fiber_id()] > max_per_fiber)
      throw spec_error(errc::invalid_spec, "too many points on one ruling fiber");
}

namespace {

struct FpRing {
  PrimeField F;
  using Value = std::uint64_t;

  Value term(long long mult, std::initializer_list<std::pair<long long, int>> powers) const {
    if (mult == 0) return 0;
    Value acc = F.reduce_int(mult);
    for (const auto& [base, exp] : powers) {
      if (exp < 0) throw std::logic_error("negative exponent with nonzero multiplier");
      acc = F.mul(acc, F.pow(F.reduce_int(base), static_cast<std::uint64_t>(exp)));
    }
    return acc;
  }
};

struct ZRing {
  using Value = mpz_class;

  Value term(long long mult, std::initializer_list<std::pair<long long, int>> powers) const {
    if (mult == 0) return 0;
    mpz_class acc(static_cast<long>(mult));
    for (const auto& [base, exp] : powers) {
      if (exp < 0) throw std::logic_error("negative exponent with nonzero multiplier");
      mpz_class b(static_cast<long>(base)), pw;
      mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
      acc *= pw;
    }
    return acc;
  }
};

// Three condition rows per point. Points of the exceptional section only
// constrain the two top z-coefficients of the section: the partials of the
// leading coefficient and the value of the next one.
template <typename Ring, typename Matrix>
void fill_singularity_rows(Matrix& M, const Ring& R, const PointConfiguration& config,
                           const SurfaceSpec& spec, const std::vector<Monomial>& basis) {
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    const auto& pt = config.points[i];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& m = basis[j];
      switch (pt.kind) {
        case SurfacePoint::Kind::off_e: {
          M.at(3 * i + 0, j) =
              R.term(m.a, {{pt.c0, m.a - 1}, {pt.c1, m.b}, {pt.c2, m.c}});
          M.at(3 * i + 1, j) =
              R.term(m.b, {{pt.c0, m.a}, {pt.c1, m.b - 1}, {pt.c2, m.c}});
          M.at(3 * i + 2, j) =
              R.term(m.c, {{pt.c0, m.a}, {pt.c1, m.b}, {pt.c2, m.c - 1}});
          break;
        }
        case SurfacePoint::Kind::on_e: {
          if (m.c == spec.h) {
            M.at(3 * i + 0, j) = R.term(m.a, {{pt.c0, m.a - 1}, {pt.c1, m.b}});
            M.at(3 * i + 1, j) = R.term(m.b, {{pt.c0, m.a}, {pt.c1, m.b - 1}});
          } else if (m.c == spec.h - 1) {
            M.at(3 * i + 2, j) = R.term(1, {{pt.c0, m.a}, {pt.c1, m.b}});
          }
          break;
        }
        case SurfacePoint::Kind::pq: {
          const int a0 = m.a, a1 = spec.h - m.a, b0 = m.b, b1 = spec.d - m.b;
          M.at(3 * i + 0, j) = R.term(
              a0, {{pt.c0, a0 - 1}, {pt.c1, a1}, {pt.c2, b0}, {pt.c3, b1}});
          M.at(3 * i + 1, j) = R.term(
              a1, {{pt.c0, a0}, {pt.c1, a1 - 1}, {pt.c2, b0}, {pt.c3, b1}});
          // The Euler relation in the second factor makes the partial along
          // the coordinate vanishing at the point redundant; the third
          // condition has to differentiate along the other one.
          if (pt.c3 == 0)
            M.at(3 * i + 2, j) = R.term(
                b1, {{pt.c0, a0}, {pt.c1, a1}, {pt.c2, b0}, {pt.c3, b1 - 1}});
          else
            M.at(3 * i + 2, j) = R.term(
                b0, {{pt.c0, a0}, {pt.c1, a1}, {pt.c2, b0 - 1}, {pt.c3, b1}});
          break;
        }
      }
    }
  }
}

// One row per point: the value of each basis monomial at the point.
template <typename Ring, typename Matrix>
void fill_value_rows(Matrix& M, const Ring& R, const std::vector<SurfacePoint>& points,
                     const SurfaceSpec& spec, const std::vector<Monomial>& basis) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& m = basis[j];
      if (pt.kind == SurfacePoint::Kind::pq) {
        const int a0 = m.a, a1 = spec.h - m.a, b0 = m.b, b1 = spec.d - m.b;
        M.at(i, j) =
            R.term(1, {{pt.c0, a0}, {pt.c1, a1}, {pt.c2, b0}, {pt.c3, b1}});
      } else if (pt.kind == SurfacePoint::Kind::off_e) {
        M.at(i, j) = R.term(1, {{pt.c0, m.a}, {pt.c1, m.b}, {pt.c2, m.c}});
      } else {
        throw std::logic_error("value rows expect chart points off E_n");
      }
    }
  }
}

void check_characteristic(const SurfaceSpec& spec, const PrimeField& field) {
  if (field.p <= static_cast<std::uint64_t>(std::max(spec.h, spec.d)))
    throw spec_error(errc::char_too_small,
                     "prime must exceed every exponent, need p > " +
                         std::to_string(std::max(spec.h, spec.d)));
}

}  // namespace

FpMatrix evaluation_matrix_fp(const PointConfiguration& config, const SurfaceSpec& spec,
                              const PrimeField& field) {
  spec.validate();
  check_characteristic(spec, field);
  config.validate(spec, 2);
  auto basis = monomial_basis(spec);
  FpMatrix M(3 * config.points.size(), basis.size(), field);
  fill_singularity_rows(M, FpRing{field}, config, spec, basis);
  return M;
}

ZMatrix evaluation_matrix_z(const PointConfiguration& config, const SurfaceSpec& spec) {
  spec.validate();
  config.validate(spec, 2);
  auto basis = monomial_basis(spec);
  ZMatrix M(3 * config.points.size(), basis.size());
  fill_singularity_rows(M, ZRing{}, config, spec, basis);
  return M;
}

namespace {

// Base points of N distinct ruling fibers: the parameter p means the fiber
// at infinity, anything else the fiber over (1 : t).
std::vector<std::uint64_t> sample_distinct_fibers(SplitMix64& rng, int N,
                                                  const PrimeField& field) {
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> out;
  while (static_cast<int>(out.size()) < N) {
    std::uint64_t t = rng.below(field.p + 1);
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

std::pair<long long, long long> fiber_rep(std::uint64_t t, const PrimeField& field) {
  if (t == field.p) return {0, 1};
  return {1, static_cast<long long>(t)};
}

PointConfiguration sample_generic(SplitMix64& rng, const SurfaceSpec& spec, int N,
                                  const PrimeField& field, bool force_on_e) {
  PointConfiguration config;
  for (std::uint64_t t : sample_distinct_fibers(rng, N, field)) {
    auto [fx, fy] = fiber_rep(t, field);
    if (spec.n == 0) {
      std::uint64_t s = rng.below(field.p + 1);
      auto [x0, x1] = fiber_rep(s, field);
      config.points.push_back(SurfacePoint::pq(x0, x1, fx, fy));
    } else if (force_on_e) {
      config.points.push_back(SurfacePoint::on_e(fx, fy));
    } else {
      // The fiber is one affine chart line plus its point on E_n; the chance
      // of landing on E_n matches the point count of the two pieces.
      std::uint64_t u = rng.below(field.p + 1);
      if (u == field.p)
        config.points.push_back(SurfacePoint::on_e(fx, fy));
      else
        config.points.push_back(
            SurfacePoint::off_e(fx, fy, static_cast<long long>(u)));
    }
  }
  return config;
}

PointConfiguration sample_paired(SplitMix64& rng, const SurfaceSpec& spec, int k,
                                 const PrimeField& field) {
  PointConfiguration config;
  for (std::uint64_t t : sample_distinct_fibers(rng, k, field)) {
    auto [fx, fy] = fiber_rep(t, field);
    if (spec.n == 0) {
      std::uint64_t s1 = rng.below(field.p + 1);
      std::uint64_t s2 = s1;
      while (s2 == s1) s2 = rng.below(field.p + 1);
      auto [a0, a1] = fiber_rep(s1, field);
      auto [b0, b1] = fiber_rep(s2, field);
      config.points.push_back(SurfacePoint::pq(a0, a1, fx, fy));
      config.points.push_back(SurfacePoint::pq(b0, b1, fx, fy));
    } else {
      std::uint64_t z1 = rng.below(field.p);
      std::uint64_t z2 = z1;
      while (z2 == z1) z2 = rng.below(field.p);
      config.points.push_back(SurfacePoint::off_e(fx, fy, static_cast<long long>(z1)));
      config.points.push_back(SurfacePoint::off_e(fx, fy, static_cast<long long>(z2)));
    }
  }
  return config;
}

}  // namespace

CodimReport verify_codimension(SurfaceSpec spec, int N, int trials, std::uint64_t seed,
                               CodimMode mode, PrimeField field, bool force_on_e) {
  if (N < 0 || trials < 0) throw spec_error(errc::invalid_spec, "N and trials must be >= 0");
  if (mode == CodimMode::sharpness) {
    if (spec.n < 1)
      throw spec_error(errc::invalid_spec, "the sharpness probe needs E_n, so n >= 1");
    if (spec.h != 3)
      throw spec_error(errc::invalid_spec, "the sharpness probe is stated for h = 3");
    if (N < 1) throw spec_error(errc::invalid_spec, "sharpness needs N >= 1");
    spec.d = 2 * N + 3 * spec.n - 2;  // one below the generic-mode bound
    force_on_e = true;
  } else {
    spec.validate();
    if (spec.d < 2 * N + spec.h * spec.n - 1)
      throw spec_error(errc::range_violation,
                       "generic mode needs d >= 2N + hn - 1 = " +
                           std::to_string(2 * N + spec.h * spec.n - 1));
  }
  spec.validate();
  check_characteristic(spec, field);

  CodimReport report;
  report.spec = spec;
  report.N = N;
  report.mode = mode;
  report.trials = trials;
  report.seed = seed;
  report.prime = field.p;
  report.force_on_e = force_on_e;
  report.expected_rank = 3 * N;
  report.min_rank = 3 * N;

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> ranks(trials, 3 * N);
  std::vector<char> escalated(trials, 0);

  // Trials are independent given their derived seeds, so the loop order is
  // irrelevant to the report.
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    PointConfiguration config = sample_generic(rng, spec, N, field, force_on_e);
    auto rank = static_cast<int>(evaluation_matrix_fp(config, spec, field).rank());
    if (mode == CodimMode::generic && rank != 3 * N) {
      escalated[t] = 1;
      rank = static_cast<int>(evaluation_matrix_z(config, spec).rank());
    }
    ranks[t] = rank;
  }

  for (int t = 0; t < trials; ++t) {
    report.min_rank = std::min(report.min_rank, ranks[t]);
    report.escalations += escalated[t];
    if (mode == CodimMode::generic ? ranks[t] != 3 * N : ranks[t] >= 3 * N) {
      ++report.failures;
      report.failed_trials.push_back(t);
      report.seeds_of_failures.push_back(derive_seed(seed, static_cast<std::uint64_t>(t)));
    }
    if (ranks[t] < 3 * N) report.witnessed_deficit = true;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

PairedReport paired_fiber_codimension(SurfaceSpec spec, int k, PrimeField field,
                                      std::uint64_t seed) {
  spec.validate();
  check_characteristic(spec, field);
  if (k < 0) throw spec_error(errc::invalid_spec, "k must be >= 0");
  if (2 * spec.d < 3 * (k + spec.n) - 2)
    throw spec_error(errc::range_violation, "paired check needs d >= 3(k+n)/2 - 1");
  if (spec.d - k < spec.h * spec.n)
    throw spec_error(errc::range_violation, "residual degree d - k must stay >= h*n");

  PairedReport report;
  report.spec = spec;
  report.k = k;
  report.seed = seed;
  report.prime = field.p;
  report.conditions = 6 * k;

  const int v = section_dimension(spec);
  if (k == 0) {
    report.rank = 0;
    report.kernel_dim = v;
    report.expected_kernel = v;
    report.line_family_dim = v;
    report.ok = true;
    return report;
  }

  SplitMix64 rng(derive_seed(seed, 0));
  PointConfiguration config = sample_paired(rng, spec, k, field);

  auto M = evaluation_matrix_fp(config, spec, field);
  auto rank = static_cast<int>(M.rank());
  if (rank != 6 * k) rank = static_cast<int>(evaluation_matrix_z(config, spec).rank());
  report.rank = rank;
  report.kernel_dim = v - rank;

  // Independent count of the sections divisible by the k fiber equations:
  // residual sections of fiber degree d - k vanishing at the 2k points.
  SurfaceSpec residual = spec;
  residual.d = spec.d - k;
  auto basis = monomial_basis(residual);
  const int vr = section_dimension(residual);
  FpMatrix values(config.points.size(), basis.size(), field);
  fill_value_rows(values, FpRing{field}, config.points, residual, basis);
  auto r2 = static_cast<int>(values.rank());
  if (r2 != 2 * k) {
    ZMatrix zvalues(config.points.size(), basis.size());
    fill_value_rows(zvalues, ZRing{}, config.points, residual, basis);
    r2 = static_cast<int>(zvalues.rank());
  }
  report.line_family_dim = vr - r2;
  report.expected_kernel = vr - 2 * k;
  report.ok = rank == 6 * k && report.kernel_dim == report.line_family_dim &&
              report.kernel_dim == report.expected_kernel;
  return report;
}

}  // namespace maroni
