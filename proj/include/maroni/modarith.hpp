#ifndef MARONI_MODARITH_HPP
#define MARONI_MODARITH_HPP

#include <cstdint>

#include "maroni/errors.hpp"

namespace maroni {

// Default prime for the fast path: the Mersenne prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

// Arithmetic in F_p for a runtime prime p < 2^62. Elements are canonical
// representatives in [0, p).
struct PrimeField {
  std::uint64_t p = kDefaultPrime;

  std::uint64_t reduce_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::logic_error("inverse of zero");
    return pow(a, p - 2);
  }
};

// SplitMix64: a tiny, platform-independent generator. All sampling in the
// toolkit derives from it so that seeded reports are byte-reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); the modulo bias is irrelevant for the
  // genericity sampling done here and keeps the stream trivially portable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Stable mix for deriving independent per-trial seeds from (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
  return g.next();
}

}  // namespace maroni

#endif
