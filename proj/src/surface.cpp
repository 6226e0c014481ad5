#include "maroni/surface.hpp"

#include <string>

namespace maroni {

void SurfaceSpec::validate() const {
  if (n < 0) throw spec_error(errc::invalid_spec, "n must be >= 0");
  if (h < 3) throw spec_error(errc::invalid_spec, "h must be >= 3");
  if (d < h * n)
    throw spec_error(errc::invalid_spec, "need d >= h*n, got d=" + std::to_string(d) +
                                             ", h*n=" + std::to_string(h * n));
}

int section_dimension(const SurfaceSpec& spec) {
  spec.validate();
  if (spec.n == 0) return (spec.h + 1) * (spec.d + 1);
  // One row of coefficients per z-exponent c: a + b = d - c*n.
  int total = 0;
  for (int c = 0; c <= spec.h; ++c) total += spec.d - c * spec.n + 1;
  return total;
}

std::vector<Monomial> monomial_basis(const SurfaceSpec& spec) {
  spec.validate();
  std::vector<Monomial> out;
  if (spec.n == 0) {
    for (int a0 = spec.h; a0 >= 0; --a0)
      for (int b0 = spec.d; b0 >= 0; --b0) out.push_back(Monomial{a0, b0, a0});
    return out;
  }
  for (int c = spec.h; c >= 0; --c) {
    int row_degree = spec.d - c * spec.n;
    for (int a = row_degree; a >= 0; --a) out.push_back(Monomial{a, row_degree - a, c});
  }
  return out;
}

int fiber_degree(int g, int n) { return (g + 3 * n + 2) / 2; }

bool is_valid_stratum(int g, int n) {
  if (g < 5 || n < 0) return false;
  if ((g - n) % 2 != 0) return false;
  return 3 * n <= g + 2;
}

StratumInfo stratum_info(int g, int n) {
  if (!is_valid_stratum(g, n))
    throw spec_error(errc::invalid_stratum,
                     "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")");
  StratumInfo s;
  s.n = n;
  s.g = g;
  s.d = fiber_degree(g, n);
  s.codim = n > 1 ? n - 1 : 0;
  s.dim = 2 * g + 2 - n - (n == 0 ? 1 : 0);
  return s;
}

std::vector<StratumInfo> maroni_strata(int g) {
  if (g < 5) throw spec_error(errc::invalid_spec, "genus must be >= 5");
  std::vector<StratumInfo> out;
  for (int n = g % 2; 3 * n <= g + 2; n += 2) out.push_back(stratum_info(g, n));
  return out;
}

}  // namespace maroni
