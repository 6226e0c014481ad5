#include "maroni/confspace.hpp"

#include <algorithm>

namespace maroni {

CellStratification CellStratification::projective_space(int dim) {
  CellStratification s;
  for (int m = dim; m >= 0; --m) s.cells.push_back(m);
  return s;
}

GradedTate twisted_bm_config(const CellStratification& strat, int k) {
  if (k < 0) throw spec_error(errc::invalid_spec, "k must be >= 0");
  const auto& cells = strat.cells;
  GradedTate out;
  if (k == 0) return GradedTate::unit();
  if (static_cast<std::size_t>(k) > cells.size()) return out;

  // Walk all k-element index subsets; duplicate cell dimensions then count
  // with the right multiplicity automatically.
  std::vector<int> pick(k, 0);
  for (int i = 0; i < k; ++i) pick[i] = i;
  const int n = static_cast<int>(cells.size());
  while (true) {
    int total = 0;
    for (int idx : pick) total += cells[idx];
    out.add(2 * total, total, 1);

    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// [m k]_q = [m-1 k-1]_q + q^k [m-1 k]_q.
std::vector<long long> gaussian_binomial(int m, int k) {
  if (k < 0 || k > m) return {};
  if (k == 0 || k == m) return {1};
  auto low = gaussian_binomial(m - 1, k - 1);
  auto high = gaussian_binomial(m - 1, k);
  std::vector<long long> out(std::max(low.size(), high.size() + k), 0);
  for (std::size_t j = 0; j < low.size(); ++j) out[j] += low[j];
  for (std::size_t j = 0; j < high.size(); ++j) out[j + k] += high[j];
  return out;
}

GradedTate grassmannian_bm(int k, int m) {
  if (k < 0 || m < 1) throw spec_error(errc::invalid_spec, "need k >= 0, m >= 1");
  GradedTate out;
  if (k > m) return out;
  auto coeffs = gaussian_binomial(m, k);
  const int shift = k * (k - 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    out.add(shift + 2 * static_cast<int>(j), shift / 2 + static_cast<int>(j), coeffs[j]);
  }
  return out;
}

}  // namespace maroni
