#include "maroni/chow.hpp"

#include <string>

#include "maroni/surface.hpp"

namespace maroni {

void GradedPolynomial::add(Exponent e, long long coeff) {
  if (coeff == 0) return;
  auto it = terms.find(e);
  long long next = (it == terms.end() ? 0 : it->second) + coeff;
  if (next == 0) {
    if (it != terms.end()) terms.erase(it);
  } else {
    terms[e] = next;
  }
}

GradedPolynomial GradedPolynomial::times_monomial(Exponent e) const {
  GradedPolynomial out;
  for (const auto& [m, c] : terms) out.add({m.a + e.a, m.b + e.b, m.c + e.c}, c);
  return out;
}

bool GradedPolynomial::homogeneous_of_degree(int t) const {
  for (const auto& [m, c] : terms)
    if (m.degree() != t) return false;
  return true;
}

TschirnhausenIdeal ideal_generators(int g, int n) {
  if (!is_valid_stratum(g, n) || n < 1)
    throw spec_error(errc::invalid_stratum, "need a valid stratum with n >= 1, got (g,n)=(" +
                                                std::to_string(g) + "," + std::to_string(n) +
                                                ")");
  TschirnhausenIdeal ideal;
  ideal.g = g;
  ideal.n = n;
  const long long B = (static_cast<long long>(g) + n + 2) / 2;
  const long long G = g;
  ideal.b = B;

  GradedPolynomial g1;
  g1.add({1, 0, 0}, -9 * B + 8 * G + 12);
  g1.add({0, 1, 0}, 9 * B - G - 6);

  GradedPolynomial g2;
  g2.add({2, 0, 0}, 4);
  g2.add({1, 1, 0}, -1);
  g2.add({0, 2, 0}, 4);
  g2.add({0, 0, 1}, -9 * B * B + 9 * B * G - 4 * G * G + 18 * B - 12 * G - 8);

  GradedPolynomial g3;
  g3.add({2, 0, 0}, -12 * B + 12 * G + 20);
  g3.add({1, 1, 0}, -2);
  g3.add({0, 2, 0}, 12 * B - 4);
  g3.add({0, 0, 1}, -12 * B * B * G + 12 * B * G * G - 4 * G * G * G - 18 * B * B +
                        42 * B * G - 20 * G * G + 36 * B - 32 * G - 16);

  GradedPolynomial g4;
  g4.add({3, 0, 0}, 4);
  g4.add({0, 3, 0}, 4);
  g4.add({1, 0, 1}, -12 * B * B + 24 * B * G - 12 * G * G + 42 * B - 40 * G - 32);
  g4.add({0, 1, 1}, -12 * B * B + 6 * B + 2 * G + 4);

  ideal.generators = {g1, g2, g3, g4};
  return ideal;
}

std::vector<GradedPolynomial::Exponent> monomials_of_degree(int t) {
  std::vector<GradedPolynomial::Exponent> out;
  for (int c = 0; 2 * c <= t; ++c)
    for (int a = t - 2 * c; a >= 0; --a) out.push_back({a, t - 2 * c - a, c});
  return out;
}

namespace {

// Rows of the degree-t Macaulay matrix: every product (monomial of degree
// t - deg gen) * generator, written in the degree-t monomial basis.
std::vector<GradedPolynomial> macaulay_rows(const TschirnhausenIdeal& ideal, int t) {
  std::vector<GradedPolynomial> rows;
  for (const auto& gen : ideal.generators) {
    if (gen.is_zero()) continue;
    const int dg = gen.terms.begin()->first.degree();
    if (dg > t) continue;
    for (const auto& mono : monomials_of_degree(t - dg))
      rows.push_back(gen.times_monomial(mono));
  }
  return rows;
}

template <typename Matrix, typename SetEntry>
int relation_rank(const TschirnhausenIdeal& ideal, int t, Matrix&& make,
                  SetEntry&& set_entry) {
  auto basis = monomials_of_degree(t);
  std::map<GradedPolynomial::Exponent, std::size_t> index;
  for (std::size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;

  auto rows = macaulay_rows(ideal, t);
  if (rows.empty()) return 0;
  auto M = make(rows.size(), basis.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [mono, coeff] : rows[r].terms) set_entry(M, r, index.at(mono), coeff);
  return static_cast<int>(M.rank());
}

}  // namespace

std::vector<int> truncated_quotient_dims(const TschirnhausenIdeal& ideal, int up_to) {
  if (up_to < 0) throw spec_error(errc::invalid_spec, "up_to must be >= 0");
  std::vector<int> dims;
  for (int t = 0; t <= up_to; ++t) {
    int rank = relation_rank(
        ideal, t, [](std::size_t r, std::size_t c) { return ZMatrix(r, c); },
        [](ZMatrix& M, std::size_t r, std::size_t c, long long v) {
          M.at(r, c) = static_cast<long>(v);
        });
    dims.push_back(static_cast<int>(monomials_of_degree(t).size()) - rank);
  }
  return dims;
}

std::vector<int> truncated_quotient_dims_fp(const TschirnhausenIdeal& ideal, int up_to,
                                            PrimeField field) {
  if (up_to < 0) throw spec_error(errc::invalid_spec, "up_to must be >= 0");
  std::vector<int> dims;
  for (int t = 0; t <= up_to; ++t) {
    int rank = relation_rank(
        ideal, t, [&](std::size_t r, std::size_t c) { return FpMatrix(r, c, field); },
        [](FpMatrix& M, std::size_t r, std::size_t c, long long v) { M.set_int(r, c, v); });
    dims.push_back(static_cast<int>(monomials_of_degree(t).size()) - rank);
  }
  return dims;
}

EulerRanks euler_ranks(int g, int n) {
  auto dims = truncated_quotient_dims(ideal_generators(g, n), 2);
  EulerRanks ranks;
  ranks.ranks[0] = dims[1] >= 1 ? 1 : 0;
  ranks.ranks[2] = dims[2];
  ranks.ranks[5] = 1;
  return ranks;
}

}  // namespace maroni
