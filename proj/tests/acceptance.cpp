// Acceptance suite: one line per criterion, every check exact.
// Usage: acceptance [path-to-cli-binary]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maroni/assembler.hpp"
#include "maroni/json_io.hpp"

using maroni::GradedTate;
using maroni::SurfaceSpec;

namespace {

int failures = 0;

GradedTate from_list(std::initializer_list<std::tuple<int, int, long long>> items) {
  GradedTate g;
  for (const auto& [d, w, m] : items) g.add(d, w, m);
  return g;
}

void run(int number, const std::string& label, double budget_seconds,
         const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (error.empty() && elapsed > budget_seconds)
    error = "over time budget of " + std::to_string(budget_seconds) + " s";
  std::printf("%s criterion %2d: %s (%.2f s)\n", error.empty() ? "PASS" : "FAIL", number,
              label.c_str(), elapsed);
  if (!error.empty()) {
    std::printf("     %s\n", error.c_str());
    ++failures;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) throw std::runtime_error("mismatch: " + what);
}

// ---- fixtures ----

GradedTate hirzebruch_config_fixture(int k) {
  switch (k) {
    case 1: return from_list({{0, 0, 1}, {2, 1, 2}, {4, 2, 1}});
    case 2: return from_list({{2, 1, 2}, {4, 2, 2}, {6, 3, 2}});
    case 3: return from_list({{4, 2, 1}, {6, 3, 2}, {8, 4, 1}});
    case 4: return from_list({{8, 4, 1}});
  }
  return {};
}

GradedTate table1_column_fixture(int v, int i) {
  switch (i) {
    case 1:
      return from_list({{2 * v - 2, v - 1, 1}, {2 * v - 4, v - 2, 2}, {2 * v - 6, v - 3, 1}});
    case 2:
      return from_list({{2 * v - 5, v - 3, 2}, {2 * v - 7, v - 4, 2}, {2 * v - 9, v - 5, 2}});
    case 3:
      return from_list(
          {{2 * v - 8, v - 5, 1}, {2 * v - 10, v - 6, 2}, {2 * v - 12, v - 7, 1}});
    case 4:
      return from_list({{2 * v - 13, v - 8, 1}});
  }
  return {};
}

GradedTate eq8_fixture() {
  return from_list({{0, 0, 1}, {3, -2, 1}, {5, -3, 1}, {8, -5, 1}});
}

GradedTate stratum_fixture() {
  return from_list({{0, 0, 1}, {2, -1, 1}, {5, -3, 1}, {7, -4, 1}});
}

GradedTate stratum0_fixture() { return from_list({{0, 0, 1}, {5, -3, 1}}); }

std::string exec_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  if (pclose(pipe) != 0) throw std::runtime_error("command failed: " + command);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  run(1, "configuration-space fixtures on the surface cells", 1.0, [] {
    auto surface = maroni::CellStratification::hirzebruch();
    for (int k = 1; k <= 4; ++k)
      require_eq(maroni::twisted_bm_config(surface, k), hirzebruch_config_fixture(k),
                 "surface cells, k=" + std::to_string(k));
    for (int k = 5; k <= 8; ++k)
      require(maroni::twisted_bm_config(surface, k).empty(), "k >= 5 must vanish");
    auto plane = maroni::CellStratification::p2_minus_point();
    require_eq(maroni::twisted_bm_config(plane, 2), GradedTate::single(6, 3),
               "punctured plane, k=2");
    for (int k = 3; k <= 6; ++k)
      require(maroni::twisted_bm_config(plane, k).empty(), "punctured plane, k >= 3");
  });

  run(2, "Grassmannian oracle for projective spaces", 1.0, [] {
    for (int N = 0; N <= 6; ++N) {
      auto cells = maroni::CellStratification::projective_space(N);
      for (int k = 0; k <= 8; ++k)
        require_eq(maroni::twisted_bm_config(cells, k), maroni::grassmannian_bm(k, N + 1),
                   "P^" + std::to_string(N) + ", k=" + std::to_string(k));
    }
  });

  run(3, "first-page assembly matches the transcribed table", 1.0, [] {
    for (const SurfaceSpec spec :
         {SurfaceSpec{1, 3, 25}, SurfaceSpec{2, 3, 30}, SurfaceSpec{3, 3, 35}}) {
      const int v = 4 * spec.d + 4 - 6 * spec.n;
      require_eq(maroni::section_dimension(spec), v, "dimension closed form");
      auto page = maroni::e1_page(spec);
      long long entries = 0;
      for (int i = 1; i <= 4; ++i) {
        require_eq(page.columns.at(i), table1_column_fixture(v, i),
                   "column " + std::to_string(i));
        entries += page.columns.at(i).class_count();
      }
      require_eq(entries, 15LL, "15 table entries");
    }
  });

  run(4, "product cross-check of the stable section cohomology", 1.0, [] {
    const GradedTate product = maroni::groups::gl2().tensor(eq8_fixture());
    for (const SurfaceSpec spec :
         {SurfaceSpec{1, 3, 25}, SurfaceSpec{2, 3, 30}, SurfaceSpec{3, 3, 35}}) {
      auto sections = maroni::stable_cohomology_sections(spec);
      require_eq(sections.classes, product.truncate(sections.max_degree),
                 "tensor cross-check, n=" + std::to_string(spec.n));
    }
    SurfaceSpec plane{0, 3, 25};
    auto sections = maroni::stable_cohomology_sections(plane);
    require_eq(sections.classes.class_count(), 16LL, "class count 16 = 8 * 2");
    auto quotient = maroni::sections_profile_untruncated(plane).divide(
        maroni::groups::g0_reductive());
    require_eq(quotient, stratum0_fixture(), "division by the n=0 group");
  });

  run(5, "randomized exact codimension suite", 60.0, [] {
    for (int n = 0; n <= 3; ++n)
      for (int h = 3; h <= 4; ++h)
        for (int N = 1; N <= 5; ++N) {
          const int d = 2 * N + h * n - 1;
          auto report = maroni::verify_codimension({n, h, d}, N, 50, 0,
                                                   maroni::CodimMode::generic);
          require(report.failures == 0,
                  "failures at n=" + std::to_string(n) + " h=" + std::to_string(h) +
                      " N=" + std::to_string(N));
          require(report.min_rank == 3 * N, "rank short of 3N");
        }
    auto sharp = maroni::verify_codimension({1, 3, 0}, 3, 20, 0,
                                            maroni::CodimMode::sharpness);
    require(sharp.spec.d == 7, "sharpness degree 2N + 3n - 2");
    require(sharp.witnessed_deficit && sharp.min_rank < 9,
            "sharpness probe must see rank < 9");
    auto paired1 = maroni::paired_fiber_codimension({1, 3, 9}, 1, maroni::PrimeField{}, 0);
    require(paired1.rank == 6 && paired1.ok, "paired check (n=1, d=9, k=1)");
    auto paired2 = maroni::paired_fiber_codimension({0, 3, 5}, 2, maroni::PrimeField{}, 0);
    require(paired2.rank == 12 && paired2.ok, "paired check (n=0, d=5, k=2)");
  });

  run(6, "graded quotient dimensions [1, 1, 0] on every stratum", 5.0, [] {
    for (int g = 6; g <= 40; ++g)
      for (int n = 1; 3 * n <= g + 2; ++n) {
        if ((g - n) % 2 != 0) continue;
        auto ideal = maroni::ideal_generators(g, n);
        auto dims = maroni::truncated_quotient_dims(ideal, 2);
        require_eq(dims, std::vector<int>{1, 1, 0},
                   "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")");
        require_eq(maroni::truncated_quotient_dims_fp(ideal, 2, maroni::PrimeField{}), dims,
                   "mod-p agreement at (g,n)=(" + std::to_string(g) + "," +
                       std::to_string(n) + ")");
      }
  });

  run(7, "stratum pipeline reproduces the stratum profiles", 10.0, [] {
    const std::vector<std::pair<int, int>> grid = {{1, 29}, {2, 32}, {3, 35}, {4, 38}};
    for (const auto& [n, g] : grid) {
      auto result = maroni::stratum_cohomology(n, g);
      require_eq(result.classes, stratum_fixture(), "profile at n=" + std::to_string(n));
      require_eq(result.max_degree, (g - 3 * n + 2) / 4, "window at n=" + std::to_string(n));
    }
    auto plane = maroni::stratum_cohomology(0, 20);
    require_eq(plane.classes, stratum0_fixture(), "profile at n=0");
    require_eq(plane.max_degree, (20 + 2) / 4, "window at n=0");
  });

  run(8, "stable cohomology across the genus grid", 10.0, [] {
    const GradedTate plain = from_list({{0, 0, 1}, {2, -1, 1}, {4, -2, 1}});
    const GradedTate framed = from_list({{0, 0, 1}, {2, -1, 1}, {5, -3, 1}, {7, -4, 1}});
    for (int g = 8; g <= 40; ++g) {
      auto result = maroni::stable_cohomology(g, false);
      require_eq(result.bound, g % 2 == 0 ? g / 4 : (g - 3) / 4,
                 "bound at g=" + std::to_string(g));
      require_eq(result.strict, (g % 4 == 0) || (g % 4 == 3),
                 "strictness at g=" + std::to_string(g));
      const int top = result.strict ? result.bound - 1 : result.bound;
      require_eq(result.classes, plain.truncate(top), "classes at g=" + std::to_string(g));

      auto framed_result = maroni::stable_cohomology(g, true);
      require(framed_result.bound == result.bound && framed_result.strict == result.strict,
              "framed range differs at g=" + std::to_string(g));
      const int framed_top =
          framed_result.strict ? framed_result.bound - 1 : framed_result.bound;
      require_eq(framed_result.classes, framed.truncate(framed_top),
                 "framed classes at g=" + std::to_string(g));
    }
  });

  run(9, "range minimization reduces to the closed forms", 1.0, [] {
    for (int g = 8; g <= 40; ++g) {
      auto range = maroni::stable_range(g, false);
      require_eq(range.quarters, static_cast<long long>(g % 2 == 0 ? g : g - 3),
                 "quarters at g=" + std::to_string(g));
    }
  });

  run(10, "byte-identical reports for identical seeds", 30.0, [&] {
    auto first = maroni::canonical_dump(maroni::to_json(
        maroni::verify_codimension({1, 3, 7}, 2, 50, 0, maroni::CodimMode::generic)));
    auto second = maroni::canonical_dump(maroni::to_json(
        maroni::verify_codimension({1, 3, 7}, 2, 50, 0, maroni::CodimMode::generic)));
    require(first == second && !first.empty(), "in-process reports differ");
    if (!cli.empty()) {
      const std::string cmd =
          cli + " verify-codim --n 1 --h 3 --d 7 --N 2 --trials 50 --seed 0 --output json";
      require(exec_capture(cmd) == exec_capture(cmd), "CLI reports differ");
      // Reports do not depend on the thread count.
      require(exec_capture("OMP_NUM_THREADS=3 " + cmd) == exec_capture(cmd),
              "CLI report depends on the thread count");
      const std::string stable_cmd = cli + " stable --genus 40 --output json";
      require(exec_capture(stable_cmd) == exec_capture(stable_cmd),
              "CLI stable documents differ");
    }
  });

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
