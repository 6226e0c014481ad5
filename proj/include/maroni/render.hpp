#ifndef MARONI_RENDER_HPP
#define MARONI_RENDER_HPP

#include <string>

#include "maroni/assembler.hpp"
#include "maroni/quotient.hpp"
#include "maroni/vassiliev.hpp"

namespace maroni {

// "Q", "Q(-3)", "2Q(3)" ...
std::string tate_term(int weight, long long mult);

// "$\mathbf{Q}(-3)^{2}$" and friends.
std::string latex_tate(int weight, long long mult);

// One line per degree: "deg 4: Q(2); deg 6: 2Q(3); deg 8: Q(4)"; "0" when empty.
std::string tate_line(const GradedTate& g);

// First-page table with rows labeled 2v-3 .. 2v-18 and columns 1..4;
// entries kept symbolic in v.
std::string render_e1_text(const VassilievPage& page);
std::string render_e1_latex(const VassilievPage& page);

// Two-row circle-bundle table with the rank-1 arrows listed.
std::string render_gysin_text(const GysinSolution& sol, int max_degree);
std::string render_gysin_latex(const GysinSolution& sol, int max_degree);

// Stratification table: one column per stratum, rows indexed by q.
std::string render_maroni_text(const MaroniTable& table);
std::string render_maroni_latex(const MaroniTable& table);

}  // namespace maroni

#endif
