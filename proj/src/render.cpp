#include "maroni/render.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace maroni {

std::string tate_term(int weight, long long mult) {
  std::string out = mult == 1 ? "" : std::to_string(mult);
  out += "Q";
  if (weight != 0) out += "(" + std::to_string(weight) + ")";
  return out;
}

std::string tate_line(const GradedTate& g) {
  if (g.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, mult] : g.entries()) {
    if (!first) out << "; ";
    first = false;
    out << "deg " << key.first << ": " << tate_term(key.second, mult);
  }
  return out.str();
}

namespace {

// Symbolic "Q(v-s)^m" for the first-page tables.
std::string symbolic_term(int v, int weight, long long mult, bool latex) {
  const int s = v - weight;
  std::string core = latex ? "\\mathbf{Q}(v-" + std::to_string(s) + ")"
                           : "Q(v-" + std::to_string(s) + ")";
  if (mult != 1) core += latex ? "^{" + std::to_string(mult) + "}" : "^" + std::to_string(mult);
  return core;
}

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out += ' ';
  return out;
}

}  // namespace

std::string latex_tate(int weight, long long mult) {
  std::string core = "\\mathbf{Q}";
  if (weight != 0) core += "(" + std::to_string(weight) + ")";
  if (mult > 1) core += "^{" + std::to_string(mult) + "}";
  return "$" + core + "$";
}

namespace {

}  // namespace

std::string render_e1_text(const VassilievPage& page) {
  const int v = page.v;
  std::ostringstream out;
  out << pad("", 8) << "|";
  for (int i = 1; i <= 4; ++i) out << pad("  " + std::to_string(i), 14);
  out << "\n" << std::string(8 + 1 + 4 * 14, '-') << "\n";
  for (int offset = 3; offset <= 18; ++offset) {
    const int q = 2 * v - offset;
    out << pad("2v-" + std::to_string(offset), 8) << "|";
    for (int i = 1; i <= 4; ++i) {
      std::string cell;
      auto it = page.columns.find(i);
      if (it != page.columns.end()) {
        for (const auto& [w, m] : it->second.weights_in_degree(q + i))
          cell += (cell.empty() ? "" : " ") + symbolic_term(v, w, m, false);
      }
      out << pad("  " + cell, 14);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_e1_latex(const VassilievPage& page) {
  const int v = page.v;
  std::ostringstream out;
  out << "\\begin{tabular}{c|cccc}\n";
  for (int offset = 3; offset <= 18; ++offset) {
    const int q = 2 * v - offset;
    out << "$2v-" << offset << "$";
    for (int i = 1; i <= 4; ++i) {
      out << " & ";
      auto it = page.columns.find(i);
      if (it == page.columns.end()) continue;
      bool first = true;
      for (const auto& [w, m] : it->second.weights_in_degree(q + i)) {
        if (!first) out << "\\ ";
        first = false;
        out << "$" << symbolic_term(v, w, m, true) << "$";
      }
    }
    out << " \\\\\n";
  }
  out << "\\hline\n & 1 & 2 & 3 & 4 \\\\\n\\end{tabular}\n";
  return out.str();
}

namespace {

std::vector<std::string> gysin_arrows(const GysinSolution& sol) {
  std::vector<std::string> arrows;
  for (std::size_t j = 0; j < sol.killed.size(); ++j) {
    long long count = sol.killed[j].class_count();
    for (long long c = 0; c < count; ++c)
      arrows.push_back("(" + std::to_string(j) + ",1)->(" + std::to_string(j + 2) + ",0)");
  }
  return arrows;
}

}  // namespace

std::string render_gysin_text(const GysinSolution& sol, int max_degree) {
  std::ostringstream out;
  out << "q=1 |";
  for (int j = 0; j <= max_degree; ++j) {
    std::string cell;
    for (const auto& [w, m] : sol.base.weights_in_degree(j))
      cell += (cell.empty() ? "" : " ") + tate_term(w - 1, m);
    out << pad(" " + cell, 12);
  }
  out << "\nq=0 |";
  for (int j = 0; j <= max_degree; ++j) {
    std::string cell;
    for (const auto& [w, m] : sol.base.weights_in_degree(j))
      cell += (cell.empty() ? "" : " ") + tate_term(w, m);
    out << pad(" " + cell, 12);
  }
  out << "\narrows (rank 1):";
  for (const auto& arrow : gysin_arrows(sol)) out << " " << arrow;
  out << "\n";
  return out.str();
}

std::string render_gysin_latex(const GysinSolution& sol, int max_degree) {
  std::ostringstream out;
  out << "\\begin{tabular}{c|";
  for (int j = 0; j <= max_degree; ++j) out << "c";
  out << "}\n$1$";
  for (int j = 0; j <= max_degree; ++j) {
    out << " & ";
    for (const auto& [w, m] : sol.base.weights_in_degree(j)) out << latex_tate(w - 1, m);
  }
  out << " \\\\\n$0$";
  for (int j = 0; j <= max_degree; ++j) {
    out << " & ";
    for (const auto& [w, m] : sol.base.weights_in_degree(j)) out << latex_tate(w, m);
  }
  out << " \\\\\n\\hline\n";
  for (int j = 0; j <= max_degree; ++j) out << " & $" << j << "$";
  out << " \\\\\n\\end{tabular}\n% arrows:";
  for (const auto& arrow : gysin_arrows(sol)) out << " " << arrow;
  out << "\n";
  return out.str();
}

namespace {

struct MaroniGrid {
  std::vector<std::string> headers;                  // per column
  std::map<int, std::vector<std::string>> rows;      // q -> cell per column
  int q_min = 0;
};

// Columns printed with the deepest stratum on the left, the dense one on the
// right, matching the usual presentation of the stratification tables.
MaroniGrid maroni_grid(const MaroniTable& table, bool latex) {
  MaroniGrid grid;
  const std::size_t ncols = table.columns.size();
  for (std::size_t c = ncols; c-- > 0;) {
    const auto& col = table.columns[c];
    std::string name;
    if (latex)
      name = table.framed ? "$N^\\dagger_{" + std::to_string(col.stratum.n) + "}$"
                          : "$N_{" + std::to_string(col.stratum.n) + "}$";
    else
      name = "N" + std::to_string(col.stratum.n) + (table.framed ? "+" : "");
    grid.headers.push_back(name);
  }
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& pc : table.columns[c].placed) {
      auto& row = grid.rows[pc.q];
      if (row.empty()) row.assign(ncols, "");
      std::string term =
          latex ? latex_tate(pc.weight, pc.mult) : tate_term(pc.weight, pc.mult);
      auto& cell = row[ncols - 1 - c];
      cell += (cell.empty() ? "" : " ") + term;
      grid.q_min = std::min(grid.q_min, pc.q);
    }
  return grid;
}

}  // namespace

std::string render_maroni_text(const MaroniTable& table) {
  MaroniGrid grid = maroni_grid(table, false);
  std::ostringstream out;
  out << pad("q", 6) << "|";
  for (const auto& h : grid.headers) out << pad(" " + h, 12);
  out << "\n" << std::string(6 + 1 + 12 * grid.headers.size(), '-') << "\n";
  for (int q = 0; q >= grid.q_min; --q) {
    out << pad(std::to_string(q), 6) << "|";
    auto it = grid.rows.find(q);
    for (std::size_t c = 0; c < grid.headers.size(); ++c)
      out << pad(" " + (it == grid.rows.end() ? "" : it->second[c]), 12);
    out << "\n";
  }
  return out.str();
}

std::string render_maroni_latex(const MaroniTable& table) {
  MaroniGrid grid = maroni_grid(table, true);
  std::ostringstream out;
  out << "\\begin{tabular}{";
  for (std::size_t c = 0; c < grid.headers.size(); ++c) out << "c";
  out << "|c}\n";
  for (const auto& h : grid.headers) out << h << " & ";
  out << " \\\\\n\\hline\n";
  for (int q = 0; q >= grid.q_min; --q) {
    auto it = grid.rows.find(q);
    for (std::size_t c = 0; c < grid.headers.size(); ++c)
      out << (it == grid.rows.end() ? "" : it->second[c]) << " & ";
    out << "$" << q << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace maroni
