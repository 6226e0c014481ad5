#ifndef MARONI_JSON_IO_HPP
#define MARONI_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "maroni/assembler.hpp"
#include "maroni/chow.hpp"
#include "maroni/evalmap.hpp"
#include "maroni/quotient.hpp"
#include "maroni/vassiliev.hpp"

namespace maroni {

// All documents use canonical JSON: object keys sorted (the library's map
// order) and class lists sorted by (degree, weight), so identical requests
// produce identical bytes.
using json = nlohmann::json;

json to_json(const GradedTate& g);
GradedTate graded_from_json(const json& j);

json to_json(const SurfaceSpec& spec);
json to_json(const StratumInfo& info);

// Exponent tuples: [a, b, c] in the weighted chart, [a0, a1, b0, b1] on the
// product of two lines.
json monomials_to_json(const std::vector<Monomial>& basis, const SurfaceSpec& spec);
json to_json(const VassilievPage& page);
json to_json(const CodimReport& report, bool include_timing = false);
json to_json(const PairedReport& report);
json to_json(const TschirnhausenIdeal& ideal);
json to_json(const EulerRanks& ranks);
json to_json(const MaroniTable& table);
json to_json(const CancellationReport& report);

// External axioms a document relies on, spelled by content.
json assumptions_spectral();  // degeneration of the first page in range
json assumptions_stratification();  // rank-1 differentials from the tautological ring

std::string canonical_dump(const json& j);

}  // namespace maroni

#endif
