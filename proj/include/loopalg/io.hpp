#pragma once

// Text and JSON forms of polynomials and reports.
//
// Text: `3/2 * E[1,2][-1]*H[1][-3] + ...`, terms in canonical word order.
// JSON: [{"mon": [[i, j, m], ...], "num": "3", "den": "2"}, ...]; a Cartan
// generator H[i] of sl_r is written [i, i, m].

#include <string>

#include <json.hpp>

#include "loopalg/centralizer.hpp"
#include "loopalg/gaudin.hpp"
#include "loopalg/lie.hpp"
#include "loopalg/poly.hpp"
#include "loopalg/talalaev.hpp"

namespace loopalg {

using Json = nlohmann::ordered_json;

std::string format_sym(const LieAlgebraSpec& spec, const SymPoly& p);
std::string format_pbw(const LieAlgebraSpec& spec, const PBWPoly& p);
// Generators printed as E[i,j]^(site).
std::string format_tensor(const LieAlgebraSpec& spec, const TensorPoly& p);
// Polynomials over z_g(f): label j prints as F[j+1] (the power f^(j+1)).
std::string format_zf(const SymPoly& p);

Json poly_to_json(const LieAlgebraSpec& spec, const TermMap& terms);
// Throws std::invalid_argument on malformed input or unknown labels.
TermMap poly_from_json(const LieAlgebraSpec& spec, const Json& j);

Json talalaev_json(const LieAlgebraSpec& spec, const QFamily& q, const CommuteReport* commute);
Json symbol_json(const SymbolReport& report);
Json centralizer_json(const LieAlgebraSpec& spec, const CentralizerRun& run, bool with_bases);
std::string centralizer_table(const CentralizerRun& run);
std::string centralizer_csv(const CentralizerRun& run);
Json section3_json(const Section3Report& report);

Json matrix_json(const RatMatrix& m);
// eigenvalue_num,eigenvalue_den,eigenvalue_float,multiplicity; one block per
// matrix, preceded by a `# name` line.
std::string spectrum_csv(const std::string& name, const SpectrumReport& s);
Json spectrum_json(const SpectrumReport& s);

}  // namespace loopalg
