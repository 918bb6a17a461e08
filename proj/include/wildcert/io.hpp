#pragma once

#include <string>

#include "json.hpp"
#include "wildcert/repcert.hpp"

namespace wildcert {

using json = nlohmann::ordered_json;

json to_json(const FieldSpec& f);
json to_json(const ResolutionTable& t);
json to_json(const ComplexityEstimate& e);
json to_json(const PeriodicityResult& p);
json to_json(const GrowthEstimate& g);
json to_json(const FamilyReport& r);
json to_json(const Certificate& c);
json algebra_summary_json(const AlgebraTable& a);

std::string table_csv(const ResolutionTable& t);

/// Noncommutative expression over the given generator names, e.g.
/// "xy-yx", "x^3", "2*x*y + y". Single-letter generator names may be
/// juxtaposed; otherwise separate factors with '*'.
NcPoly parse_nc_expr(const std::string& expr,
                     const std::vector<std::string>& gens, const Fq& F);

/// Presentation file (JSON): field {p, e, modulus?}, generators,
/// relations (term lists or expression strings), central (expression
/// strings), degree_bound. Errors cite the line or field.
Presentation parse_presentation_json(const std::string& text,
                                     const std::string& origin);
Presentation load_presentation_file(const std::string& path);

/// "corpus:NAME" or a path to a presentation file.
Presentation resolve_presentation_source(const std::string& source);

/// Module file (JSON): dim, actions {generator: row-major matrix}.
ModuleRep parse_module_json(const std::string& text, AlgPtr algebra,
                            const std::string& origin);
ModuleRep load_module_file(const std::string& path, AlgPtr algebra);

std::string read_file(const std::string& path);

}  // namespace wildcert
