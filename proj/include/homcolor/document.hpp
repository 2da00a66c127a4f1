#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "homcolor/suites.hpp"

namespace homcolor {

using json = nlohmann::json;

/// On-disk algebra document: the algebra plus optional provenance and annotations.
///
///   {
///     "group": {"free_rank": 0, "torsion": [2]},
///     "bicharacter": {"exponent_matrix": [[1]]},
///     "basis": [{"name": "e1", "degree": [0]}, ...],
///     "products": [{"name": "mu", "skew_complete": false,
///                   "entries": [{"left": "e1", "right": "e2", "result": {"e2": "-3/2"}}]}],
///     "alpha": [["1", "0"], ["0", "-1"]],
///     "maps": {"R": [[...]]},
///     "expected": [{"suite": "hom-associative-color", "bind": {"mu": "mu"}},
///                  {"operator": "rota_baxter", "weight": "1", "map": "R"}],
///     "provenance": {...}
///   }
///
/// Matrices hold the image of basis j in column j. Coefficients are strings or
/// JSON integers; floating-point numbers are rejected. A multiplicative group
/// such as {-1, +1} is written additively (Z_2 with -1 -> 1).
struct AlgebraDocument {
  HomAlgebra algebra;
  std::string description;
  json expected = json::array();
  json provenance;  ///< null when absent
};

/// Throws StructuralError on malformed JSON, unknown basis names, odd products or maps,
/// invalid bicharacters and conflicting skew_complete entries.
AlgebraDocument parse_document(const json& doc);
AlgebraDocument load_document(std::string_view text);
AlgebraDocument load_document_file(const std::filesystem::path& path);
HomAlgebra load_algebra(std::string_view text);

/// Canonical rendering: full tables in basis order, reduced fractions, sorted keys.
json render_algebra(const HomAlgebra& alg);
json render_document(const AlgebraDocument& doc);

json render_rational(const Rational& q);
Rational parse_rational_json(const json& value, const std::string& where);
json render_vector(const GradedSpace& space, const Vector& v);
json render_matrix(const LinearMap& m);
LinearMap parse_matrix(const json& rows, std::size_t dim, const std::string& where);

json render_report(const HomAlgebra& alg, const CheckReport& report);
json render_suite_report(const HomAlgebra& alg, const SuiteReport& report);

}  // namespace homcolor
