#pragma once

// JSON file formats read and written by the command-line tool. Rationals are
// always strings "n" or "p/q"; plain JSON integers are accepted on input.

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "nilhodge/central_extension.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/matrix.hpp"
#include "nilhodge/minimal_model.hpp"

namespace nilhodge::io {

using Json = nlohmann::ordered_json;

/// Throws InvalidInput on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);

Rational parse_rational(const Json& value);

/// {"dim": n, "labels": [...]?, "brackets": [{"i": 0, "j": 1, "v": {"2": "1"}}]}
StructureConstants parse_structure_constants(const Json& doc);
LieAlgebra parse_lie(const Json& doc);

/// {"b1": n, "b2": m, "cup": [[...], ...], "hodge_split": [p, q]?}
CupData parse_cup(const Json& doc);

/// {"rank": 2g, "hodge_typed": bool, "cl": [{"i": 0, "j": 1, "v": "p/q"}]}
ExtensionDatum parse_extension(const Json& doc);

/// "elements": list of row-major n × n matrices.
std::vector<Matrix> parse_group_elements(const Json& elements, std::size_t n);

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Json to_json(const Matrix& m);
Json to_json(const StructureConstants& sc);
Json to_json(const HirschTower& tower);
Json to_json(const WeightGradedHodge& mhs);

}  // namespace nilhodge::io
