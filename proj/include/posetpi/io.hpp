#pragma once

#include "posetpi/coloring.hpp"
#include "posetpi/covering.hpp"
#include "posetpi/int_matrix.hpp"
#include "posetpi/poset.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace posetpi {

using Json = nlohmann::json;

/// {"elements":[{"id":…}], "hasse":[[lower, upper], …]} or
/// {"facets":[[v, …], …]} (face poset of a simplicial complex). A cover dump
/// with an extra "projection" object is read as a plain poset. Throws
/// ParseError on malformed input.
Poset poset_from_json(const Json& j);
/// True when the document describes a simplicial complex.
bool is_simplicial_json(const Json& j);
Json poset_to_json(const Poset& p);

SimplicialComplex complex_from_json(const Json& j);

/// Poset JSON plus "projection": {cover id: base id} and "sheet":
/// {cover id: group element}.
Json cover_to_json(const CoverPoset& cp);

/// {"target": "presentation" | "table", "group": "<presentation>",
///  "edges": [[lower, upper, color], …]}. Colors are words over the
/// presentation; for a table target they may also be element indices of the
/// table obtained by coset enumeration of "group". Missing edges are
/// colored 1. Throws ParseError.
Coloring coloring_from_json(const Poset& p, const Json& j, std::size_t max_cosets = default_max_cosets);
/// A table coloring only records its order unless `group`, the presentation
/// the table was enumerated from, is given; only then can it be read back.
Json coloring_to_json(const Coloring& c, const GroupPresentation* group = nullptr);

/// Reads and parses a JSON file; throws ParseError.
Json read_json(const std::filesystem::path& path);

/// SHA-256 of the canonical text form "rows cols\n" followed by one line of
/// space-separated entries per row.
std::string matrix_sha256(const IntMatrix& m);

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
Json integer_to_json(const Integer& x);

}  // namespace posetpi
