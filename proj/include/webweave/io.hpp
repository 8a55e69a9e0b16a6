#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "webweave/tableau.hpp"
#include "webweave/web.hpp"

namespace webweave {

/// Key order is part of the file formats, so objects keep insertion order.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);

// Tableau text: one row per line, entries separated by spaces. A skew tableau
// writes '.' for each empty cell at the start of a row.
RowStrictTableau parse_tableau_text(std::string_view text);
std::string format_tableau_text(const RowStrictTableau& t);

// Tableau JSON: {"rows": [[...], ...]}, plus "inner": [...] for skew shapes.
Json tableau_to_json(const RowStrictTableau& t);
RowStrictTableau tableau_from_json(const Json& j);

/// Either format, chosen by whether the first non-blank character is '{'.
RowStrictTableau parse_tableau(std::string_view text);

// Matching JSON: {"n": n, "pairs": [[i, j], ...]}.
Json matching_to_json(const Matching& m);
Matching matching_from_json(const Json& j);

// Web JSON: {"boundary": [{"color": ...}, ...], "internal_count": N,
// "internal_colors": [...], "edges": [["b0", "i0"], ...], "rotation": [[...], ...]}.
// Endpoint "bK" is boundary vertex K+1, "iK" is internal vertex K; rotation
// lists boundary vertices first, then internal ones.
Json web_to_json(const Web& w);
Web web_from_json(const Json& j);

/// Space-separated positive integers.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// Comma-separated partition parts, e.g. "3,3,3".
Shape parse_shape(std::string_view text);

}  // namespace webweave
