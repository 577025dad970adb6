#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "umemura/bipoly.hpp"

namespace umemura {

// Polynomial document schema (shared by the CLI and the cache):
//   {"vars": ["r","t"], "terms": [{"c": "<num>/<den>", "e": [deg_r, deg_t]}, ...]}
// Coefficients are exact decimal integer strings; terms are ordered by
// (deg_t, deg_r) descending, which keeps golden files stable.

nlohmann::ordered_json bipoly_to_json(const BiPoly& p);
std::string bipoly_to_json_string(const BiPoly& p);

/// Validating parse of an in-memory JSON value; throws ParseError.
BiPoly bipoly_from_json(const nlohmann::json& doc);
/// Parses document text; ParseError carries the byte position on bad input.
BiPoly bipoly_from_string(std::string_view text);

/// Canonical LaTeX, descending t-degree, e.g. "\frac{1}{8}t - r + \frac{3}{4}".
std::string bipoly_to_latex(const BiPoly& p);

/// binary64 round-trip formatting (17 significant digits) for CSV columns.
std::string format_double17(double x);

}  // namespace umemura
