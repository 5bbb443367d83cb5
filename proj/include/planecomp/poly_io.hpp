#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "planecomp/poly.hpp"

namespace planecomp {

using Json = nlohmann::ordered_json;

/// Parses the text grammar, e.g. `-3/2*x^2*y + 4*y - 1`. Without `vars` the
/// variables that occur are ordered x, y, z, t, u, v, w first, then by first
/// appearance.
MultiPoly parse_poly(std::string_view text, const Field& field, const std::optional<VarSet>& vars = std::nullopt);

/// Canonical text form: no spaces, terms in decreasing lex order, prime-field
/// coefficients as residues in [0, p).
std::string format_poly(const MultiPoly& p);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// Accepts either a JSON object or a text-grammar string. With a text
/// string, `field` and `vars` supply the context.
MultiPoly poly_from_any(const Json& j, const Field& field, const std::optional<VarSet>& vars);

/// The default variable ordering used by the parser.
VarSet canonical_varset(const std::vector<std::string>& names);

}  // namespace planecomp
