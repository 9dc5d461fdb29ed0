#pragma once

#include <string>
#include <string_view>

#include "charmorph/algebra.hpp"

namespace charmorph {

/**
 * Parses the line-oriented linear-map document format:
 *
 *     field rational | field cyclotomic <n> | field gf <p>
 *     d <count>
 *     dim <size>
 *     matrix 1
 *     <dim rows of dim whitespace-separated scalars>
 *     ...
 *     matrix <d>
 *     ...
 *
 * '#' starts a comment; blank lines are ignored.  Scalars follow the
 * scalar text grammar and must contain no internal whitespace.
 * Throws ParseError (with line number), DimensionMismatch or
 * MixedFields.
 */
LinearMap parse_linear_map(std::string_view document);

/// Inverse of parse_linear_map: renders a document that parses back to
/// the same map.
std::string render_linear_map(const LinearMap& map);

/// Field from its document spelling: "rational", "cyclotomic <n>" or
/// "gf <p>"; also accepts the colon forms used on the command line
/// ("cyclotomic:3", "gf:7").
FieldPtr parse_field(std::string_view text);

}  // namespace charmorph
