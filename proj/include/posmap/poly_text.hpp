#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posmap/multipoly.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

/// x1, ..., xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Canonical text: terms in graded-lex order (greatest first), each rendered
/// as "c * v1^e1 v2^e2 ..." with unit exponents omitted; constants are bare;
/// the zero polynomial is "0".
std::string to_text(const MultiPoly& f, std::span<const std::string> names);
std::string to_text(const MultiPoly& f);

struct ParsedPoly {
    MultiPoly poly;
    std::vector<std::string> names;
};

/// Parses a sum of terms over the given variables. Terms are products of
/// rational numbers and powers "name^k"; factors may be separated by
/// whitespace or '*'. Unknown names are a ParseError.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> names);

/// As above, with variables discovered from the text and ordered by
/// alphabetic prefix, then numeric suffix (x1 < x2 < x10 < y1).
ParsedPoly parse_poly(std::string_view text);

/// Univariate parse: at most one distinct variable name may occur.
UniPoly parse_unipoly(std::string_view text);

}  // namespace posmap
