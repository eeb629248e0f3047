#pragma once

#include "logbb/mpoly.hpp"

#include <string_view>

namespace logbb {

/// Parses the canonical polynomial syntax: +, -, *, ^, parentheses,
/// integer and p/q literals, declared variable names. Inverse of
/// MPoly::str(). Throws ParseError (with byte offset and expected-token
/// set) or UnknownVariable.
MPoly parse_poly(std::string_view text, const AmbientPtr& ambient);

} // namespace logbb
