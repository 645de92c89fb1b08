#pragma once

#include "starq/poly.hpp"

namespace starq {

// Recursive-descent parser for exact polynomial expressions.
// Grammar: integers, rationals p/q, declared identifiers, + - * ^ and
// parentheses, with unary minus; implicit multiplication is not allowed.
// Unknown identifiers and syntax errors raise parse_error with a byte offset.
Poly parse_expr(const std::string& text, const Ctx& ctx);

} // namespace starq
