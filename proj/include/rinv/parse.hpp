#ifndef RINV_PARSE_HPP
#define RINV_PARSE_HPP

#include <string>

#include "rinv/rational_function.hpp"

namespace rinv {

// Recursive-descent expression parser.
//
// Grammar: identifiers [A-Za-z][A-Za-z0-9_]* (with y^(k) jet-suffix sugar,
// recognized only when adjacent), integer literals, + - * / ^, parentheses.
// '^' binds tightest and takes an integer exponent; one leading '-' per
// factor; implicit multiplication is not allowed.
//
// Syntax problems raise SyntaxError with "line:col"; a vanishing
// denominator raises DivisionByZero.
RationalFunction parse_expression(const std::string& text, const VarTablePtr& table);

// parse_expression restricted to constant-denominator results.
Polynomial parse_polynomial(const std::string& text, const VarTablePtr& table);

}  // namespace rinv

#endif
