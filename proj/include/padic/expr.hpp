#pragma once

#include <string>

#include "padic/ratfunc.hpp"

namespace padic {

// Parse failure with 1-based position inside the offending expression.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column);
  int line;
  int column;
};

// Recursive-descent parser for the shared expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := integer | integer'/'integer | 'T' | '(' expr ')'
// plus an optional leading minus per (sub)expression, which subsumes the
// signed-integer atoms.
RatFunc parse_ratfunc(const std::string& text);

// Canonical expression rendering; parse(to_expr_string(f)) == f.
std::string to_expr_string(const Poly& f);
std::string to_expr_string(const RatFunc& f);

}  // namespace padic
