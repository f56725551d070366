#pragma once

#include <string>
#include <string_view>

#include "mltl/ast.hpp"
#include "mltl/errors.hpp"

namespace mltl {

/// Parses the concrete formula syntax.
///
/// Grammar (whitespace insensitive):
///   formula  := or_expr
///   or_expr  := and_expr { "|" and_expr }
///   and_expr := bin_temp { "&" bin_temp }
///   bin_temp := unary [ ("U"|"R") interval bin_temp ]     (right-assoc)
///   unary    := "!" unary | ("F"|"G") interval unary | atom
///   atom     := "true" | "false" | ident | "(" formula ")"
///   interval := "[" nat "," nat "]"
///   ident    := letter { letter | digit | "_" }, excluding the keywords
///               true false F G U R
///
/// Intervals with lo > hi parse fine; well-definedness is a separate
/// check. Throws ParseError with a SourceSpan on malformed input.
FormulaPtr parse_formula(std::string_view text);

/// Fully parenthesized canonical rendering; parse_formula inverts it.
std::string print_formula(const Formula &f);

/// Line-oriented trace format: one state per line, comma-separated
/// identifiers; an empty line or "-" is the empty state; zero lines denote
/// the empty trace. Accepts LF or CRLF.
Trace parse_trace(std::string_view text);

/// One line per state, identifiers sorted, "-" for the empty state,
/// LF-terminated.
std::string print_trace(const Trace &t);

} // namespace mltl
