#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "qpknot/braid.hpp"
#include "qpknot/classifier.hpp"
#include "qpknot/expression.hpp"

namespace qpknot {

// Braid text grammar (whitespace-insensitive):
//
//   braid   := item* ('@' int)?
//   item    := atom ('^' int)?
//   atom    := 's' int "'"?            sigma_k, or its inverse with the quote
//            | 'b' int ',' int         band generator sigma_{i,j}
//            | 'c[' braid-items '|' int ']'   conjugate w sigma_k w^-1
//            | '(' item* ')'           group
//
// '@n' fixes the strand count; otherwise it is 1 + the largest index used.

/// Parses and expands to a plain word. Throws ParseError.
BraidWord parse_braid_text(std::string_view text);

/// Like parse_braid_text, but keeps the factorization when the text is made
/// only of band generators (SQP) or of band/conjugate factors (QP).
BraidPresentation parse_braid_presentation(std::string_view text);

/// Canonical text, e.g. "s1 s2' s1 @3". parse_braid_text inverts it.
std::string format_braid(const BraidWord& w);
std::string format_presentation(const BraidPresentation& p);

// Expression grammar:
//
//   expr    := unary ('#' unary)*
//   unary   := primary flags*
//   primary := 'T(' int ',' int ')' | 'unknot'
//            | 'cable[' '(' int ',' int ')' (',' '(' int ',' int ')')* ']'
//            | 'twist(' int ')' | 'wh+(' expr ';' int ')' | 'mirror(' expr ')'
//            | 'closure("' braid '")' | '(' expr ')'
//   flags   := '{' flag (',' flag)* '}'
//   flag    := 'fibered' | 'alternating' | 'tb=' int | 'g4=' int | 'genus=' int

/// Throws ParseError for syntax errors and for node invariant violations.
ExprPtr parse_expression_text(std::string_view text);

/// Canonical text; parse_expression_text inverts it.
std::string format_expression(const KnotExpression& e);

/// Reads lines "name<TAB>tb<TAB>source". Blank lines and lines starting with
/// '#' are skipped. Names are parsed as expressions and stored canonically.
/// Throws ParseError with the 1-based line number as position.
void read_tb_table(std::istream& in, TbTable& table);

}  // namespace qpknot
