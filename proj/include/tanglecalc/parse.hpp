#pragma once

#include "tanglecalc/expr.hpp"

#include <string>
#include <variant>

namespace tanglecalc {

using Parsed = std::variant<ExprPtr, LinkExpr>;

/// Parse either a tangle expression or a link expression.
///
/// Grammar (whitespace free between tokens):
///   expr   := prod
///   prod   := sum ("*" sum)*              -- left-associative
///   sum    := atom ("+" atom)*            -- left-associative; "+" binds tighter
///   atom   := "T[" frac "]" | "Q" nat | "T(" frac {"," frac} ")"
///           | "rot(" expr ")" | "(" expr ")"
///   link   := "N(" expr ")" | "M(" frac {"," frac} ")"
///           | "glue(" expr ";" expr [";" gluing] ")"
///   gluing := ("identity" | "quarter") ["," "mirror"]   -- case-insensitive
///   frac   := "inf" | "-inf" | int ["/" int]
///
/// "T(r1,...,rn)" is sugar for the left-nested sum of the T[ri];
/// "Q0" parses to T[inf]; "rot(...)" is applied immediately, so parse results
/// never contain a Rot node. Throws SyntaxError (with 0-based input position)
/// on malformed input and MontesinosDenominatorError for "M(...)" entries
/// whose reduced denominator is < 2.
Parsed parseInput(const std::string& text);

/// Like parseInput but requires a tangle; link syntax raises SyntaxError.
ExprPtr parseTangle(const std::string& text);

/// Like parseInput but requires a link; bare tangle syntax raises SyntaxError.
LinkExpr parseLinkExpr(const std::string& text);

/// Canonical text form; parse(print(e)) is structurally e. Horizontal ring
/// tangles print as "rot(Qn)".
std::string printExpr(const ExprPtr& e);
std::string printLink(const LinkExpr& link);
std::string printParsed(const Parsed& p);

}  // namespace tanglecalc
