#pragma once

#include <optional>
#include <string>

#include "poly.hpp"

namespace igusa {

// Expression grammar (whitespace-insensitive):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := INT | 'x' | 'y' | 't' ('^' ['-'] INT)? | '(' expr ')' ('^' INT)?
// 't' is the uniformizer; only t may carry negative exponents.
BivarPoly parse_bivar(const std::string& src, const Fq* F);

// A coefficient literal: an expression in t alone, e.g. "2*t^-1 + 1 + 3*t^2".
LocalNum parse_klit(const std::string& src, const Fq* F);

// Structural match of an expression of the shape
//   y^m - c * x^a * (x - r1)^n1 * ... ,
// returning the factored curve without expanding.  nullopt when the expression
// does not have that shape (the caller then treats it as a plain polynomial).
std::optional<FactoredCurve> parse_curve_expr(const std::string& src, const Fq* F);

// Curve block "gamma0=<lit>; roots=[(<lit>,<int>),...]; m=<int>".  The m key is
// optional when m_from_flag > 0; when both are given they must agree.
FactoredCurve parse_curve_block(const std::string& src, const Fq* F, long m_from_flag);

} // namespace igusa
