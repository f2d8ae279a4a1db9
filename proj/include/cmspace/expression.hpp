#pragma once

#include "cmspace/numerics.hpp"

#include <string_view>

namespace cmspace {

/// Evaluates a real-valued expression used to feed relation searches, e.g.
/// "zeta(2,1/3)", "pi^2", "sqrt(8)", "3*zeta(3) - 1/7", "1.25e-3".
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := number | 'pi' | 'zeta(' int [',' int '/' int] ')'
///           | 'sqrt(' expr ')' | '(' expr ')'
///
/// Throws UsageError on malformed input.
BigFloat evaluate_expression(std::string_view text, long precision_bits);

}  // namespace cmspace
