#pragma once

// Polynomial text grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | INT '/' UINT | VAR | VAR '^' UINT | '(' expr ')' | '-' factor
//
// VAR must be one of the declared variables; whitespace is ignored; there is
// no implicit multiplication. The rational literal INT '/' UINT exists only
// so that polynomials with non-integer coefficients print and re-parse.

#include "dioph/multivariate.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dioph {

MultivariatePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                        MonomialOrder order = MonomialOrder::Lex);

/// Canonical text: terms in descending graded-lex order (variables ranked as
/// listed), integer coefficients bare, others as p/q.
std::string format_polynomial(const MultivariatePolynomial& p, const std::vector<std::string>& variables);

}  // namespace dioph
