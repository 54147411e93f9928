#pragma once

#include "dioph/multivariate.hpp"

#include <cstddef>
#include <vector>

namespace dioph {

using PolynomialMatrix = std::vector<std::vector<MultivariatePolynomial>>;

/// Sylvester matrix of f and g with respect to `var`: deg_var(g) shifted rows
/// of f's coefficients on top, then deg_var(f) rows of g's, highest power
/// first.
PolynomialMatrix sylvester_matrix(const MultivariatePolynomial& f, const MultivariatePolynomial& g,
                                  std::size_t var);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
MultivariatePolynomial determinant(PolynomialMatrix m);

/// Res_var(f, g) = det sylvester_matrix(f, g, var). Throws if either input is
/// zero or both are constant in `var`.
MultivariatePolynomial resultant(const MultivariatePolynomial& f, const MultivariatePolynomial& g,
                                 std::size_t var);

}  // namespace dioph
