#include "dioph/resultant.hpp"

#include "dioph/error.hpp"

#include <utility>

namespace dioph {

PolynomialMatrix sylvester_matrix(const MultivariatePolynomial& f, const MultivariatePolynomial& g,
                                  std::size_t var) {
  const std::vector<MultivariatePolynomial> fc = f.coefficients_in(var);
  const std::vector<MultivariatePolynomial> gc = g.coefficients_in(var);
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  const std::size_t size = m + n;
  const MultivariatePolynomial zero(f.num_vars(), f.order());
  PolynomialMatrix s(size, std::vector<MultivariatePolynomial>(size, zero));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = fc[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = gc[n - k];
  }
  return s;
}

MultivariatePolynomial determinant(PolynomialMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  const std::size_t nv = m[0][0].num_vars();
  const MonomialOrder order = m[0][0].order();
  MultivariatePolynomial prev = MultivariatePolynomial::constant(nv, 1, order);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultivariatePolynomial(nv, order);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultivariatePolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
    }
    prev = m[k][k];
  }
  MultivariatePolynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

MultivariatePolynomial resultant(const MultivariatePolynomial& f, const MultivariatePolynomial& g,
                                 std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant with the zero polynomial");
  if (f.num_vars() != g.num_vars()) throw PreconditionError("resultant operands have different variable sets");
  if (var >= f.num_vars()) throw PreconditionError("resultant variable out of range");
  if (!f.involves(var) && !g.involves(var)) {
    throw PreconditionError("resultant: both polynomials are constant in the elimination variable");
  }
  return determinant(sylvester_matrix(f, g, var));
}

}  // namespace dioph
