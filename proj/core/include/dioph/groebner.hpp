#pragma once

#include "dioph/multivariate.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dioph {

/// Reduced Groebner basis: monic generators, no leading monomial divides
/// another, sorted by descending leading monomial.
struct GroebnerBasis {
  std::vector<MultivariatePolynomial> generators;
  MonomialOrder order = MonomialOrder::Lex;
  std::size_t num_vars = 0;

  /// The unit ideal.
  bool is_one() const;
};

/// Full normal form of f modulo the divisors (every term reduced).
MultivariatePolynomial normal_form(const MultivariatePolynomial& f, const std::vector<MultivariatePolynomial>& divisors);

MultivariatePolynomial s_polynomial(const MultivariatePolynomial& f, const MultivariatePolynomial& g);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner(const std::vector<MultivariatePolynomial>& gens);
/// Monic generators, no leading monomial divides another term of another
/// generator.
bool is_reduced(const std::vector<MultivariatePolynomial>& gens);

struct BuchbergerOptions {
  /// Maximum number of S-polynomial reductions; unset means unbounded.
  std::optional<std::size_t> step_budget;
};

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// Pairs are processed lowest lcm degree first; pairs with coprime leading
/// monomials and pairs covered by the chain criterion are skipped. Throws
/// BudgetExhausted when the step budget runs out.
GroebnerBasis buchberger(const std::vector<MultivariatePolynomial>& gens, MonomialOrder order,
                         const BuchbergerOptions& options = {});

struct ZeroDimensionalSolutions {
  /// Rational solution vectors, lexicographically sorted.
  std::vector<std::vector<Rational>> solutions;
  /// Univariate eliminants whose remaining roots are irrational.
  std::size_t pruned_branches = 0;
};

/// All rational points of a zero-dimensional ideal given by a lex basis, by
/// back-substitution from the last variable. Throws PositiveDimensionalError
/// if some variable has no pure-power leading monomial.
ZeroDimensionalSolutions solve_zero_dimensional(const GroebnerBasis& basis);

}  // namespace dioph
