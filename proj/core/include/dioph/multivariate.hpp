#pragma once

#include "dioph/number.hpp"
#include "dioph/univariate.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dioph {

enum class MonomialOrder { Lex, GrevLex };

/// Exponent vector; variable 0 is the largest variable in every order.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
/// b - a; requires divides(a, b).
Exponents quotient(const Exponents& b, const Exponents& a);

/// Strict weak ordering of monomials under a runtime-selected order.
struct MonomialLess {
  MonomialOrder order = MonomialOrder::Lex;
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in n variables with rational coefficients. Terms are
/// kept ascending under the attached monomial order, so the leading term is
/// the last one. No zero coefficient is ever stored.
class MultivariatePolynomial {
 public:
  using TermMap = std::map<Exponents, Rational, MonomialLess>;

  explicit MultivariatePolynomial(std::size_t num_vars = 0, MonomialOrder order = MonomialOrder::Lex);

  static MultivariatePolynomial constant(std::size_t num_vars, const Rational& c,
                                         MonomialOrder order = MonomialOrder::Lex);
  static MultivariatePolynomial variable(std::size_t num_vars, std::size_t index,
                                         MonomialOrder order = MonomialOrder::Lex);
  static MultivariatePolynomial term(const Exponents& e, const Rational& c,
                                     MonomialOrder order = MonomialOrder::Lex);

  std::size_t num_vars() const { return num_vars_; }
  MonomialOrder order() const { return terms_.key_comp().order; }
  MultivariatePolynomial with_order(MonomialOrder order) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  /// Largest monomial under the attached order; throws on zero.
  const Exponents& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Adds c * x^e to the polynomial.
  void add_term(const Exponents& e, const Rational& c);
  /// this += c * x^shift * g.
  void add_scaled(const MultivariatePolynomial& g, const Rational& c, const Exponents& shift);

  MultivariatePolynomial operator-() const;
  MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator*=(const Rational& c);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) {
    return a += b;
  }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) {
    return a -= b;
  }
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  friend MultivariatePolynomial operator*(MultivariatePolynomial a, const Rational& c) { return a *= c; }
  friend MultivariatePolynomial operator*(const Rational& c, MultivariatePolynomial a) { return a *= c; }
  /// Term-for-term equality, independent of the attached orders.
  friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b);

  MultivariatePolynomial pow(unsigned k) const;
  MultivariatePolynomial monic() const;
  MultivariatePolynomial derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable `var` by the value (the variable count is unchanged).
  MultivariatePolynomial substitute(std::size_t var, const Rational& value) const;
  /// Replaces variable `var` by a polynomial in the same variable set.
  MultivariatePolynomial substitute(std::size_t var, const MultivariatePolynomial& value) const;

  /// Coefficients c_k with this = sum_k c_k * x_var^k; each c_k is free of x_var.
  std::vector<MultivariatePolynomial> coefficients_in(std::size_t var) const;

  /// Views a polynomial in the single variable `var` as univariate; throws if
  /// any other variable occurs.
  UnivariatePolynomial to_univariate(std::size_t var) const;
  static MultivariatePolynomial from_univariate(const UnivariatePolynomial& u, std::size_t num_vars,
                                                std::size_t var, MonomialOrder order = MonomialOrder::Lex);

  /// Drops/permutes variables: result variable i is this variable map[i].
  /// Variables not listed must not occur.
  MultivariatePolynomial remap(std::size_t new_num_vars, std::span<const long> old_index_of_new) const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// Exact quotient a / b; throws std::logic_error if b does not divide a.
MultivariatePolynomial divide_exact(const MultivariatePolynomial& a, const MultivariatePolynomial& b);

}  // namespace dioph
