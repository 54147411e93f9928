#pragma once

#include "dioph/multivariate.hpp"
#include "dioph/number.hpp"
#include "dioph/univariate.hpp"

#include <map>
#include <string>
#include <utility>

namespace dioph {

/// Exact rational point (x, y) of the affine plane.
struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Plane curve equation f(x, y) with integer coefficients. Keys are
/// (exponent of x, exponent of y); no zero coefficient is stored.
class BivariatePolynomial {
 public:
  using Monomial = std::pair<unsigned, unsigned>;
  using TermMap = std::map<Monomial, Integer>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(TermMap terms);

  /// Requires two variables and integer coefficients.
  static BivariatePolynomial from_multivariate(const MultivariatePolynomial& p);
  /// Parses with the variable list [x, y].
  static BivariatePolynomial parse(const std::string& text);
  MultivariatePolynomial to_multivariate(MonomialOrder order = MonomialOrder::Lex) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coefficient(unsigned i, unsigned j) const;
  Integer constant_term() const { return coefficient(0, 0); }

  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  long degree_in_x() const;
  long degree_in_y() const;
  bool is_homogeneous() const;

  /// Homogeneous part of top total degree; throws on the zero polynomial.
  BivariatePolynomial leading_form() const;
  BivariatePolynomial derivative_x() const;
  BivariatePolynomial derivative_y() const;
  /// f(y, x).
  BivariatePolynomial swapped() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  Rational evaluate(const RationalPoint& p) const { return evaluate(p.x, p.y); }
  /// r^d * f(p/r, q/r) with d the total degree, in integers.
  Integer evaluate_homogeneous(const Integer& p, const Integer& q, const Integer& r) const;

  /// f(x0 + s*dx, y0 + s*dy) as a polynomial in s.
  UnivariatePolynomial restrict_to_line(const RationalPoint& base, const Rational& dx, const Rational& dy) const;
  /// F(x, 1) for a homogeneous F, as a polynomial in x.
  UnivariatePolynomial dehomogenize_y() const;

  BivariatePolynomial operator-() const;
  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Canonical text in the polynomial grammar.
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Integer& c);
  TermMap terms_;
};

/// Number of distinct linear factors over the complex numbers of a nonzero
/// homogeneous form, i.e. the degree of its squarefree part. Equals the
/// number of distinct points at infinity of the projective closure.
unsigned distinct_linear_factor_count(const BivariatePolynomial& form);

}  // namespace dioph
