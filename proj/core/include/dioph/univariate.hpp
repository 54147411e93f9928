#pragma once

#include "dioph/number.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dioph {

/// Dense polynomial in one variable over the rationals, coefficients in
/// ascending degree order. The highest stored coefficient is nonzero; the
/// zero polynomial has no coefficients.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  static UnivariatePolynomial constant(const Rational& c);
  /// The monomial c * t^k.
  static UnivariatePolynomial monomial(const Rational& c, std::size_t k);
  /// t - root.
  static UnivariatePolynomial linear_root(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k (zero beyond the degree).
  Rational coefficient(std::size_t k) const;
  const Rational& leading_coefficient() const;

  Rational evaluate(const Rational& t) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  UnivariatePolynomial operator-() const;
  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) = default;

  UnivariatePolynomial pow(unsigned k) const;

  /// Euclidean division; throws on a zero divisor.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// u / gcd(u, u'), made monic. Throws on the zero polynomial.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u);

struct RationalRoots {
  /// Distinct rational roots, ascending.
  std::vector<Rational> roots;
  /// Squarefree part of u with the rational roots divided out; degree > 0
  /// means u also has irrational roots.
  UnivariatePolynomial irrational_part;
};

/// Distinct rational roots of a nonzero polynomial, found exactly: the
/// polynomial is scaled to a monic integer polynomial whose rational roots
/// are integers inside the Cauchy bound.
RationalRoots rational_roots(const UnivariatePolynomial& u);

}  // namespace dioph
