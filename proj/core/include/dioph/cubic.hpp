#pragma once

// Genus one: chords and tangents on plane cubics, the group law on
// Weierstrass curves, the Fermat cubic in Weierstrass form, Mordell curve
// searches and the size of Baker's bound.

#include "dioph/bivariate.hpp"
#include "dioph/integral_search.hpp"

#include <optional>
#include <string>

namespace dioph {

/// Third intersection of the cubic f = 0 with its tangent line at p. The
/// tangent is parametrized as p + s * (f_y(p), -f_x(p)), so vertical tangents
/// need no special treatment. Empty when the third intersection is at
/// infinity. Throws if f has degree != 3, p is off the curve, or the
/// gradient vanishes at p.
std::optional<RationalPoint> tangent_third_point(const BivariatePolynomial& f, const RationalPoint& p);

/// Third intersection of the cubic f = 0 with the line through p1 and p2.
/// Empty when it is at infinity. Throws if the points coincide or either is
/// off the curve.
std::optional<RationalPoint> secant_third_point(const BivariatePolynomial& f, const RationalPoint& p1,
                                                const RationalPoint& p2);

/// The point at infinity, or an affine rational point.
struct EllipticPoint {
  std::optional<RationalPoint> affine;

  static EllipticPoint infinity() { return {}; }
  static EllipticPoint at(Rational x, Rational y) { return {RationalPoint{std::move(x), std::move(y)}}; }
  bool is_infinity() const { return !affine.has_value(); }
  friend bool operator==(const EllipticPoint&, const EllipticPoint&) = default;
};

/// y^2 = x^3 + a x + b with 4 a^3 + 27 b^2 != 0.
class WeierstrassCurve {
 public:
  WeierstrassCurve(Integer a, Integer b);
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  Integer discriminant_core() const;  // 4 a^3 + 27 b^2
  bool contains(const EllipticPoint& p) const;
  /// y^2 - x^3 - a x - b.
  BivariatePolynomial polynomial() const;

  EllipticPoint add(const EllipticPoint& p, const EllipticPoint& q) const;
  EllipticPoint negate(const EllipticPoint& p) const;
  EllipticPoint multiply(const EllipticPoint& p, const Integer& n) const;

 private:
  void require_on_curve(const EllipticPoint& p) const;
  Integer a_, b_;
};

/// x^3 + y^3 = c is isomorphic to v^2 = u^3 - 432 c^2 via
///   (x, y) -> (12c / (x + y), 36c (x - y) / (x + y)),
///   (u, v) -> ((36c + v) / (6u), (36c - v) / (6u)).
/// The point at infinity [1 : -1 : 0] of the cubic goes to the identity, and
/// the cubic's chord-tangent sum P + Q is the swap of P * Q.
/// Neither map is defined on x + y = 0 (resp. u = 0).
class FermatCubicTransform {
 public:
  explicit FermatCubicTransform(Integer c);
  const Integer& c() const { return c_; }
  const WeierstrassCurve& curve() const { return curve_; }
  EllipticPoint forward(const RationalPoint& p) const;
  RationalPoint inverse(const EllipticPoint& p) const;

 private:
  Integer c_;
  WeierstrassCurve curve_;
};

/// All integer (x, y) with y^2 = x^3 + k and |x| <= bound. Complete within
/// the bound only. One step is one value of x.
IntegralSearchResult mordell_integral_search(const Integer& k, const Integer& bound,
                                             const SearchOptions& options = {});

/// log10(log10(B)) for Baker's bound B = exp((10^6 M)^(10^6)), M = max(|a|, |b|),
/// i.e. 10^6 log10(10^6 M) + log10(log10(e)). Even for a = b = 1 this is
/// about 6 * 10^6: the bound has a number of digits with six million digits.
struct BakerEstimate {
  /// Rounded to 10 decimal places.
  Rational value;
  /// |value - exact| <= error_bound.
  Rational error_bound;
  /// `value` written out in decimal.
  std::string decimal;
};

BakerEstimate baker_log_log_bound(const Integer& a, const Integer& b);

}  // namespace dioph
