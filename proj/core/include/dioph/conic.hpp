#pragma once

// Genus zero: deciding a x^2 + b y^2 = c over the rationals and generating
// the rational points of a conic from one of them by lines through it.

#include "dioph/bivariate.hpp"
#include "dioph/integral_search.hpp"

#include <optional>
#include <vector>

namespace dioph {

/// a x^2 + b y^2 = c with a, b >= 1.
class Conic {
 public:
  Conic(Integer a, Integer b, Integer c);
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  BivariatePolynomial polynomial() const;

 private:
  Integer a_, b_, c_;
};

struct HolzerVerdict {
  /// floor(sqrt(a b c)); zero when c < 0.
  Integer bound;
  /// First witness in (r, p, q) order with p, q >= 0, if any.
  std::optional<ProjectiveSolution> witness;
  /// c < 0: no real points at all.
  bool no_real_points = false;
  bool truncated = false;
  std::uint64_t steps = 0;
};

/// Decides whether the conic has a rational point. If one exists there is a
/// reduced one of height <= sqrt(abc), so an empty search up to that height
/// is a proof that there is none. Throws for c = 0. One step is one (r, p)
/// pair.
HolzerVerdict holzer_decide(const Conic& conic, const SearchOptions& options = {});

/// Second intersection of the conic f = 0 with the line through `base` in
/// direction (dx, dy). Empty when the line is tangent at `base` or the second
/// intersection is at infinity. Throws if f has degree != 2 or base is not
/// on f.
std::optional<RationalPoint> chord_point_direction(const BivariatePolynomial& f, const RationalPoint& base,
                                                   const Rational& dx, const Rational& dy);

/// chord_point_direction with the non-vertical direction (1, slope).
std::optional<RationalPoint> chord_point(const BivariatePolynomial& f, const RationalPoint& base,
                                         const Rational& slope);

/// Largest slope numerator/denominator that must be tried so that every
/// rational point of height <= H is reached from `base`: 2 * H * height(base).
Integer slope_height_bound(const RationalPoint& base, const Integer& height_bound);

/// All rational points of height <= H on the conic, obtained as second
/// intersections of lines through `base` with slopes u/v, |u|, |v| bounded by
/// slope_height_bound (vertical line included). One step is one slope.
RationalSearchResult enumerate_rational_points(const BivariatePolynomial& f, const RationalPoint& base,
                                               const Integer& height_bound, const SearchOptions& options = {});

}  // namespace dioph
