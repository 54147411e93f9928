#pragma once

// Degree, genus, punctures and the integral-point finiteness test for a
// plane curve f(x, y) = 0.
//
// f is assumed geometrically irreducible; that is never checked. The genus
// is the smooth plane curve value (d-1)(d-2)/2, which is only correct when
// the projective closure is smooth. Affine smoothness is verified exactly;
// smoothness at infinity is not.

#include "dioph/bivariate.hpp"

#include <string_view>

namespace dioph {

enum class GenusClass { GenusZero, GenusOne, GenusAtLeastTwo };

std::string_view to_string(GenusClass c);

struct CurveInvariants {
  unsigned degree = 0;
  unsigned genus = 0;
  /// Distinct linear factors of the top-degree form (points at infinity).
  unsigned punctures = 0;
  GenusClass trichotomy = GenusClass::GenusZero;
  /// 2g - 2 + s > 0: finitely many integral points over every finitely
  /// generated ring.
  bool siegel_finite_integral = false;
  /// The affine gradient system f = f_x = f_y = 0 has no complex solution.
  bool smoothness_checked = false;
};

/// (d-1)(d-2)/2 for a curve of total degree d >= 1.
unsigned smooth_projective_genus(const BivariatePolynomial& f);
unsigned smooth_projective_genus(unsigned degree);

/// Exact test that f, f_x and f_y have no common complex zero: the ideal
/// they generate is the unit ideal.
bool affine_smoothness_check(const BivariatePolynomial& f);

GenusClass genus_class(unsigned genus);
bool siegel_finite(unsigned genus, unsigned punctures);

CurveInvariants classify(const BivariatePolynomial& f);

}  // namespace dioph
