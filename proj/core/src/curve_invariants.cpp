#include "dioph/curve_invariants.hpp"

#include "dioph/error.hpp"
#include "dioph/groebner.hpp"

namespace dioph {

std::string_view to_string(GenusClass c) {
  switch (c) {
    case GenusClass::GenusZero:
      return "GenusZero";
    case GenusClass::GenusOne:
      return "GenusOne";
    case GenusClass::GenusAtLeastTwo:
      return "GenusAtLeastTwo";
  }
  return "?";
}

unsigned smooth_projective_genus(unsigned degree) {
  if (degree == 0) throw PreconditionError("genus of a constant polynomial");
  return (degree - 1) * (degree - 2) / 2;
}

unsigned smooth_projective_genus(const BivariatePolynomial& f) {
  if (f.is_constant()) throw PreconditionError("genus of a constant polynomial");
  return smooth_projective_genus(static_cast<unsigned>(f.degree()));
}

bool affine_smoothness_check(const BivariatePolynomial& f) {
  if (f.is_constant()) throw PreconditionError("smoothness of a constant polynomial");
  std::vector<MultivariatePolynomial> gens{f.to_multivariate()};
  for (const auto& d : {f.derivative_x(), f.derivative_y()}) {
    if (!d.is_zero()) gens.push_back(d.to_multivariate());
  }
  return buchberger(gens, MonomialOrder::GrevLex).is_one();
}

GenusClass genus_class(unsigned genus) {
  if (genus == 0) return GenusClass::GenusZero;
  if (genus == 1) return GenusClass::GenusOne;
  return GenusClass::GenusAtLeastTwo;
}

bool siegel_finite(unsigned genus, unsigned punctures) {
  return 2L * genus - 2 + punctures > 0;
}

CurveInvariants classify(const BivariatePolynomial& f) {
  if (f.is_constant()) throw PreconditionError("classify needs a nonconstant polynomial");
  CurveInvariants inv;
  inv.degree = static_cast<unsigned>(f.degree());
  inv.genus = smooth_projective_genus(f);
  inv.punctures = distinct_linear_factor_count(f.leading_form());
  inv.trichotomy = genus_class(inv.genus);
  inv.siegel_finite_integral = siegel_finite(inv.genus, inv.punctures);
  inv.smoothness_checked = affine_smoothness_check(f);
  return inv;
}

}  // namespace dioph
