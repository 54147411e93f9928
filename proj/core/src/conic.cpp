#include "dioph/conic.hpp"

#include "dioph/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

Conic::Conic(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ < 1 || b_ < 1) throw PreconditionError("conic a x^2 + b y^2 = c needs a, b >= 1");
}

BivariatePolynomial Conic::polynomial() const {
  return BivariatePolynomial(BivariatePolynomial::TermMap{{{2, 0}, a_}, {{0, 2}, b_}, {{0, 0}, Integer(-c_)}});
}

HolzerVerdict holzer_decide(const Conic& conic, const SearchOptions& options) {
  const Integer& a = conic.a();
  const Integer& b = conic.b();
  const Integer& c = conic.c();
  if (c == 0) throw PreconditionError("a x^2 + b y^2 = 0 has only the trivial solution; c = 0 is rejected");
  HolzerVerdict verdict;
  if (c < 0) {
    verdict.no_real_points = true;
    return verdict;
  }
  verdict.bound = isqrt(Integer(a * b * c));
  const Integer& bound = verdict.bound;
  for (Integer r = 1; r <= bound; ++r) {
    const Integer cr2 = c * r * r;
    for (Integer p = 0; p <= bound; ++p) {
      if (options.step_budget && verdict.steps >= *options.step_budget) {
        verdict.truncated = true;
        return verdict;
      }
      ++verdict.steps;
      Integer rest = cr2 - a * p * p;
      if (rest < 0) break;
      if (!mpz_divisible_p(rest.get_mpz_t(), b.get_mpz_t())) continue;
      Integer q2 = rest / b;
      auto q = exact_sqrt(q2);
      if (!q || *q > bound) continue;
      if (gcd(gcd(p, *q), r) != 1) continue;
      verdict.witness = ProjectiveSolution(p, *q, r);
      return verdict;
    }
  }
  return verdict;
}

std::optional<RationalPoint> chord_point_direction(const BivariatePolynomial& f, const RationalPoint& base,
                                                   const Rational& dx, const Rational& dy) {
  if (f.degree() != 2) throw PreconditionError("chord construction needs a conic (degree 2)");
  if (f.evaluate(base) != 0) throw PreconditionError("base point is not on the conic");
  if (dx == 0 && dy == 0) throw PreconditionError("zero direction vector");
  // f(base + s (dx, dy)) = A s^2 + B s, with s = 0 the base point.
  UnivariatePolynomial g = f.restrict_to_line(base, dx, dy);
  const Rational A = g.coefficient(2);
  const Rational B = g.coefficient(1);
  if (A == 0 || B == 0) return std::nullopt;
  const Rational s = -B / A;
  RationalPoint pt{base.x + s * dx, base.y + s * dy};
  if (f.evaluate(pt) != 0) throw std::logic_error("chord point is not on the conic");
  return pt;
}

std::optional<RationalPoint> chord_point(const BivariatePolynomial& f, const RationalPoint& base,
                                         const Rational& slope) {
  return chord_point_direction(f, base, Rational(1), slope);
}

Integer slope_height_bound(const RationalPoint& base, const Integer& height_bound) {
  // For P = (p/r, q/r) and base (a/c, b/c), the direction (p c - a r, q c - b r)
  // has entries of size at most 2 H height(base).
  return 2 * height_bound * height(base);
}

RationalSearchResult enumerate_rational_points(const BivariatePolynomial& f, const RationalPoint& base,
                                               const Integer& height_bound, const SearchOptions& options) {
  if (height_bound < 1) throw PreconditionError("enumeration needs height >= 1");
  if (f.degree() != 2) throw PreconditionError("chord enumeration needs a conic (degree 2)");
  if (f.evaluate(base) != 0) throw PreconditionError("base point is not on the conic");
  RationalSearchResult result;
  const Integer slope_bound = slope_height_bound(base, height_bound);
  ProjectiveSolution base_sol = ProjectiveSolution::from_point(base);
  if (base_sol.height() <= height_bound) result.points.push_back(base_sol);
  for (Integer v = 0; v <= slope_bound; ++v) {
    for (Integer u = -slope_bound; u <= slope_bound; ++u) {
      if (v == 0 && u != 1) continue;
      if (gcd(u, v) != 1) continue;
      if (options.step_budget && result.steps >= *options.step_budget) {
        result.truncated = true;
        goto done;
      }
      ++result.steps;
      if (auto pt = chord_point_direction(f, base, Rational(v), Rational(u))) {
        ProjectiveSolution sol = ProjectiveSolution::from_point(*pt);
        if (sol.height() <= height_bound) result.points.push_back(std::move(sol));
      }
    }
  }
done:
  std::sort(result.points.begin(), result.points.end());
  result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
  return result;
}

}  // namespace dioph
