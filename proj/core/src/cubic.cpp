#include "dioph/cubic.hpp"

#include "detail/partition.hpp"
#include "dioph/error.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace dioph {

namespace {

void require_cubic_point(const BivariatePolynomial& f, const RationalPoint& p) {
  if (f.degree() != 3) throw PreconditionError("chord-tangent construction needs a cubic (degree 3)");
  if (f.evaluate(p) != 0) throw PreconditionError("point is not on the cubic");
}

RationalPoint along(const RationalPoint& base, const Rational& s, const Rational& dx, const Rational& dy) {
  return {base.x + s * dx, base.y + s * dy};
}

RationalPoint checked(const BivariatePolynomial& f, RationalPoint p) {
  if (f.evaluate(p) != 0) throw std::logic_error("third intersection is not on the cubic");
  return p;
}

}  // namespace

std::optional<RationalPoint> tangent_third_point(const BivariatePolynomial& f, const RationalPoint& p) {
  require_cubic_point(f, p);
  const Rational fx = f.derivative_x().evaluate(p);
  const Rational fy = f.derivative_y().evaluate(p);
  if (fx == 0 && fy == 0) throw PreconditionError("gradient vanishes: the cubic is singular at the point");
  const Rational dx = fy;
  const Rational dy = -fx;
  // g(s) = a3 s^3 + a2 s^2 with a double root at s = 0.
  const UnivariatePolynomial g = f.restrict_to_line(p, dx, dy);
  const Rational a3 = g.coefficient(3);
  if (a3 == 0) return std::nullopt;
  const Rational s = -g.coefficient(2) / a3;
  return checked(f, along(p, s, dx, dy));
}

std::optional<RationalPoint> secant_third_point(const BivariatePolynomial& f, const RationalPoint& p1,
                                                const RationalPoint& p2) {
  require_cubic_point(f, p1);
  require_cubic_point(f, p2);
  if (p1 == p2) throw PreconditionError("secant through coincident points; use the tangent");
  const Rational dx = p2.x - p1.x;
  const Rational dy = p2.y - p1.y;
  // Roots s = 0 and s = 1 are known; the three roots sum to -a2 / a3.
  const UnivariatePolynomial g = f.restrict_to_line(p1, dx, dy);
  const Rational a3 = g.coefficient(3);
  if (a3 == 0) return std::nullopt;
  const Rational s = -g.coefficient(2) / a3 - 1;
  return checked(f, along(p1, s, dx, dy));
}

WeierstrassCurve::WeierstrassCurve(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant_core() == 0) throw PreconditionError("singular Weierstrass curve: 4a^3 + 27b^2 = 0");
}

Integer WeierstrassCurve::discriminant_core() const { return 4 * a_ * a_ * a_ + 27 * b_ * b_; }

bool WeierstrassCurve::contains(const EllipticPoint& p) const {
  if (p.is_infinity()) return true;
  const Rational& x = p.affine->x;
  const Rational& y = p.affine->y;
  return y * y == x * x * x + a_ * x + b_;
}

BivariatePolynomial WeierstrassCurve::polynomial() const {
  return BivariatePolynomial(
      BivariatePolynomial::TermMap{{{0, 2}, 1}, {{3, 0}, -1}, {{1, 0}, Integer(-a_)}, {{0, 0}, Integer(-b_)}});
}

void WeierstrassCurve::require_on_curve(const EllipticPoint& p) const {
  if (!contains(p)) throw PreconditionError("point is not on the curve");
}

EllipticPoint WeierstrassCurve::negate(const EllipticPoint& p) const {
  require_on_curve(p);
  if (p.is_infinity()) return p;
  return EllipticPoint::at(p.affine->x, -p.affine->y);
}

EllipticPoint WeierstrassCurve::add(const EllipticPoint& p, const EllipticPoint& q) const {
  require_on_curve(p);
  require_on_curve(q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const auto& [x1, y1] = *p.affine;
  const auto& [x2, y2] = *q.affine;
  Rational lambda;
  if (x1 == x2) {
    if (y1 != y2 || y1 == 0) return EllipticPoint::infinity();
    lambda = (3 * x1 * x1 + a_) / (2 * y1);
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Rational x3 = lambda * lambda - x1 - x2;
  Rational y3 = lambda * (x1 - x3) - y1;
  EllipticPoint sum = EllipticPoint::at(std::move(x3), std::move(y3));
  if (!contains(sum)) throw std::logic_error("group law left the curve");
  return sum;
}

EllipticPoint WeierstrassCurve::multiply(const EllipticPoint& p, const Integer& n) const {
  require_on_curve(p);
  EllipticPoint base = n < 0 ? negate(p) : p;
  Integer k = abs(n);
  EllipticPoint acc = EllipticPoint::infinity();
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

FermatCubicTransform::FermatCubicTransform(Integer c)
    : c_(c == 0 ? throw PreconditionError("x^3 + y^3 = 0 is not a smooth cubic") : std::move(c)),
      curve_(0, Integer(-432 * c_ * c_)) {}

EllipticPoint FermatCubicTransform::forward(const RationalPoint& p) const {
  if (p.x * p.x * p.x + p.y * p.y * p.y != c_) throw PreconditionError("point is not on x^3 + y^3 = c");
  const Rational sum = p.x + p.y;
  if (sum == 0) throw PreconditionError("the map is undefined on the line x + y = 0");
  Rational u = 12 * c_ / sum;
  Rational v = 36 * c_ * (p.x - p.y) / sum;
  EllipticPoint image = EllipticPoint::at(std::move(u), std::move(v));
  if (!curve_.contains(image)) throw std::logic_error("forward map left the Weierstrass curve");
  return image;
}

RationalPoint FermatCubicTransform::inverse(const EllipticPoint& p) const {
  if (!curve_.contains(p)) throw PreconditionError("point is not on the Weierstrass curve");
  if (p.is_infinity()) throw PreconditionError("the identity maps to the cubic's point at infinity");
  const auto& [u, v] = *p.affine;
  if (u == 0) throw PreconditionError("the inverse map is undefined at u = 0");
  RationalPoint q{(36 * c_ + v) / (6 * u), (36 * c_ - v) / (6 * u)};
  if (q.x * q.x * q.x + q.y * q.y * q.y != c_) throw std::logic_error("inverse map left the cubic");
  return q;
}

IntegralSearchResult mordell_integral_search(const Integer& k, const Integer& bound, const SearchOptions& options) {
  if (k == 0) throw PreconditionError("Mordell curve needs k != 0");
  detail::check_bound(bound);
  IntegralSearchResult result;
  const std::uint64_t total = 2 * bound.get_ui() + 1;
  result.steps = detail::clamp_steps(total, options, result.truncated);
  result.points = detail::partitioned<IntegerPoint>(
      result.steps, options.threads, [&](std::uint64_t begin, std::uint64_t end, std::vector<IntegerPoint>& out) {
        for (std::uint64_t i = begin; i < end; ++i) {
          Integer x = Integer(static_cast<unsigned long>(i)) - bound;
          Integer rhs = x * x * x + k;
          if (rhs < 0) continue;
          auto y = exact_sqrt(rhs);
          if (!y) continue;
          if (*y != 0) out.push_back({x, Integer(-*y)});
          out.push_back({x, *y});
        }
      });
  std::sort(result.points.begin(), result.points.end());
  return result;
}

BakerEstimate baker_log_log_bound(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw PreconditionError("Baker's bound needs (a, b) != (0, 0)");
  const Integer m = std::max(abs(a), abs(b));
  constexpr mpfr_prec_t prec = 256;
  mpfr_t x, t;
  mpfr_inits2(prec, x, t, static_cast<mpfr_ptr>(nullptr));
  Integer scaled = m * 1000000;
  mpfr_set_z(x, scaled.get_mpz_t(), MPFR_RNDN);
  mpfr_log10(x, x, MPFR_RNDN);
  mpfr_mul_ui(x, x, 1000000, MPFR_RNDN);
  // log10(log10(e)) = -log10(ln(10)).
  mpfr_set_ui(t, 10, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  mpfr_sub(x, x, t, MPFR_RNDN);
  mpfr_mul_ui(x, x, 10000000000UL, MPFR_RNDN);
  Integer units;
  mpfr_get_z(units.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clears(x, t, static_cast<mpfr_ptr>(nullptr));

  BakerEstimate est;
  const Integer ten10("10000000000");
  est.value = make_rational(units, ten10);
  // Rounding to 10 places plus a generous allowance for the 256-bit evaluation.
  est.error_bound = make_rational(Integer(1), Integer(2) * ten10) + make_rational(Integer(1), Integer(1) << 200);
  const Integer mag = abs(units);
  const Integer whole = mag / ten10;
  std::string frac = to_string(Integer(mag % ten10));
  est.decimal = (units < 0 ? "-" : "") + to_string(whole) + "." + std::string(10 - frac.size(), '0') + frac;
  return est;
}

}  // namespace dioph
