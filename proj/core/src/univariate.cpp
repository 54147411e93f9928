#include "dioph/univariate.hpp"

#include "dioph/error.hpp"
#include "dioph/roots.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
  return UnivariatePolynomial(std::vector<Rational>{c});
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial UnivariatePolynomial::linear_root(const Rational& root) {
  return UnivariatePolynomial(std::vector<Rational>{Rational(-root), Rational(1)});
}

Rational UnivariatePolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& UnivariatePolynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.emplace_back(coeffs_[i] * static_cast<long>(i));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  Rational lc = coeffs_.back();
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c /= lc;
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c = -c;
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a + (-b); }

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned k) const {
  UnivariatePolynomial result = constant(1);
  UnivariatePolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem(coeffs_);
  const std::size_t dn = divisor.coeffs_.size();
  if (rem.size() < dn) return {UnivariatePolynomial(), *this};
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lc = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = rem[k + dn - 1] / lc;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * divisor.coeffs_[j];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << dioph::to_string(mag);
      continue;
    }
    if (mag != 1) out << dioph::to_string(mag) << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a, y = b;
  while (!y.is_zero()) {
    UnivariatePolynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
  UnivariatePolynomial g = gcd(u, u.derivative());
  return u.divmod(g).first.monic();
}

RationalRoots rational_roots(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
  UnivariatePolynomial sf = squarefree_part(u);
  RationalRoots result;
  if (sf.degree() <= 0) {
    result.irrational_part = sf;
    return result;
  }

  // Integer coefficients a_0..a_n with a common denominator cleared.
  Integer lcm_den = 1;
  for (const auto& c : sf.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Integer> a;
  for (const auto& c : sf.coefficients()) a.emplace_back(Integer(c * lcm_den));
  const std::size_t n = a.size() - 1;
  const Integer lead = a[n];

  // y = lead * t turns lead^(n-1) * u(t) into a monic integer polynomial.
  std::vector<Integer> monic(n + 1);
  monic[n] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    monic[i] = a[i] * pow(lead, static_cast<unsigned long>(n - 1 - i));
  }
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, Integer(abs(monic[i]) + 1));

  std::vector<Integer> ys = roots::integer_roots<Integer>(std::span<const Integer>(monic), Integer(-bound), bound);
  UnivariatePolynomial rest = sf;
  for (const Integer& y : ys) {
    Rational t = make_rational(y, lead);
    result.roots.push_back(t);
    rest = rest.divmod(UnivariatePolynomial::linear_root(t)).first;
  }
  std::sort(result.roots.begin(), result.roots.end());
  result.irrational_part = rest.monic();
  return result;
}

}  // namespace dioph
