#include "dioph/bivariate.hpp"

#include "dioph/error.hpp"
#include "dioph/parser.hpp"

#include <algorithm>

namespace dioph {

BivariatePolynomial::BivariatePolynomial(TermMap terms) {
  for (auto& [m, c] : terms) add(m, c);
}

void BivariatePolynomial::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial BivariatePolynomial::from_multivariate(const MultivariatePolynomial& p) {
  if (p.num_vars() != 2) throw PreconditionError("a plane curve needs exactly two variables");
  BivariatePolynomial f;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw PreconditionError("plane curve coefficients must be integers");
    f.add({e[0], e[1]}, c.get_num());
  }
  return f;
}

BivariatePolynomial BivariatePolynomial::parse(const std::string& text) {
  return from_multivariate(parse_polynomial(text, {"x", "y"}));
}

MultivariatePolynomial BivariatePolynomial::to_multivariate(MonomialOrder order) const {
  MultivariatePolynomial p(2, order);
  for (const auto& [m, c] : terms_) p.add_term({m.first, m.second}, Rational(c));
  return p;
}

bool BivariatePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Integer BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

long BivariatePolynomial::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.first + m.second));
  return d;
}

long BivariatePolynomial::degree_in_x() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.first));
  return d;
}

long BivariatePolynomial::degree_in_y() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.second));
  return d;
}

bool BivariatePolynomial::is_homogeneous() const {
  long d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return static_cast<long>(t.first.first + t.first.second) == d; });
}

BivariatePolynomial BivariatePolynomial::leading_form() const {
  if (is_zero()) throw PreconditionError("leading form of the zero polynomial");
  long d = degree();
  BivariatePolynomial top;
  for (const auto& [m, c] : terms_) {
    if (static_cast<long>(m.first + m.second) == d) top.add(m, c);
  }
  return top;
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  BivariatePolynomial d;
  for (const auto& [m, c] : terms_) {
    if (m.first > 0) d.add({m.first - 1, m.second}, Integer(c * m.first));
  }
  return d;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
  BivariatePolynomial d;
  for (const auto& [m, c] : terms_) {
    if (m.second > 0) d.add({m.first, m.second - 1}, Integer(c * m.second));
  }
  return d;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial s;
  for (const auto& [m, c] : terms_) s.add({m.second, m.first}, c);
  return s;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = Rational(c) * pow(x, m.first) * pow(y, m.second);
    acc += t;
  }
  return acc;
}

Integer BivariatePolynomial::evaluate_homogeneous(const Integer& p, const Integer& q, const Integer& r) const {
  const long d = degree();
  Integer acc = 0;
  for (const auto& [m, c] : terms_) {
    Integer t = c * pow(p, m.first) * pow(q, m.second) *
                pow(r, static_cast<unsigned long>(d - static_cast<long>(m.first + m.second)));
    acc += t;
  }
  return acc;
}

UnivariatePolynomial BivariatePolynomial::restrict_to_line(const RationalPoint& base, const Rational& dx,
                                                          const Rational& dy) const {
  const UnivariatePolynomial lx(std::vector<Rational>{base.x, dx});
  const UnivariatePolynomial ly(std::vector<Rational>{base.y, dy});
  std::vector<UnivariatePolynomial> px{UnivariatePolynomial::constant(1)};
  std::vector<UnivariatePolynomial> py{UnivariatePolynomial::constant(1)};
  UnivariatePolynomial result;
  for (const auto& [m, c] : terms_) {
    while (px.size() <= m.first) px.push_back(px.back() * lx);
    while (py.size() <= m.second) py.push_back(py.back() * ly);
    result = result + Rational(c) * (px[m.first] * py[m.second]);
  }
  return result;
}

UnivariatePolynomial BivariatePolynomial::dehomogenize_y() const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_in_x() + 1, 0L)));
  for (const auto& [m, c] : terms_) coeffs[m.first] += Rational(c);
  return UnivariatePolynomial(std::move(coeffs));
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial n;
  for (const auto& [m, c] : terms_) n.add(m, Integer(-c));
  return n;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial s = a;
  for (const auto& [m, c] : b.terms_) s.add(m, c);
  return s;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a + (-b); }

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial p;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      p.add({ma.first + mb.first, ma.second + mb.second}, Integer(ca * cb));
    }
  }
  return p;
}

std::string BivariatePolynomial::to_string() const {
  return format_polynomial(to_multivariate(), {"x", "y"});
}

unsigned distinct_linear_factor_count(const BivariatePolynomial& form) {
  if (form.is_zero()) throw PreconditionError("linear factors of the zero form");
  if (!form.is_homogeneous()) throw PreconditionError("linear factor count needs a homogeneous form");
  // F(x, y) = y^k * G(x, y) with G(x, 1) of degree d - k: the factors
  // (x - a y) correspond to the distinct roots of F(x, 1), and y divides F
  // exactly when F(x, 1) has lower degree than F.
  const long d = form.degree();
  UnivariatePolynomial u = form.dehomogenize_y();
  unsigned count = static_cast<unsigned>(squarefree_part(u).degree());
  if (u.degree() < d) ++count;
  return count;
}

}  // namespace dioph
