#include "dioph/multivariate.hpp"

#include "dioph/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dioph {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

bool MonomialLess::operator()(const Exponents& a, const Exponents& b) const {
  if (order == MonomialOrder::GrevLex) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Equal degree: the one with the larger exponent in the last differing
    // variable is smaller.
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultivariatePolynomial::MultivariatePolynomial(std::size_t num_vars, MonomialOrder order)
    : num_vars_(num_vars), terms_(MonomialLess{order}) {}

MultivariatePolynomial MultivariatePolynomial::constant(std::size_t num_vars, const Rational& c,
                                                        MonomialOrder order) {
  MultivariatePolynomial p(num_vars, order);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::size_t num_vars, std::size_t index,
                                                        MonomialOrder order) {
  if (index >= num_vars) throw PreconditionError("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return term(e, Rational(1), order);
}

MultivariatePolynomial MultivariatePolynomial::term(const Exponents& e, const Rational& c, MonomialOrder order) {
  MultivariatePolynomial p(e.size(), order);
  p.add_term(e, c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::with_order(MonomialOrder order) const {
  MultivariatePolynomial p(num_vars_, order);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c);
  return p;
}

bool MultivariatePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && dioph::total_degree(terms_.begin()->first) == 0);
}

Rational MultivariatePolynomial::constant_term() const {
  auto it = terms_.find(Exponents(num_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& MultivariatePolynomial::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MultivariatePolynomial::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

long MultivariatePolynomial::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(dioph::total_degree(e)));
  return d;
}

long MultivariatePolynomial::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
  return d;
}

void MultivariatePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != num_vars_) throw PreconditionError("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultivariatePolynomial::add_scaled(const MultivariatePolynomial& g, const Rational& c,
                                        const Exponents& shift) {
  if (c == 0) return;
  Exponents e(num_vars_);
  Rational prod;
  for (const auto& [ge, gc] : g.terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) e[i] = ge[i] + shift[i];
    prod = gc * c;
    add_term(e, prod);
  }
}

MultivariatePolynomial MultivariatePolynomial::operator-() const {
  MultivariatePolynomial p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
  if (o.num_vars_ != num_vars_) throw PreconditionError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& o) {
  if (o.num_vars_ != num_vars_) throw PreconditionError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw PreconditionError("variable count mismatch");
  MultivariatePolynomial p(a.num_vars_, a.order());
  for (const auto& [e, c] : b.terms_) p.add_scaled(a, c, e);
  return p;
}

bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [e, c] : a.terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

MultivariatePolynomial MultivariatePolynomial::pow(unsigned k) const {
  MultivariatePolynomial result = constant(num_vars_, 1, order());
  MultivariatePolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultivariatePolynomial MultivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

MultivariatePolynomial MultivariatePolynomial::derivative(std::size_t var) const {
  MultivariatePolynomial p(num_vars_, order());
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    p.add_term(d, Rational(c * static_cast<unsigned long>(e[var])));
  }
  return p;
}

Rational MultivariatePolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw PreconditionError("evaluation point has the wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] > 0) t *= dioph::pow(point[i], e[i]);
    }
    acc += t;
  }
  return acc;
}

MultivariatePolynomial MultivariatePolynomial::substitute(std::size_t var, const Rational& value) const {
  MultivariatePolynomial p(num_vars_, order());
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[var] = 0;
    p.add_term(d, Rational(c * dioph::pow(value, e[var])));
  }
  return p;
}

MultivariatePolynomial MultivariatePolynomial::substitute(std::size_t var,
                                                          const MultivariatePolynomial& value) const {
  std::vector<MultivariatePolynomial> parts = coefficients_in(var);
  MultivariatePolynomial result(num_vars_, order());
  // Horner in the substituted variable.
  for (std::size_t k = parts.size(); k-- > 0;) {
    result = result * value;
    result += parts[k];
  }
  return result;
}

std::vector<MultivariatePolynomial> MultivariatePolynomial::coefficients_in(std::size_t var) const {
  long d = degree_in(var);
  std::vector<MultivariatePolynomial> parts(static_cast<std::size_t>(std::max(d + 1, 0L)),
                                            MultivariatePolynomial(num_vars_, order()));
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    r[var] = 0;
    parts[e[var]].add_term(r, c);
  }
  return parts;
}

UnivariatePolynomial MultivariatePolynomial::to_univariate(std::size_t var) const {
  long d = degree_in(var);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(d + 1, 0L)));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (i != var && e[i] != 0) throw PreconditionError("polynomial is not univariate in the requested variable");
    }
    coeffs[e[var]] = c;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

MultivariatePolynomial MultivariatePolynomial::from_univariate(const UnivariatePolynomial& u, std::size_t num_vars,
                                                               std::size_t var, MonomialOrder order) {
  MultivariatePolynomial p(num_vars, order);
  const auto& cs = u.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Exponents e(num_vars, 0);
    e[var] = static_cast<unsigned>(k);
    p.add_term(e, cs[k]);
  }
  return p;
}

MultivariatePolynomial MultivariatePolynomial::remap(std::size_t new_num_vars,
                                                     std::span<const long> old_index_of_new) const {
  if (old_index_of_new.size() != new_num_vars) throw PreconditionError("remap table has the wrong size");
  std::vector<bool> kept(num_vars_, false);
  for (long o : old_index_of_new) {
    if (o >= 0) kept[static_cast<std::size_t>(o)] = true;
  }
  MultivariatePolynomial p(new_num_vars, order());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (!kept[i] && e[i] != 0) throw PreconditionError("remap drops a variable that occurs");
    }
    Exponents r(new_num_vars, 0);
    for (std::size_t i = 0; i < new_num_vars; ++i) {
      if (old_index_of_new[i] >= 0) r[i] = e[static_cast<std::size_t>(old_index_of_new[i])];
    }
    p.add_term(r, c);
  }
  return p;
}

MultivariatePolynomial divide_exact(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  MultivariatePolynomial rem = a.with_order(MonomialOrder::Lex);
  MultivariatePolynomial divisor = b.with_order(MonomialOrder::Lex);
  MultivariatePolynomial quot(a.num_vars(), MonomialOrder::Lex);
  const Exponents& lm = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents& rm = rem.leading_monomial();
    if (!divides(lm, rm)) throw std::logic_error("divide_exact: divisor does not divide dividend");
    Exponents shift = quotient(rm, lm);
    Rational c = rem.leading_coefficient() / lc;
    quot.add_term(shift, c);
    rem.add_scaled(divisor, Rational(-c), shift);
  }
  return quot.with_order(a.order());
}

}  // namespace dioph
