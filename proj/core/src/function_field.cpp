#include "dioph/function_field.hpp"

#include "dioph/error.hpp"
#include "dioph/parser.hpp"
#include "dioph/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dioph {

namespace {

constexpr std::size_t kX = FunctionFieldCurve::kX;
constexpr std::size_t kY = FunctionFieldCurve::kY;
constexpr std::size_t kT = FunctionFieldCurve::kT;

unsigned xy_degree_of(const MultivariatePolynomial& f) {
  unsigned d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[kX] + e[kY]);
  return d;
}

bool only_t(const MultivariatePolynomial& p) { return !p.involves(kX) && !p.involves(kY); }

std::optional<MultivariatePolynomial> try_resultant(const MultivariatePolynomial& a, const MultivariatePolynomial& b,
                                                    std::size_t var) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (!a.involves(var) && !b.involves(var)) return std::nullopt;
  return resultant(a, b, var);
}

/// Res_x(Res_y(F, F_y), Res_y(F_x, F_y)) with the obvious degenerate cases
/// peeled off; empty when the chain degenerates.
std::optional<MultivariatePolynomial> resultant_eliminant(const MultivariatePolynomial& f,
                                                          const MultivariatePolynomial& fx,
                                                          const MultivariatePolynomial& fy) {
  if (fx.is_zero()) return try_resultant(f, fy, kY);
  if (fy.is_zero()) return try_resultant(f, fx, kX);
  auto r1 = try_resultant(f, fy, kY);
  auto r2 = try_resultant(fx, fy, kY);
  if (!r2) r2 = try_resultant(f, fx, kY);
  if (!r1 || !r2 || r1->is_zero() || r2->is_zero()) return std::nullopt;
  if (!r1->involves(kX) && !r2->involves(kX)) {
    UnivariatePolynomial g = gcd(r1->to_univariate(kT), r2->to_univariate(kT));
    return MultivariatePolynomial::from_univariate(g, 3, kT);
  }
  return try_resultant(*r1, *r2, kX);
}

}  // namespace

FunctionFieldCurve::FunctionFieldCurve(MultivariatePolynomial f) : f_(std::move(f)) {
  if (f_.num_vars() != 3) throw PreconditionError("a function-field curve lives in the variables x, y, t");
  if (f_.is_zero()) throw PreconditionError("the zero polynomial is not a curve");
  degree_ = xy_degree_of(f_);
  if (degree_ < 1) throw PreconditionError("F is constant in x and y");
}

FunctionFieldCurve FunctionFieldCurve::parse(std::string_view text) {
  return FunctionFieldCurve(parse_polynomial(text, {"x", "y", "t"}));
}

TDiscriminant t_discriminant(const FunctionFieldCurve& curve) {
  const MultivariatePolynomial& f = curve.polynomial();
  const MultivariatePolynomial fx = f.derivative(kX);
  const MultivariatePolynomial fy = f.derivative(kY);
  TDiscriminant out;
  out.eliminant = UnivariatePolynomial::constant(1);
  auto nonzero_constant = [](const MultivariatePolynomial& p) { return p.is_constant() && !p.is_zero(); };
  if (nonzero_constant(fx) || nonzero_constant(fy)) return out;

  std::optional<MultivariatePolynomial> r = resultant_eliminant(f, fx, fy);
  if (!r || r->is_zero() || !only_t(*r)) {
    out.groebner_fallback = true;
    std::vector<MultivariatePolynomial> gens;
    for (const auto* p : {&f, &fx, &fy}) {
      if (!p->is_zero()) gens.push_back(*p);
    }
    GroebnerBasis basis = buchberger(gens, MonomialOrder::Lex);
    if (basis.is_one()) return out;
    auto it = std::find_if(basis.generators.begin(), basis.generators.end(), only_t);
    if (it == basis.generators.end()) {
      throw IdenticallySingularError("every fiber is singular: the elimination ideal in t is zero");
    }
    r = *it;
  }
  if (r->is_constant()) return out;
  out.eliminant = squarefree_part(r->to_univariate(kT));
  out.s = static_cast<unsigned>(out.eliminant.degree());
  return out;
}

Integer ff_degree_bound(unsigned d, unsigned s) {
  if (d < 4) throw PreconditionError("the degree bound assumes a curve of degree at least four in x, y");
  const Integer dd(d);
  return (dd * dd - 3 * dd - 1) * (2 * Integer(s) + 1);
}

RationalFunctionTriple::RationalFunctionTriple(UnivariatePolynomial p, UnivariatePolynomial q,
                                               UnivariatePolynomial r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (r_.is_zero()) throw PreconditionError("denominator r(t) is zero");
  const UnivariatePolynomial g = gcd(gcd(p_, q_), r_);
  if (g.degree() > 0) {
    p_ = p_.divmod(g).first;
    q_ = q_.divmod(g).first;
    r_ = r_.divmod(g).first;
  }
  const Rational scale = 1 / r_.leading_coefficient();
  p_ = scale * p_;
  q_ = scale * q_;
  r_ = scale * r_;
}

long RationalFunctionTriple::degree() const { return std::max({p_.degree(), q_.degree(), r_.degree()}); }

bool operator<(const RationalFunctionTriple& a, const RationalFunctionTriple& b) {
  auto key = [](const RationalFunctionTriple& s) {
    return std::tie(s.p_.coefficients(), s.q_.coefficients(), s.r_.coefficients());
  };
  return key(a) < key(b);
}

bool verify_ff_solution(const FunctionFieldCurve& curve, const UnivariatePolynomial& p,
                        const UnivariatePolynomial& q, const UnivariatePolynomial& r) {
  if (r.is_zero()) throw PreconditionError("denominator r(t) is zero");
  const unsigned d = curve.xy_degree();
  std::vector<UnivariatePolynomial> pp{UnivariatePolynomial::constant(1)};
  std::vector<UnivariatePolynomial> qp{UnivariatePolynomial::constant(1)};
  std::vector<UnivariatePolynomial> rp{UnivariatePolynomial::constant(1)};
  for (unsigned k = 1; k <= d; ++k) {
    pp.push_back(pp.back() * p);
    qp.push_back(qp.back() * q);
    rp.push_back(rp.back() * r);
  }
  UnivariatePolynomial total;
  for (const auto& [e, c] : curve.polynomial().terms()) {
    total = total + UnivariatePolynomial::monomial(c, e[kT]) * pp[e[kX]] * qp[e[kY]] * rp[d - e[kX] - e[kY]];
  }
  return total.is_zero();
}

bool verify_ff_solution(const FunctionFieldCurve& curve, const RationalFunctionTriple& sol) {
  return verify_ff_solution(curve, sol.p(), sol.q(), sol.r());
}

UndeterminedSystem undetermined_system(const FunctionFieldCurve& curve, std::size_t degree,
                                       const Normalization& normalization, const std::vector<Pin>& pins) {
  UndeterminedSystem sys;
  sys.degree = degree;
  const std::size_t block = degree + 1;
  const std::size_t n = 3 * block;
  for (char name : {'p', 'q', 'r'}) {
    for (std::size_t k = 0; k < block; ++k) sys.unknowns.push_back(name + std::to_string(k));
  }
  if (normalization.kind == Normalization::Kind::Coefficient && normalization.coefficient >= n) {
    throw PreconditionError("normalization coefficient index out of range");
  }

  // p, q, r as polynomials in the unknowns and t (variable n).
  auto generic = [&](std::size_t offset) {
    MultivariatePolynomial g(n + 1);
    for (std::size_t k = 0; k < block; ++k) {
      Exponents e(n + 1, 0);
      e[offset + k] = 1;
      e[n] = static_cast<unsigned>(k);
      g.add_term(e, 1);
    }
    return g;
  };
  const MultivariatePolynomial gens[3] = {generic(0), generic(block), generic(2 * block)};
  const unsigned d = curve.xy_degree();
  std::vector<MultivariatePolynomial> powers[3];
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(MultivariatePolynomial::constant(n + 1, 1));
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * gens[i]);
  }
  MultivariatePolynomial total(n + 1);
  for (const auto& [e, c] : curve.polynomial().terms()) {
    Exponents te(n + 1, 0);
    te[n] = e[kT];
    total += MultivariatePolynomial::term(te, c) * powers[0][e[kX]] * powers[1][e[kY]] *
             powers[2][d - e[kX] - e[kY]];
  }
  std::vector<long> keep(n);
  std::iota(keep.begin(), keep.end(), 0L);
  for (const auto& coeff : total.coefficients_in(n)) {
    if (!coeff.is_zero()) sys.equations.push_back(coeff.remap(n, keep));
  }

  const std::size_t fixed =
      normalization.kind == Normalization::Kind::RLeading ? 2 * block + degree : normalization.coefficient;
  sys.equations.push_back(MultivariatePolynomial::variable(n, fixed) - MultivariatePolynomial::constant(n, 1));

  for (const Pin& pin : pins) {
    // p(t0) - x0 r(t0) = 0 and q(t0) - y0 r(t0) = 0.
    for (int coord = 0; coord < 2; ++coord) {
      const Rational& target = coord == 0 ? pin.x : pin.y;
      MultivariatePolynomial eq(n);
      Rational tk = 1;
      for (std::size_t k = 0; k < block; ++k) {
        Exponents a(n, 0);
        a[coord * block + k] = 1;
        eq.add_term(a, tk);
        Exponents b(n, 0);
        b[2 * block + k] = 1;
        eq.add_term(b, Rational(-target * tk));
        tk *= pin.t;
      }
      if (!eq.is_zero()) sys.equations.push_back(std::move(eq));
    }
  }
  return sys;
}

FFSearchResult search_ff_solutions(const FunctionFieldCurve& curve, std::size_t degree,
                                   const FFSearchOptions& options) {
  FFSearchResult result;
  const UndeterminedSystem sys = undetermined_system(curve, degree, options.normalization, options.pins);
  result.equations = sys.equations.size();
  GroebnerBasis basis;
  try {
    basis = buchberger(sys.equations, MonomialOrder::Lex, BuchbergerOptions{options.step_budget});
  } catch (const BudgetExhausted&) {
    result.truncated = true;
    return result;
  }
  result.basis_size = basis.generators.size();
  if (basis.is_one()) return result;
  ZeroDimensionalSolutions zd;
  try {
    zd = solve_zero_dimensional(basis);
  } catch (const PositiveDimensionalError&) {
    result.positive_dimensional = true;
    return result;
  }
  result.pruned_branches = zd.pruned_branches;
  const std::size_t block = degree + 1;
  std::set<RationalFunctionTriple> found;
  for (const auto& v : zd.solutions) {
    auto slice = [&](std::size_t offset) {
      return UnivariatePolynomial(std::vector<Rational>(v.begin() + offset, v.begin() + offset + block));
    };
    UnivariatePolynomial r = slice(2 * block);
    if (r.is_zero()) continue;
    RationalFunctionTriple sol(slice(0), slice(block), std::move(r));
    if (!verify_ff_solution(curve, sol)) continue;
    // A raw vector can meet a pin only because r(t0) = 0 before the common
    // factor is removed; the reduced triple must pass through the pin.
    const bool pinned = std::all_of(options.pins.begin(), options.pins.end(), [&](const Pin& pin) {
      const Rational rt = sol.r().evaluate(pin.t);
      return rt != 0 && sol.p().evaluate(pin.t) == pin.x * rt && sol.q().evaluate(pin.t) == pin.y * rt;
    });
    if (pinned) found.insert(std::move(sol));
  }
  result.solutions.assign(found.begin(), found.end());
  return result;
}

}  // namespace dioph
