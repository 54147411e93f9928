#include "dioph/groebner.hpp"

#include "dioph/error.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace dioph {

bool GroebnerBasis::is_one() const {
  return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

MultivariatePolynomial normal_form(const MultivariatePolynomial& f,
                                   const std::vector<MultivariatePolynomial>& divisors) {
  const MonomialOrder order = divisors.empty() ? f.order() : divisors.front().order();
  MultivariatePolynomial p = f.with_order(order);
  MultivariatePolynomial r(f.num_vars(), order);
  while (!p.is_zero()) {
    const Exponents lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    const MultivariatePolynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && divides(g.leading_monomial(), lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      p.add_scaled(*divisor, Rational(-lc / divisor->leading_coefficient()),
                   quotient(lm, divisor->leading_monomial()));
    } else {
      r.add_term(lm, lc);
      p.add_term(lm, Rational(-lc));
    }
  }
  return r;
}

MultivariatePolynomial s_polynomial(const MultivariatePolynomial& f, const MultivariatePolynomial& g) {
  const Exponents l = lcm(f.leading_monomial(), g.leading_monomial());
  MultivariatePolynomial s(f.num_vars(), f.order());
  s.add_scaled(f, Rational(1 / f.leading_coefficient()), quotient(l, f.leading_monomial()));
  s.add_scaled(g, Rational(-1 / g.leading_coefficient()), quotient(l, g.leading_monomial()));
  return s;
}

bool is_groebner(const std::vector<MultivariatePolynomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!normal_form(s_polynomial(gens[i], gens[j]), gens).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const std::vector<MultivariatePolynomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || gens[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& [e, c] : gens[i].terms()) {
        if (divides(gens[j].leading_monomial(), e)) return false;
      }
    }
  }
  return true;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
  unsigned degree;
};

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > 0 && b[k] > 0) return false;
  }
  return true;
}

std::vector<MultivariatePolynomial> reduce_basis(std::vector<MultivariatePolynomial> g, MonomialOrder order) {
  for (const auto& p : g) {
    if (p.is_constant()) {
      return {MultivariatePolynomial::constant(p.num_vars(), 1, order)};
    }
  }
  // Minimal basis: drop generators whose leading monomial is a multiple of
  // another's (ties keep the earliest).
  std::vector<MultivariatePolynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents& a = g[j].leading_monomial();
      const Exponents& b = g[i].leading_monomial();
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultivariatePolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultivariatePolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  const MonomialLess less{order};
  std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
    return less(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultivariatePolynomial>& gens, MonomialOrder order,
                         const BuchbergerOptions& options) {
  if (gens.empty()) throw PreconditionError("buchberger needs at least one generator");
  const std::size_t nv = gens.front().num_vars();
  std::vector<MultivariatePolynomial> g;
  for (const auto& p : gens) {
    if (p.num_vars() != nv) throw PreconditionError("generators live in different variable sets");
    if (!p.is_zero()) g.push_back(p.with_order(order).monic());
  }
  GroebnerBasis basis;
  basis.order = order;
  basis.num_vars = nv;
  if (g.empty()) return basis;

  const MonomialLess less{order};
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Exponents l = lcm(g[i].leading_monomial(), g[k].leading_monomial());
      unsigned deg = total_degree(l);
      pairs.push_back({i, k, std::move(l), deg});
      pending.insert({i, k});
    }
  };
  for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

  std::size_t steps = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.lcm != b.lcm) return less(a.lcm, b.lcm);
      return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    Pair pair = *best;
    pairs.erase(best);
    pending.erase({pair.i, pair.j});

    if (coprime(g[pair.i].leading_monomial(), g[pair.j].leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!divides(g[k].leading_monomial(), pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending.contains(key(pair.i, k)) && !pending.contains(key(pair.j, k))) chain = true;
    }
    if (chain) continue;

    if (options.step_budget && steps >= *options.step_budget) {
      throw BudgetExhausted("buchberger: step budget exhausted", steps);
    }
    ++steps;
    MultivariatePolynomial h = normal_form(s_polynomial(g[pair.i], g[pair.j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      basis.generators = {MultivariatePolynomial::constant(nv, 1, order)};
      return basis;
    }
    g.push_back(h.monic());
    add_pairs_for(g.size() - 1);
  }
  basis.generators = reduce_basis(std::move(g), order);
  return basis;
}

namespace {

// Smallest variable index occurring in p (the lex-largest variable), or
// num_vars for constants.
std::size_t main_variable(const MultivariatePolynomial& p) {
  for (std::size_t v = 0; v < p.num_vars(); ++v) {
    if (p.involves(v)) return v;
  }
  return p.num_vars();
}

void solve_level(const std::vector<MultivariatePolynomial>& basis, const std::vector<std::size_t>& mains,
                 std::size_t level, std::vector<Rational>& assignment, ZeroDimensionalSolutions& out) {
  const std::size_t n = assignment.size();
  UnivariatePolynomial eliminant;
  bool constrained = false;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (mains[b] != level) continue;
    MultivariatePolynomial p = basis[b];
    for (std::size_t v = level + 1; v < n; ++v) p = p.substitute(v, assignment[v]);
    UnivariatePolynomial u = p.to_univariate(level);
    if (u.is_zero()) continue;
    constrained = true;
    eliminant = gcd(eliminant, u);
    if (eliminant.degree() == 0) return;
  }
  if (!constrained) throw PositiveDimensionalError("variable " + std::to_string(level) + " is free");
  RationalRoots rr = rational_roots(eliminant);
  if (rr.irrational_part.degree() > 0) ++out.pruned_branches;
  for (const Rational& root : rr.roots) {
    assignment[level] = root;
    if (level == 0) {
      out.solutions.push_back(assignment);
    } else {
      solve_level(basis, mains, level - 1, assignment, out);
    }
  }
}

}  // namespace

ZeroDimensionalSolutions solve_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.order != MonomialOrder::Lex) throw PreconditionError("solve_zero_dimensional needs a lex basis");
  ZeroDimensionalSolutions out;
  const std::size_t n = basis.num_vars;
  if (basis.is_one()) return out;
  if (basis.generators.empty()) throw PositiveDimensionalError("the zero ideal is not zero-dimensional");
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(basis.generators.begin(), basis.generators.end(), [&](const auto& g) {
      const Exponents& lm = g.leading_monomial();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != v && lm[k] != 0) return false;
      }
      return lm[v] > 0;
    });
    if (!pure) {
      throw PositiveDimensionalError("ideal is positive-dimensional: no pure power of variable " +
                                     std::to_string(v) + " among the leading monomials");
    }
  }
  std::vector<std::size_t> mains;
  for (const auto& g : basis.generators) mains.push_back(main_variable(g));
  if (n == 0) return out;
  std::vector<Rational> assignment(n);
  solve_level(basis.generators, mains, n - 1, assignment, out);
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

}  // namespace dioph
