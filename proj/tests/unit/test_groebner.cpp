#include "dioph/error.hpp"
#include "dioph/groebner.hpp"
#include "dioph/parser.hpp"
#include "support/random_poly.hpp"

#include <gtest/gtest.h>

using namespace dioph;

namespace {

std::vector<MultivariatePolynomial> polys(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
                                          MonomialOrder order = MonomialOrder::Lex) {
  std::vector<MultivariatePolynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, vars, order));
  return out;
}

std::vector<std::string> texts(const GroebnerBasis& b, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& g : b.generators) out.push_back(format_polynomial(g, vars));
  return out;
}

void expect_valid_basis(const std::vector<MultivariatePolynomial>& input, const GroebnerBasis& basis) {
  EXPECT_TRUE(is_groebner(basis.generators));
  EXPECT_TRUE(is_reduced(basis.generators));
  for (const auto& f : input) EXPECT_TRUE(normal_form(f, basis.generators).is_zero());
}

}  // namespace

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

TEST(Buchberger, LineMeetsCircle) {
  auto in = polys({"x^2+y^2-5", "x-2*y"}, kXY);
  auto b = buchberger(in, MonomialOrder::Lex);
  EXPECT_EQ(texts(b, kXY), (std::vector<std::string>{"x - 2*y", "y^2 - 1"}));
  expect_valid_basis(in, b);
  auto sol = solve_zero_dimensional(b);
  ASSERT_EQ(sol.solutions.size(), 2U);
  EXPECT_EQ(sol.solutions[0], (std::vector<Rational>{-2, -1}));
  EXPECT_EQ(sol.solutions[1], (std::vector<Rational>{2, 1}));
  EXPECT_EQ(sol.pruned_branches, 0U);
}

TEST(Buchberger, TrivialBases) {
  EXPECT_EQ(texts(buchberger(polys({"x", "y"}, kXY), MonomialOrder::Lex), kXY),
            (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(texts(buchberger(polys({"x^2-1", "x-1"}, kXY), MonomialOrder::Lex), kXY),
            (std::vector<std::string>{"x - 1"}));
  EXPECT_TRUE(buchberger(polys({"x*y-1", "x"}, kXY), MonomialOrder::Lex).is_one());
  EXPECT_THROW(buchberger({}, MonomialOrder::Lex), PreconditionError);
}

// Reduced bases computed independently with sympy's groebner().
TEST(Buchberger, MatchesReferenceBases) {
  EXPECT_EQ(texts(buchberger(polys({"x^2+y^2+z^2-3", "x*y*z-1", "x+y+z-3"}, kXYZ), MonomialOrder::Lex), kXYZ),
            (std::vector<std::string>{"x + y + z - 3", "y^2 + y*z + z^2 - 3*y - 3*z + 3",
                                      "z^3 - 3*z^2 + 3*z - 1"}));
  EXPECT_EQ(texts(buchberger(polys({"x^2+y-1", "y^2+x-1"}, kXY), MonomialOrder::Lex), kXY),
            (std::vector<std::string>{"y^2 + x - 1", "y^4 - 2*y^2 + y"}));
  EXPECT_EQ(texts(buchberger(polys({"x*y-1", "x^2-y"}, kXY), MonomialOrder::Lex), kXY),
            (std::vector<std::string>{"-y^2 + x", "y^3 - 1"}));
  auto grevlex = buchberger(polys({"x^3-2*x*y", "x^2*y-2*y^2+x"}, kXY, MonomialOrder::GrevLex),
                            MonomialOrder::GrevLex);
  EXPECT_EQ(texts(grevlex, kXY), (std::vector<std::string>{"x^2", "x*y", "y^2 - 1/2*x"}));
}

TEST(Buchberger, RandomSystemsSatisfyBasisInvariants) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 3), order(0, 1);
  int completed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nvars(rng));
    const MonomialOrder ord = order(rng) == 0 ? MonomialOrder::Lex : MonomialOrder::GrevLex;
    std::vector<MultivariatePolynomial> in;
    const int k = ngens(rng);
    for (int i = 0; i < k; ++i) in.push_back(testing_support::random_polynomial(rng, n, 3, 3, 4, ord));
    if (std::all_of(in.begin(), in.end(), [](const auto& p) { return p.is_zero(); })) continue;
    auto b = buchberger(in, ord, {.step_budget = 5000});
    expect_valid_basis(in, b);
    ++completed;
  }
  EXPECT_GE(completed, 45);
}

TEST(Buchberger, BudgetIsReportedAsSuch) {
  auto in = polys({"x^3*y - z^2 + 1", "y^3*z - x + 2", "z^3*x - y^2 - 3"}, kXYZ);
  EXPECT_THROW(buchberger(in, MonomialOrder::Lex, {.step_budget = 2}), BudgetExhausted);
}

TEST(SolveZeroDimensional, Examples) {
  auto b1 = buchberger(polys({"x-1", "y-3"}, kXY), MonomialOrder::Lex);
  EXPECT_EQ(solve_zero_dimensional(b1).solutions, (std::vector<std::vector<Rational>>{{1, 3}}));

  auto b2 = buchberger(polys({"y^2-2", "x-y"}, kXY), MonomialOrder::Lex);
  auto s2 = solve_zero_dimensional(b2);
  EXPECT_TRUE(s2.solutions.empty());
  EXPECT_EQ(s2.pruned_branches, 1U);

  auto b3 = buchberger(polys({"x+y-1"}, kXY), MonomialOrder::Lex);
  EXPECT_THROW(solve_zero_dimensional(b3), PositiveDimensionalError);

  auto grevlex = buchberger(polys({"x-1", "y-3"}, kXY, MonomialOrder::GrevLex), MonomialOrder::GrevLex);
  EXPECT_THROW(solve_zero_dimensional(grevlex), PreconditionError);
}

TEST(SolveZeroDimensional, SolutionsAnnihilateTheBasis) {
  auto in = polys({"x^2+y^2+z^2-3", "x*y*z-1", "x+y+z-3"}, kXYZ);
  auto b = buchberger(in, MonomialOrder::Lex);
  auto s = solve_zero_dimensional(b);
  EXPECT_EQ(s.solutions, (std::vector<std::vector<Rational>>{{1, 1, 1}}));
  auto in2 = polys({"x^2 - 4", "y^2 - x - 2", "z - x*y"}, kXYZ);
  auto b2 = buchberger(in2, MonomialOrder::Lex);
  auto s2 = solve_zero_dimensional(b2);
  // x = 2 gives y = +-2; x = -2 gives y = 0.
  EXPECT_EQ(s2.solutions.size(), 3U);
  for (const auto& v : s2.solutions) {
    for (const auto& g : b2.generators) EXPECT_EQ(g.evaluate(v), 0);
  }
}
