#include "dioph/conic.hpp"
#include "dioph/curve_invariants.hpp"
#include "dioph/error.hpp"
#include "dioph/integral_search.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace dioph;

namespace {

BivariatePolynomial F(const std::string& s) { return BivariatePolynomial::parse(s); }

std::set<std::pair<std::int64_t, std::int64_t>> as_set(const std::vector<IntegerPoint>& pts) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& p : pts) out.insert({p.x.get_si(), p.y.get_si()});
  return out;
}

std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> as_set(const std::vector<ProjectiveSolution>& pts) {
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
  for (const auto& s : pts) out.insert({s.p().get_si(), s.q().get_si(), s.r().get_si()});
  return out;
}

}  // namespace

// ---- invariants -------------------------------------------------------------

TEST(Invariants, GenusOfFermatCurvesByDegree) {
  const std::vector<unsigned> expected{0, 0, 1, 3, 6};
  for (unsigned d = 1; d <= 5; ++d) {
    const std::string text = "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " - 1";
    const CurveInvariants inv = classify(F(text));
    EXPECT_EQ(inv.degree, d);
    EXPECT_EQ(inv.genus, expected[d - 1]) << text;
    EXPECT_TRUE(inv.smoothness_checked) << text;
  }
  EXPECT_THROW(smooth_projective_genus(F("7")), PreconditionError);
}

TEST(Invariants, TaxicabCurve) {
  const CurveInvariants inv = classify(F("x^3+y^3-1729"));
  EXPECT_EQ(inv.degree, 3U);
  EXPECT_EQ(inv.genus, 1U);
  EXPECT_EQ(inv.punctures, 3U);
  EXPECT_EQ(inv.trichotomy, GenusClass::GenusOne);
  EXPECT_TRUE(inv.siegel_finite_integral);
}

TEST(Invariants, SiegelCriterionOnGenusZero) {
  // Two points at infinity: 2g - 2 + s = 0, infinitely many integral points.
  const CurveInvariants pell = classify(F("x^2-2*y^2-1"));
  EXPECT_EQ(pell.punctures, 2U);
  EXPECT_FALSE(pell.siegel_finite_integral);
  // One point at infinity (the parabola y = x^2).
  const CurveInvariants parabola = classify(F("y-x^2"));
  EXPECT_EQ(parabola.punctures, 1U);
  EXPECT_FALSE(parabola.siegel_finite_integral);
  // The circle has no real points at infinity, but two complex ones.
  EXPECT_EQ(classify(F("x^2+y^2-1")).punctures, 2U);
  // Genus zero with three punctures: finitely many integral points.
  const CurveInvariants three = classify(F("x*y*(x+y) - 1"));
  EXPECT_EQ(three.genus, 1U);
  EXPECT_TRUE(siegel_finite(0, 3));
  EXPECT_FALSE(siegel_finite(0, 2));
  EXPECT_TRUE(siegel_finite(1, 1));
  EXPECT_FALSE(siegel_finite(1, 0));
}

TEST(Invariants, PuncturesFromLeadingForm) {
  EXPECT_EQ(distinct_linear_factor_count(F("x^2*y")), 2U);
  EXPECT_EQ(distinct_linear_factor_count(F("y^3")), 1U);
  EXPECT_EQ(distinct_linear_factor_count(F("x^4 - y^4")), 4U);
  EXPECT_EQ(distinct_linear_factor_count(F("(x-y)*(x-y)*(x+2*y)")), 2U);
  EXPECT_THROW(distinct_linear_factor_count(F("x + 1")), PreconditionError);
}

TEST(Invariants, AffineSmoothness) {
  EXPECT_FALSE(affine_smoothness_check(F("y^2-x^3")));          // cusp
  EXPECT_FALSE(affine_smoothness_check(F("y^2-x^2*(x+1)")));    // node
  EXPECT_TRUE(affine_smoothness_check(F("y^2-x^3+2")));
  EXPECT_TRUE(affine_smoothness_check(F("x - 5")));
  EXPECT_FALSE(classify(F("y^2-x^3")).smoothness_checked);
}

// ---- integral points --------------------------------------------------------

TEST(IntegralSearch, TaxicabNumber) {
  EXPECT_EQ(taxicab_bound(1729), 48);
  const auto res = sum_of_cubes_solutions(1729);
  EXPECT_EQ(as_set(res.points), (std::set<std::pair<std::int64_t, std::int64_t>>{{1, 12}, {9, 10}, {10, 9}, {12, 1}}));
  EXPECT_FALSE(res.truncated);
  EXPECT_THROW(taxicab_bound(0), PreconditionError);
}

TEST(IntegralSearch, SumOfCubesMatchesBruteForce) {
  for (std::int64_t m : {1, 2, 7, 9, 91, 1000, 4104, 13832}) {
    const std::int64_t b = taxicab_bound(m).get_si();
    EXPECT_EQ(as_set(sum_of_cubes_solutions(m).points), oracle::sum_of_cubes(m, b + 10)) << m;
  }
}

TEST(IntegralSearch, PellSolutionsMatchRecurrence) {
  for (std::int64_t b : {20, 100, 1000}) {
    EXPECT_EQ(as_set(box_search_integral(F("x^2-2*y^2-1"), b).points), oracle::pell2(b)) << b;
  }
}

TEST(IntegralSearch, MonotoneAndSymmetric) {
  const auto f = F("x^2 + y^2 - 625");
  std::set<std::pair<std::int64_t, std::int64_t>> prev;
  for (int b = 0; b <= 30; b += 5) {
    auto cur = as_set(box_search_integral(f, b).points);
    EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    for (auto [x, y] : cur) {
      EXPECT_TRUE(cur.count({-x, y}));
      EXPECT_TRUE(cur.count({y, x}));
    }
    prev = cur;
  }
  EXPECT_EQ(prev.size(), 20U);
}

TEST(IntegralSearch, ThreadCountDoesNotChangeResults) {
  const auto f = F("y^2 - x^3 - 17");
  for (unsigned threads : {2U, 3U, 8U}) {
    EXPECT_EQ(box_search_integral(f, 400, {.step_budget = std::nullopt, .threads = threads}).points, box_search_integral(f, 400).points);
    EXPECT_EQ(rational_point_search(f, 40, {.step_budget = std::nullopt, .threads = threads}).points, rational_point_search(f, 40).points);
    EXPECT_EQ(sum_of_cubes_solutions(1729, {.step_budget = std::nullopt, .threads = threads}).points, sum_of_cubes_solutions(1729).points);
  }
}

TEST(IntegralSearch, BudgetTruncatesDeterministically) {
  const auto f = F("x^2 + y^2 - 625");
  const auto a = box_search_integral(f, 30, {.step_budget = 20});
  const auto b = box_search_integral(f, 30, {.step_budget = 20, .threads = 4});
  EXPECT_TRUE(a.truncated);
  EXPECT_EQ(a.steps, 20U);
  EXPECT_EQ(a.points, b.points);
  // Rows x = -30 .. -11 contain (-25, +-0), (-24, +-7), (-20, +-15), (-15, ...) only partly.
  for (const auto& p : a.points) EXPECT_LT(p.x, -10);
  EXPECT_FALSE(box_search_integral(f, 30, {.step_budget = 61}).truncated);
}

TEST(IntegralSearch, WideCoefficientsUseExactArithmetic) {
  // Coefficients far beyond 64 bits force the arbitrary-precision path.
  const auto f = F("100000000000000000000000000000*x - 100000000000000000000000000000*y");
  const auto res = box_search_integral(f, 5);
  EXPECT_EQ(res.points.size(), 11U);
  for (const auto& p : res.points) EXPECT_EQ(p.x, p.y);
}

TEST(IntegralSearch, RejectsBadBounds) {
  EXPECT_THROW(box_search_integral(F("x-y"), -1), PreconditionError);
  EXPECT_THROW(box_search_integral(BivariatePolynomial(), 3), PreconditionError);
  EXPECT_THROW(rational_point_search(F("x-y"), 0), PreconditionError);
}

// ---- rational points and heights ------------------------------------------------

TEST(RationalSearch, ProjectiveNormalization) {
  const ProjectiveSolution s(2, 4, -6);
  EXPECT_EQ(s.p(), -1);
  EXPECT_EQ(s.q(), -2);
  EXPECT_EQ(s.r(), 3);
  EXPECT_EQ(s.height(), 3);
  EXPECT_THROW(ProjectiveSolution(1, 1, 0), PreconditionError);
  EXPECT_EQ(height(RationalPoint{make_rational(-3457, 1727), make_rational(20760, 1727)}), 20760);
}

TEST(RationalSearch, CircleMatchesPythagoreanTriples) {
  EXPECT_EQ(as_set(rational_point_search(F("x^2+y^2-1"), 30).points), oracle::circle_points(30));
}

TEST(RationalSearch, HeightRecordOnTaxicabCurve) {
  const auto small = oracle::cube_height_record(1729, 300);
  const HeightRecord rec = height_record(F("x^3+y^3-1729"), 300);
  EXPECT_EQ(rec.record, small.record);
  EXPECT_EQ(rec.points_found, small.count);
  EXPECT_EQ(rec.record, 46);  // (-37/3, 46/3) and its swap
  const auto big = oracle::cube_height_record(1729, 2000);
  const HeightRecord rec2 = height_record(F("x^3+y^3-1729"), 2000);
  EXPECT_EQ(rec2.record, big.record);
  EXPECT_EQ(rec2.points_found, big.count);
}

// ---- conics --------------------------------------------------------------------

TEST(Conic, HolzerVerdicts) {
  const HolzerVerdict three = holzer_decide(Conic(1, 1, 3));
  EXPECT_EQ(three.bound, 1);
  EXPECT_FALSE(three.witness);
  EXPECT_FALSE(three.truncated);
  const HolzerVerdict two = holzer_decide(Conic(1, 1, 2));
  ASSERT_TRUE(two.witness);
  EXPECT_EQ(two.witness->point(), (RationalPoint{1, 1}));
  const HolzerVerdict neg = holzer_decide(Conic(1, 1, -3));
  EXPECT_TRUE(neg.no_real_points);
  EXPECT_FALSE(neg.witness);
  EXPECT_THROW(holzer_decide(Conic(1, 1, 0)), PreconditionError);
  EXPECT_THROW(Conic(0, 1, 1), PreconditionError);
  EXPECT_TRUE(holzer_decide(Conic(3, 5, 1000), {.step_budget = 3}).truncated);
}

namespace {

// Hilbert symbol (a, b)_p for nonzero integers, p prime or p = 0 for the real
// place.
int hilbert(std::int64_t a, std::int64_t b, std::int64_t p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  auto split = [&](std::int64_t v, int& e) {
    e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    return v;
  };
  int alpha, beta;
  std::int64_t u = split(a, alpha), v = split(b, beta);
  auto mod = [](std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; };
  if (p == 2) {
    auto eps = [&](std::int64_t w) { return static_cast<int>(mod((mod(w, 8) - 1) / 2, 2)); };
    auto omega = [&](std::int64_t w) {
      std::int64_t r = mod(w, 8);
      return static_cast<int>(((r * r - 1) / 8) % 2);
    };
    int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  auto legendre = [&](std::int64_t w) {
    std::int64_t r = 1, base = mod(w, p), e = (p - 1) / 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r == 1 ? 1 : -1;
  };
  int sign = (alpha * beta % 2 == 1 && mod(p, 4) == 3) ? -1 : 1;
  if (beta % 2 == 1) sign *= legendre(u);
  if (alpha % 2 == 1) sign *= legendre(v);
  return sign;
}

// a x^2 + b y^2 = c is solvable over Q iff (ac, bc)_v = 1 at every place.
bool locally_solvable(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t A = a * c, B = b * c;
  std::set<std::int64_t> places{0, 2};
  for (std::int64_t n : {A, B}) {
    n = std::llabs(n);
    while (n % 2 == 0) n /= 2;
    for (std::int64_t p = 3; p * p <= n; p += 2) {
      while (n % p == 0) {
        places.insert(p);
        n /= p;
      }
    }
    if (n > 2) places.insert(n);
  }
  return std::all_of(places.begin(), places.end(), [&](std::int64_t p) { return hilbert(A, B, p) == 1; });
}

}  // namespace

TEST(Conic, HolzerAgreesWithHilbertSymbols) {
  int decided = 0;
  for (std::int64_t a = 1; a <= 20; ++a) {
    for (std::int64_t b = a; b <= 20; ++b) {
      for (std::int64_t c = 1; c <= 20 && a * b * c <= 2000; ++c) {
        const HolzerVerdict v = holzer_decide(Conic(a, b, c));
        ASSERT_FALSE(v.truncated);
        EXPECT_EQ(v.witness.has_value(), locally_solvable(a, b, c)) << a << " " << b << " " << c;
        if (v.witness) {
          const auto& w = *v.witness;
          EXPECT_EQ(a * w.p() * w.p() + b * w.q() * w.q(), c * w.r() * w.r());
          EXPECT_LE(w.height(), v.bound);
        }
        ++decided;
      }
    }
  }
  EXPECT_GT(decided, 1000);
}

TEST(Conic, ChordThroughBasePoint) {
  EXPECT_EQ(*chord_point(F("x^2-2*y^2-1"), {1, 0}, 2), (RationalPoint{make_rational(9, 7), make_rational(4, 7)}));
  EXPECT_EQ(*chord_point(F("x^2+y^2-1"), {-1, 0}, make_rational(1, 2)),
            (RationalPoint{make_rational(3, 5), make_rational(4, 5)}));
  // Vertical tangent at (1, 0).
  EXPECT_FALSE(chord_point_direction(F("x^2+y^2-1"), {1, 0}, 0, 1));
  // Asymptotic direction of xy = 1: the second point is at infinity.
  EXPECT_FALSE(chord_point_direction(F("x*y-1"), {1, 1}, 1, 0));
  EXPECT_THROW(chord_point(F("x^2+y^2-1"), {1, 1}, 1), PreconditionError);
  EXPECT_THROW(chord_point(F("x^3+y^3-2"), {1, 1}, 1), PreconditionError);
}

TEST(Conic, ChordEnumerationEqualsDirectSearch) {
  const auto circle = F("x^2+y^2-1");
  const auto chords = enumerate_rational_points(circle, {-1, 0}, 50);
  EXPECT_EQ(chords.points, rational_point_search(circle, 50).points);
  EXPECT_EQ(as_set(chords.points), oracle::circle_points(50));

  const auto pell = F("x^2-2*y^2-1");
  EXPECT_EQ(enumerate_rational_points(pell, {1, 0}, 30).points, rational_point_search(pell, 30).points);
  const auto ellipse = F("x^2+3*y^2-4");
  EXPECT_EQ(enumerate_rational_points(ellipse, {1, 1}, 25).points, rational_point_search(ellipse, 25).points);
  EXPECT_EQ(slope_height_bound({-1, 0}, 50), 100);
}
