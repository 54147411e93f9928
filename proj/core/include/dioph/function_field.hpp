#pragma once

// Curves over the function field Q(t): F(t, x, y) = 0 and its solutions
// x = p(t)/r(t), y = q(t)/r(t).

#include "dioph/groebner.hpp"
#include "dioph/multivariate.hpp"
#include "dioph/univariate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

/// F in the variables (x, y, t), stored at indices 0, 1, 2.
class FunctionFieldCurve {
 public:
  static constexpr std::size_t kX = 0;
  static constexpr std::size_t kY = 1;
  static constexpr std::size_t kT = 2;

  /// Throws if F has the wrong variable count or is constant in x and y.
  explicit FunctionFieldCurve(MultivariatePolynomial f);
  static FunctionFieldCurve parse(std::string_view text);

  const MultivariatePolynomial& polynomial() const { return f_; }
  /// Total degree in x and y alone.
  unsigned xy_degree() const { return degree_; }

 private:
  MultivariatePolynomial f_;
  unsigned degree_ = 0;
};

struct TDiscriminant {
  /// Squarefree and monic; 1 when no fiber is singular.
  UnivariatePolynomial eliminant;
  /// deg(eliminant): distinct parameter values with a singular affine fiber
  /// (an upper bound, since resultants can contribute extra factors).
  unsigned s = 0;
  /// Resultants degenerated and the eliminant came from a lex Groebner basis.
  bool groebner_fallback = false;
};

/// Eliminates x and y from {F, F_x, F_y}. Throws IdenticallySingularError
/// when every fiber is singular.
TDiscriminant t_discriminant(const FunctionFieldCurve& curve);

/// (d^2 - 3d - 1)(2s + 1): for generic F of degree d >= 4 in x, y, every
/// solution has max(deg p, deg q, deg r) at most this. Throws for d < 4.
Integer ff_degree_bound(unsigned d, unsigned s);

/// (p, q, r) with gcd 1 and r monic.
class RationalFunctionTriple {
 public:
  /// Divides out gcd(p, q, r) and makes r monic; throws if r = 0.
  RationalFunctionTriple(UnivariatePolynomial p, UnivariatePolynomial q, UnivariatePolynomial r);
  const UnivariatePolynomial& p() const { return p_; }
  const UnivariatePolynomial& q() const { return q_; }
  const UnivariatePolynomial& r() const { return r_; }
  long degree() const;

  friend bool operator==(const RationalFunctionTriple&, const RationalFunctionTriple&) = default;
  friend bool operator<(const RationalFunctionTriple& a, const RationalFunctionTriple& b);

 private:
  UnivariatePolynomial p_, q_, r_;
};

/// r^d F(t, p/r, q/r) == 0 identically.
bool verify_ff_solution(const FunctionFieldCurve& curve, const RationalFunctionTriple& sol);
bool verify_ff_solution(const FunctionFieldCurve& curve, const UnivariatePolynomial& p,
                        const UnivariatePolynomial& q, const UnivariatePolynomial& r);

/// Fixes the scaling of (p, q, r).
struct Normalization {
  enum class Kind { RLeading, Coefficient };
  Kind kind = Kind::RLeading;
  /// Unknown set to 1 when kind == Coefficient (index into the unknowns).
  std::size_t coefficient = 0;
};

/// The solution passes through (x, y) at t.
struct Pin {
  Rational t;
  Rational x;
  Rational y;
};

struct UndeterminedSystem {
  std::size_t degree = 0;
  /// p0..pD, q0..qD, r0..rD; unknown i is polynomial variable i.
  std::vector<std::string> unknowns;
  std::vector<MultivariatePolynomial> equations;
};

/// Conditions on the coefficients of degree-D polynomials p, q, r for
/// r^d F(t, p/r, q/r) = 0, plus the normalization and one linear condition
/// per pin coordinate.
UndeterminedSystem undetermined_system(const FunctionFieldCurve& curve, std::size_t degree,
                                       const Normalization& normalization = {}, const std::vector<Pin>& pins = {});

struct FFSearchOptions {
  Normalization normalization;
  std::vector<Pin> pins;
  std::optional<std::uint64_t> step_budget;
};

struct FFSearchResult {
  /// Verified, reduced, deduplicated.
  std::vector<RationalFunctionTriple> solutions;
  bool truncated = false;
  bool positive_dimensional = false;
  std::size_t pruned_branches = 0;
  std::size_t equations = 0;
  std::size_t basis_size = 0;
};

/// Solutions with deg p, q, r <= D: undetermined coefficients, a lex
/// Groebner basis and rational back-substitution. An infinite solution set
/// is reported through positive_dimensional; pins cut it down, and every
/// returned triple passes through every pin.
FFSearchResult search_ff_solutions(const FunctionFieldCurve& curve, std::size_t degree,
                                   const FFSearchOptions& options = {});

}  // namespace dioph
