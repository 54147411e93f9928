#pragma once

// Exhaustive searches for integral and rational points with exact bounds.
//
// All searches are complete within their stated bound and return results in
// lexicographic order. A step budget truncates the search deterministically
// (the same prefix of the enumeration is examined regardless of how many
// threads are used) and sets `truncated`.

#include "dioph/bivariate.hpp"
#include "dioph/number.hpp"

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace dioph {

struct IntegerPoint {
  Integer x;
  Integer y;
  friend bool operator==(const IntegerPoint&, const IntegerPoint&) = default;
  friend bool operator<(const IntegerPoint& a, const IntegerPoint& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }
};

/// Rational point (p/r, q/r) with gcd(p, q, r) = 1 and r >= 1.
class ProjectiveSolution {
 public:
  /// Reduces the triple; throws if r = 0.
  ProjectiveSolution(Integer p, Integer q, Integer r);
  static ProjectiveSolution from_point(const RationalPoint& pt);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }
  /// max(|p|, |q|, |r|).
  Integer height() const;
  RationalPoint point() const;

  friend bool operator==(const ProjectiveSolution&, const ProjectiveSolution&) = default;
  friend bool operator<(const ProjectiveSolution& a, const ProjectiveSolution& b) {
    return std::tie(a.p_, a.q_, a.r_) < std::tie(b.p_, b.q_, b.r_);
  }

 private:
  Integer p_, q_, r_;
};

/// Height of a rational point: max(|p|, |q|, |r|) of its reduced triple.
Integer height(const RationalPoint& pt);

struct SearchOptions {
  /// Maximum number of enumeration steps (rows of the search); unset means
  /// unbounded.
  std::optional<std::uint64_t> step_budget;
  /// Worker threads; the merged result does not depend on this.
  unsigned threads = 1;
};

struct IntegralSearchResult {
  std::vector<IntegerPoint> points;
  bool truncated = false;
  std::uint64_t steps = 0;
};

struct RationalSearchResult {
  std::vector<ProjectiveSolution> points;
  bool truncated = false;
  std::uint64_t steps = 0;
};

/// Largest B with 3 B^2 <= 4 m, i.e. floor(2 sqrt(m/3)). Every integer
/// solution of x^3 + y^3 = m has |x|, |y| <= B.
Integer taxicab_bound(const Integer& m);

/// All integer solutions of x^3 + y^3 = m (m >= 1).
IntegralSearchResult sum_of_cubes_solutions(const Integer& m, const SearchOptions& options = {});

/// All integer (x, y) with |x|, |y| <= bound and f(x, y) = 0. One step is one
/// value of x.
IntegralSearchResult box_search_integral(const BivariatePolynomial& f, const Integer& bound,
                                         const SearchOptions& options = {});

/// All reduced (p, q, r), r >= 1, max(|p|, |q|, |r|) <= height_bound, with
/// f(p/r, q/r) = 0. One step is one (r, p) pair.
RationalSearchResult rational_point_search(const BivariatePolynomial& f, const Integer& height_bound,
                                           const SearchOptions& options = {});

/// Largest height seen among the rational points up to a search radius. This
/// is a lower bound for the supremum of heights over all rational points,
/// nothing more.
struct HeightRecord {
  Integer record = 0;
  Integer search_radius = 0;
  std::size_t points_found = 0;
  bool truncated = false;
};

HeightRecord height_record(const BivariatePolynomial& f, const Integer& height_bound,
                           const SearchOptions& options = {});

}  // namespace dioph
