#include "dioph/integral_search.hpp"

#include "dioph/error.hpp"
#include "dioph/roots.hpp"
#include "detail/partition.hpp"

#include <algorithm>

namespace dioph {

ProjectiveSolution::ProjectiveSolution(Integer p, Integer q, Integer r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (r_ == 0) throw PreconditionError("projective solution with r = 0");
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Integer g = gcd(gcd(p_, q_), r_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

ProjectiveSolution ProjectiveSolution::from_point(const RationalPoint& pt) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), pt.x.get_den().get_mpz_t(), pt.y.get_den().get_mpz_t());
  Integer p = pt.x.get_num() * (l / pt.x.get_den());
  Integer q = pt.y.get_num() * (l / pt.y.get_den());
  return ProjectiveSolution(std::move(p), std::move(q), std::move(l));
}

Integer ProjectiveSolution::height() const { return std::max({abs(p_), abs(q_), r_}); }

RationalPoint ProjectiveSolution::point() const { return {make_rational(p_, r_), make_rational(q_, r_)}; }

Integer height(const RationalPoint& pt) { return ProjectiveSolution::from_point(pt).height(); }

Integer taxicab_bound(const Integer& m) {
  if (m <= 0) throw PreconditionError("taxicab bound needs m >= 1");
  // 3 B^2 <= 4 m  <=>  B^2 <= floor(4 m / 3).
  Integer q = (4 * m) / 3;
  return isqrt(q);
}

namespace {

using detail::check_bound;
using detail::clamp_steps;
using detail::partitioned;

Integer to_integer(const Integer& v) { return v; }

Integer to_integer(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

template <class Int>
Int from_integer(const Integer& v);

template <>
Integer from_integer<Integer>(const Integer& v) {
  return v;
}

template <>
__int128 from_integer<__int128>(const Integer& v) {
  Integer a = abs(v);
  Integer hi = a >> 64;
  Integer lo = a - (hi << 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  __int128 r = static_cast<__int128>(u);
  return v < 0 ? -r : r;
}

/// f homogenized and grouped by the power of q: coefficient of q^j is
/// sum_i c_ij p^i r^(d-i-j).
template <class Int>
struct HomogeneousRows {
  struct Term {
    unsigned p_exp;
    unsigned r_exp;
    Int coeff;
  };
  std::vector<std::vector<Term>> by_q_power;
  unsigned degree = 0;

  explicit HomogeneousRows(const BivariatePolynomial& f) {
    degree = static_cast<unsigned>(f.degree());
    by_q_power.resize(static_cast<std::size_t>(f.degree_in_y() + 1));
    for (const auto& [m, c] : f.terms()) {
      by_q_power[m.second].push_back({m.first, degree - m.first - m.second, from_integer<Int>(c)});
    }
  }
};

template <class Int>
Int int_pow(const Int& base, unsigned e) {
  Int r = 1;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

/// Solutions (p, q, r) of the homogenized equation over the rows
/// [begin, end) of the enumeration r = r_min.., p = -p_bound..p_bound with
/// |q| <= q_bound. Coprimality is enforced when r > 1 is possible.
template <class Int>
void solve_rows(const HomogeneousRows<Int>& rows, std::uint64_t begin, std::uint64_t end, const Integer& p_bound,
                const Integer& q_bound, bool require_coprime, std::vector<ProjectiveSolution>& out) {
  const std::uint64_t width = static_cast<std::uint64_t>(Integer(2 * p_bound + 1).get_ui());
  const Int pb = from_integer<Int>(p_bound);
  const Int qb = from_integer<Int>(q_bound);
  const Int qlo = Int(-qb);
  std::vector<Int> g(rows.by_q_power.size());
  std::vector<Int> p_pows(rows.degree + 1);
  std::vector<Int> r_pows(rows.degree + 1);
  std::uint64_t current_r = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const std::uint64_t r_index = idx / width;
    const Int r = Int(static_cast<long>(r_index + 1));
    const Int p = Int(static_cast<long>(idx % width)) - pb;
    if (current_r != r_index + 1) {
      current_r = r_index + 1;
      for (unsigned k = 0; k <= rows.degree; ++k) r_pows[k] = int_pow(r, k);
    }
    for (unsigned k = 0; k <= rows.degree; ++k) p_pows[k] = int_pow(p, k);
    bool all_zero = true;
    for (std::size_t j = 0; j < g.size(); ++j) {
      Int acc = 0;
      for (const auto& t : rows.by_q_power[j]) acc += t.coeff * p_pows[t.p_exp] * r_pows[t.r_exp];
      g[j] = acc;
      if (!roots::is_zero(acc)) all_zero = false;
    }
    auto emit = [&](const Int& q) {
      Integer P = to_integer(p), Q = to_integer(q), R = to_integer(r);
      if (require_coprime && gcd(gcd(P, Q), R) != 1) return;
      out.emplace_back(std::move(P), std::move(Q), std::move(R));
    };
    if (all_zero) {
      for (Int q = qlo; !(qb < q); q += 1) emit(q);
      continue;
    }
    for (const Int& q : roots::integer_roots<Int>(std::span<const Int>(g), qlo, qb)) emit(q);
  }
}

bool fits_fast_path(const BivariatePolynomial& f, const Integer& max_coord) {
  Integer s = 0;
  for (const auto& [m, c] : f.terms()) s += abs(c);
  const unsigned d = static_cast<unsigned>(f.degree());
  Integer factorial = 1;
  for (unsigned k = 2; k <= d + 1; ++k) factorial *= k;
  Integer bound = s * pow(Integer(max_coord + 1), d) * factorial * (d + 2) * 8;
  return mpz_sizeinbase(bound.get_mpz_t(), 2) < 61;
}

std::vector<ProjectiveSolution> run_rows(const BivariatePolynomial& f, std::uint64_t rows_to_scan,
                                         const Integer& p_bound, const Integer& q_bound, const Integer& max_coord,
                                         bool require_coprime, unsigned threads) {
  if (fits_fast_path(f, max_coord)) {
    const HomogeneousRows<__int128> rows(f);
    return partitioned<ProjectiveSolution>(rows_to_scan, threads, [&](std::uint64_t b, std::uint64_t e, auto& out) {
      solve_rows(rows, b, e, p_bound, q_bound, require_coprime, out);
    });
  }
  const HomogeneousRows<Integer> rows(f);
  return partitioned<ProjectiveSolution>(rows_to_scan, threads, [&](std::uint64_t b, std::uint64_t e, auto& out) {
    solve_rows(rows, b, e, p_bound, q_bound, require_coprime, out);
  });
}


}  // namespace

IntegralSearchResult sum_of_cubes_solutions(const Integer& m, const SearchOptions& options) {
  const Integer bound = taxicab_bound(m);
  check_bound(bound);
  IntegralSearchResult result;
  const std::uint64_t total = 2 * bound.get_ui() + 1;
  result.steps = clamp_steps(total, options, result.truncated);
  result.points = partitioned<IntegerPoint>(result.steps, options.threads, [&](std::uint64_t b, std::uint64_t e,
                                                                               std::vector<IntegerPoint>& out) {
    for (std::uint64_t i = b; i < e; ++i) {
      Integer x = Integer(static_cast<unsigned long>(i)) - bound;
      Integer rest = m - x * x * x;
      if (auto y = exact_cbrt(rest)) out.push_back({x, *y});
    }
  });
  std::sort(result.points.begin(), result.points.end());
  return result;
}

IntegralSearchResult box_search_integral(const BivariatePolynomial& f, const Integer& bound,
                                         const SearchOptions& options) {
  check_bound(bound);
  IntegralSearchResult result;
  if (f.is_zero()) throw PreconditionError("box search on the zero polynomial");
  const std::uint64_t total = 2 * bound.get_ui() + 1;
  result.steps = clamp_steps(total, options, result.truncated);
  std::vector<ProjectiveSolution> sols = run_rows(f, result.steps, bound, bound, bound, false, options.threads);
  for (auto& s : sols) result.points.push_back({s.p(), s.q()});
  std::sort(result.points.begin(), result.points.end());
  return result;
}

RationalSearchResult rational_point_search(const BivariatePolynomial& f, const Integer& height_bound,
                                           const SearchOptions& options) {
  if (height_bound < 1) throw PreconditionError("rational search needs height >= 1");
  check_bound(height_bound);
  if (f.is_zero()) throw PreconditionError("rational search on the zero polynomial");
  RationalSearchResult result;
  const std::uint64_t h = height_bound.get_ui();
  const std::uint64_t total = h * (2 * h + 1);
  result.steps = clamp_steps(total, options, result.truncated);
  result.points = run_rows(f, result.steps, height_bound, height_bound, height_bound, true, options.threads);
  std::sort(result.points.begin(), result.points.end());
  return result;
}

HeightRecord height_record(const BivariatePolynomial& f, const Integer& height_bound, const SearchOptions& options) {
  RationalSearchResult found = rational_point_search(f, height_bound, options);
  HeightRecord rec;
  rec.search_radius = height_bound;
  rec.points_found = found.points.size();
  rec.truncated = found.truncated;
  for (const auto& s : found.points) rec.record = std::max(rec.record, s.height());
  return rec;
}

}  // namespace dioph
