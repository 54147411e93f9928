#pragma once

// Exact integer roots of an integer polynomial inside a bounded range.
//
// No floating point and no factoring. Real roots are bracketed between
// consecutive integers by recursion on the derivative: between two
// brackets of critical points the polynomial is monotone, so a sign change
// there is located by binary search. Every real root in [lo, hi] ends up in
// some bracket [k, k+1]; the integer roots are then read off by exact
// evaluation at bracket endpoints. Brackets may be over-reported, which only
// costs evaluations.
//
// `Int` is Integer (mpz_class) or __int128 when the caller has proven that
// every intermediate value fits.

#include "dioph/number.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dioph::roots {

inline Integer floor_div_int(const Integer& a, const Integer& b) { return floor_div(a, b); }

inline __int128 floor_div_int(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(__int128 v) { return v == 0; }
inline int sign(const Integer& v) { return sgn(v); }
inline int sign(__int128 v) { return (v > 0) - (v < 0); }

inline std::optional<Integer> exact_sqrt_int(const Integer& v) { return exact_sqrt(v); }

inline std::optional<__int128> exact_sqrt_int(__int128 v) {
  if (v < 0) return std::nullopt;
  // Newton iteration in unsigned 128-bit arithmetic.
  unsigned __int128 n = static_cast<unsigned __int128>(v);
  if (n < 2) return static_cast<__int128>(n);
  unsigned __int128 x = n;
  unsigned __int128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  if (x * x != n) return std::nullopt;
  return static_cast<__int128>(x);
}

/// Horner evaluation, coefficients in ascending order.
template <class Int>
Int evaluate(std::span<const Int> coeffs, const Int& x) {
  Int acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

/// Drops zero high coefficients.
template <class Int>
std::vector<Int> trimmed(std::span<const Int> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && is_zero(coeffs[n - 1])) --n;
  return std::vector<Int>(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n));
}

template <class Int>
std::vector<Int> derivative(std::span<const Int> coeffs) {
  std::vector<Int> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * Int(static_cast<long>(i)));
  return d;
}

namespace detail {

// Returns k in [a, b-1] with a sign change or zero between k and k+1, given
// a monotone polynomial on [a, b] with sign(h(a)) != sign(h(b)).
template <class Int>
Int bisect(std::span<const Int> h, Int a, Int b, int sign_a) {
  while (b - a > 1) {
    Int mid = a + floor_div_int(Int(b - a), Int(2));
    int s = sign(evaluate(h, mid));
    if (s == 0) return mid;
    if (s == sign_a) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return a;
}

// Brackets covering every real root of h (nonconstant, trimmed) in [lo, hi].
template <class Int>
std::vector<Int> brackets(std::span<const Int> h, const Int& lo, const Int& hi) {
  std::vector<Int> out;
  if (h.size() < 2 || hi < lo) return out;
  if (h.size() == 2) {
    Int k = floor_div_int(Int(-h[0]), h[1]);
    if (!(k < lo) && !(hi < k)) out.push_back(k);
    return out;
  }
  std::vector<Int> dh = derivative(h);
  std::vector<Int> crit = brackets(std::span<const Int>(dh), lo, hi);

  // Monotone pieces between critical brackets.
  Int start = lo;
  auto scan_piece = [&](const Int& a, const Int& b) {
    if (b < a) return;
    int sa = sign(evaluate(h, a));
    if (sa == 0) {
      out.push_back(a);
      return;
    }
    if (a == b) return;
    int sb = sign(evaluate(h, b));
    if (sb == 0) {
      out.push_back(b);
      return;
    }
    if (sa != sb) out.push_back(bisect(h, a, b, sa));
  };
  for (const Int& c : crit) {
    scan_piece(start, c);
    out.push_back(c);
    start = c + 1;
  }
  scan_piece(start, hi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// All integers v in [lo, hi] with h(v) = 0, ascending. `h` must not be the
/// zero polynomial (a nonzero constant yields no roots).
template <class Int>
std::vector<Int> integer_roots(std::span<const Int> coeffs, const Int& lo, const Int& hi) {
  std::vector<Int> h = trimmed(coeffs);
  std::vector<Int> roots;
  if (h.size() < 2 || hi < lo) return roots;
  auto keep = [&](const Int& v) {
    if (!(v < lo) && !(hi < v)) roots.push_back(v);
  };
  if (h.size() == 2) {
    Int num = -h[0];
    if (is_zero(Int(num % h[1]))) keep(Int(num / h[1]));
    return roots;
  }
  if (h.size() == 3) {
    Int disc = h[1] * h[1] - Int(4) * h[2] * h[0];
    auto s = exact_sqrt_int(disc);
    if (!s) return roots;
    Int den = Int(2) * h[2];
    for (Int num : {Int(-h[1] - *s), Int(-h[1] + *s)}) {
      if (is_zero(Int(num % den))) keep(Int(num / den));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }
  for (const Int& k : detail::brackets(std::span<const Int>(h), lo, hi)) {
    if (is_zero(evaluate(std::span<const Int>(h), k))) keep(k);
    Int k1 = k + 1;
    if (is_zero(evaluate(std::span<const Int>(h), k1))) keep(k1);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace dioph::roots
