#ifndef INTCHEB_ROOTS_HPP
#define INTCHEB_ROOTS_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Interval [lo, hi] holding exactly one distinct real root (lo == hi for an exact rational root).
struct RootBracket {
  Rational lo;
  Rational hi;
};

namespace detail {

/// Sign variations of the coefficient sequence, zeros skipped.
inline int sign_variations(const Poly1& p) {
  int count = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++count;
    last = s;
  }
  return count;
}

/// Descartes bound on the number of roots of g in the open interval (lo, hi).
inline int descartes_bound(const Poly1& g, const Rational& lo, const Rational& hi) {
  Poly1 h = g.affine(lo, hi - lo); // roots of g in (lo,hi) <-> roots of h in (0,1)
  const long n = h.degree();
  if (n <= 0)
    return 0;
  // Q(x) = (1+x)^n h(x/(1+x)) = sum_k h_k x^k (1+x)^(n-k)
  std::vector<Rational> q(static_cast<std::size_t>(n + 1), Rational(0));
  for (long k = 0; k <= n; ++k) {
    const Rational hk = h[static_cast<std::size_t>(k)];
    if (sgn(hk) == 0)
      continue;
    for (long j = 0; j <= n - k; ++j)
      q[static_cast<std::size_t>(k + j)] += hk * Rational(binomial(static_cast<unsigned long>(n - k), static_cast<unsigned long>(j)));
  }
  return sign_variations(Poly1(std::move(q)));
}

} // namespace detail

/// Square-free part f / gcd(f, f').
inline Poly1 square_free_part(const Poly1& f) {
  if (f.degree() <= 0)
    return f;
  Poly1 g = gcd(f, f.derivative());
  if (g.degree() <= 0)
    return f;
  return f.divmod(g).first;
}

/// Distinct real roots of f strictly inside (a, b), each bracketed to width <= eps.
///
/// Isolation is exact: Descartes' rule of signs on the square-free part
/// followed by rational bisection. Roots sitting exactly at a or b are omitted.
inline std::vector<RootBracket> isolate_real_roots(const Poly1& f, const Rational& a, const Rational& b,
                                                   const Rational& eps) {
  std::vector<RootBracket> out;
  if (f.degree() <= 0 || !(a < b))
    return out;
  const Poly1 g = square_free_part(f);

  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int v = detail::descartes_bound(g, lo, hi);
    if (v == 0)
      continue;
    if (v == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(g(mid)) == 0)
      out.push_back({mid, mid});
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }

  for (auto [lo, hi] : isolated) {
    int slo = sgn(g(lo));
    int shi = sgn(g(hi));
    while (hi - lo > eps) {
      Rational mid = (lo + hi) / 2;
      int sm = sgn(g(mid));
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      bool left;
      if (slo != 0 && shi != 0)
        left = sm != slo;
      else // an endpoint is itself a root of g; fall back to counting
        left = detail::descartes_bound(g, lo, mid) == 1;
      if (left) {
        hi = mid;
        shi = sm;
      } else {
        lo = mid;
        slo = sm;
      }
    }
    out.push_back({lo, hi});
  }
  std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return out;
}

} // namespace intcheb

#endif // INTCHEB_ROOTS_HPP
