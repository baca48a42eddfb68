#ifndef INTCHEB_CHEBYSHEV_HPP
#define INTCHEB_CHEBYSHEV_HPP

#include <cmath>
#include <vector>

#include "intcheb/errors.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Chebyshev polynomial T_n on [-1, 1].
inline Poly1 chebyshev_t(unsigned n) {
  Poly1 prev = Poly1::constant(Rational(1));
  if (n == 0)
    return prev;
  Poly1 cur = Poly1::x();
  const Poly1 two_x{Rational(0), Rational(2)};
  for (unsigned k = 1; k < n; ++k) {
    Poly1 next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// C_n(x; a, b) = T_n((2x - a - b) / (b - a)): sup-norm 1 on [a, b], maximal growth off it.
inline Poly1 cheb(unsigned n, const Rational& a, const Rational& b) {
  if (!(a < b))
    throw DomainError("cheb requires a < b");
  Rational scale = Rational(2) / (b - a);
  Rational shift = -(a + b) / (b - a);
  return chebyshev_t(n).affine(shift, scale);
}

/// The n+1 alternation abscissae of C_n on [a, b] as doubles (for diagnostics).
inline std::vector<double> cheb_extrema(unsigned n, const Rational& a, const Rational& b) {
  std::vector<double> out;
  const double pi = 3.14159265358979323846;
  double lo = a.get_d(), hi = b.get_d();
  for (unsigned j = 0; j <= n; ++j)
    out.push_back(0.5 * ((lo + hi) + (hi - lo) * (n == 0 ? 1.0 : std::cos(j * pi / n))));
  return out;
}

/// ((z - z0) / (-z0))^m expanded in monomials; constant term is exactly 1.
inline CPoly shifted_power_expand(const Gaussian& z0, unsigned m) {
  if (z0.is_zero())
    throw DomainError("shifted_power_expand requires z0 != 0");
  // (z - z0)/(-z0) = 1 - z/z0
  CPoly base{Gaussian(1), -(Gaussian(1) / z0)};
  return base.pow(m);
}

} // namespace intcheb

#endif // INTCHEB_CHEBYSHEV_HPP
