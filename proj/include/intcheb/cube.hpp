#ifndef INTCHEB_CUBE_HPP
#define INTCHEB_CUBE_HPP

#include <optional>
#include <vector>

#include "intcheb/chebyshev.hpp"
#include "intcheb/disk.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/multipoly.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Approximate lambda in (0,1) by integer polynomials on [a,b]^d, 0 < a < b < 1, a + b <= 1.
struct CubeProblem {
  Rational lambda;
  Rational a;
  Rational b;
  unsigned dim = 1;

  Cube cube() const { return {a, b, dim}; }
  void validate() const {
    if (!(sgn(lambda) > 0 && lambda < 1))
      throw DomainError("cube problems need lambda in (0,1)");
    if (!(sgn(a) > 0 && a < b && b < 1))
      throw DomainError("cube problems need 0 < a < b < 1");
    if (a + b > 1)
      throw DomainError("cube problems need a + b <= 1 so that 0 is the nearest integer point");
    if (dim == 0)
      throw DomainError("cube dimension must be positive");
  }
};

struct CubeRates {
  /// (sqrt b - sqrt a) / (sqrt b + sqrt a) = (a + b - 2 sqrt(ab)) / (b - a).
  Enclosure rho_cheb;
  Enclosure rho;
  /// Decided exactly.
  bool cheb_dominates = false;
};

inline CubeRates cube_rates(const Rational& a, const Rational& b) {
  CubeRates out;
  const Enclosure root = sqrt_enclosure(a * b);
  out.rho_cheb = {(a + b - 2 * root.hi) / (b - a), (a + b - 2 * root.lo) / (b - a)};
  // rho_cheb >= b  <=>  a + b - b(b - a) >= 2 sqrt(ab)
  const Rational lhs = a + b - b * (b - a);
  out.cheb_dominates = sgn(lhs) >= 0 && lhs * lhs >= 4 * a * b;
  out.rho = out.cheb_dominates ? out.rho_cheb : Enclosure(b);
  return out;
}

/// Number of monomials of total degree <= n in d variables: C(d+n, d).
inline Integer monomial_count(unsigned d, unsigned n) { return binomial(d + n, d); }

/// Even split of a total degree over d axes; the first n mod d axes get the extra unit.
inline std::vector<unsigned> split_degree(unsigned n, unsigned d) {
  std::vector<unsigned> out(d, n / d);
  for (unsigned j = 0; j < n % d; ++j)
    ++out[j];
  return out;
}

struct UnitApprox {
  /// U with U(0) = 0 and 1 - U = prod_j C_{n_j}(x_j) / C_{n_j}(0).
  MultiPoly poly;
  /// prod_j 1/|C_{n_j}(0)|, an exact bound on sup |1 - U| over the cube.
  Rational bound;
};

inline MultiPoly normalized_cheb_product(const Rational& a, const Rational& b, unsigned d, unsigned n,
                                         Rational* bound = nullptr) {
  MultiPoly prod = MultiPoly::constant(d, Rational(1));
  Rational bnd(1);
  const auto degs = split_degree(n, d);
  for (unsigned j = 0; j < d; ++j) {
    if (degs[j] == 0)
      continue;
    Poly1 c = cheb(degs[j], a, b);
    const Rational c0 = c[0];
    prod = prod * MultiPoly::from_axis(d, j, c * (Rational(1) / c0));
    bnd /= abs(c0);
  }
  if (bound)
    *bound = bnd;
  return prod;
}

/// The per-axis Chebyshev product approximating 1 with zero constant term.
inline UnitApprox cube_unit_approx(const Rational& a, const Rational& b, unsigned d, unsigned n) {
  if (!(a < b) || d == 0)
    throw DomainError("cube_unit_approx needs a < b and d >= 1");
  UnitApprox out;
  MultiPoly w = normalized_cheb_product(a, b, d, n, &out.bound);
  out.poly = MultiPoly::constant(d, Rational(1)) - w;
  return out;
}

/// Integer q_n of total degree <= n with sup |lambda - q_n| <= 2^d C(d+n,d) rho^n on the cube.
///
/// Starts from lambda * U and walks the monomials x^s in graded order: the
/// fractional part delta of the coefficient of x^s is moved into
/// delta * x^s * prod C/C(0) of total degree n, which leaves lower monomials untouched.
inline MultiPoly cube_construct(const CubeProblem& p, unsigned n) {
  p.validate();
  const unsigned d = p.dim;
  std::vector<MultiPoly> w;
  for (unsigned k = 0; k <= n; ++k)
    w.push_back(normalized_cheb_product(p.a, p.b, d, k));
  MultiPoly t = (MultiPoly::constant(d, Rational(1)) - w[n]) * p.lambda;
  for (const auto& s : multi_indices_upto(d, n)) {
    const Rational ts = t.coeff(s);
    const Rational delta = ts - Rational(floor_of(ts));
    if (sgn(delta) == 0)
      continue;
    t -= MultiPoly::monomial(s, delta) * w[n - total_degree(s)];
  }
  if (!t.is_integer())
    throw Error("cube cascade left a non-integer coefficient");
  return t;
}

inline Enclosure cube_error(const CubeProblem& p, const MultiPoly& q, const NormRequest& req = {}) {
  return sup_norm(MultiPoly::constant(p.dim, p.lambda) - q, p.cube(), req);
}

/// 2^d C(d+n,d) rho^n, the explicit constant of the cascade.
inline Enclosure cube_upper_bound(const CubeProblem& p, unsigned n) {
  CubeRates r = cube_rates(p.a, p.b);
  return pow(r.rho, n) * (pow(Rational(2), p.dim) * Rational(monomial_count(p.dim, n)));
}

/// dist(lambda, Z) rho_cheb^n.
///
/// Restricting to the diagonal reduces to one variable, where
/// |q(0)| <= sup |q| |C_n(0)| and |C_n(0)| <= rho_cheb^-n.
inline Enclosure cube_lower_bernstein(const CubeProblem& p, unsigned n) {
  CubeRates r = cube_rates(p.a, p.b);
  return pow(r.rho_cheb, n) * dist_to_integers(p.lambda);
}

/// b^(n+2) when b = 1/q and lambda passes the base-q digit test.
inline std::optional<Rational> cube_lower_qadic(const CubeProblem& p, unsigned n) {
  if (p.b.get_num() != 1 || p.b.get_den() < 2)
    return std::nullopt;
  const unsigned q = static_cast<unsigned>(p.b.get_den().get_ui());
  if (!digit_condition(p.lambda, q))
    return std::nullopt;
  return pow(p.b, n + 2);
}

} // namespace intcheb

#endif // INTCHEB_CUBE_HPP
