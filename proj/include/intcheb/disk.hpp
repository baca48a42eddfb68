#ifndef INTCHEB_DISK_HPP
#define INTCHEB_DISK_HPP

#include <map>
#include <optional>
#include <vector>

#include "intcheb/chebyshev.hpp"
#include "intcheb/domain.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Approximate lambda by Gaussian-integer polynomials on |z - center| <= radius.
struct DiskProblem {
  Gaussian lambda;
  Gaussian center;
  Rational radius;

  Disk disk() const { return {center, radius}; }
};

/// Canonical coordinate w = sign * (conj ? conj(z) : z) + shift, with lambda conjugated alongside.
struct DiskTransform {
  bool conj = false;
  Rational sign{1};
  Gaussian shift;

  /// Applies w -> 1 - w after this transform.
  DiskTransform reflect() const { return {conj, Rational(-sign), Gaussian(1) - shift}; }
  /// Applies w -> i + conj(w) after this transform.
  DiskTransform mirror() const { return {!conj, sign, Gaussian(Rational(0), Rational(1)) + shift.conj()}; }

  Gaussian map_point(const Gaussian& z) const { return Gaussian(sign) * (conj ? z.conj() : z) + shift; }
  Gaussian map_lambda(const Gaussian& l) const { return conj ? l.conj() : l; }

  /// Pulls a canonical-coordinate polynomial Q back: q(z) = Q(w(z)) (conjugated when needed).
  CPoly pull_back(const CPoly& q) const {
    if (!conj)
      return q.affine(shift, Gaussian(sign));
    std::vector<Gaussian> c;
    for (const auto& v : q.coeffs())
      c.push_back(v.conj());
    return CPoly(std::move(c)).affine(shift.conj(), Gaussian(sign));
  }
};

struct CanonicalDisk {
  DiskProblem problem;
  DiskTransform transform;
};

inline bool is_canonical(const DiskProblem& p) {
  const Rational half(1, 2);
  return sgn(p.center.re) >= 0 && p.center.re <= half && sgn(p.center.im) >= 0 && p.center.im <= half;
}

/// Moves the centre into [0,1/2]^2 by an integer shift, z -> 1 - z and conjugation.
inline CanonicalDisk canonicalize(const DiskProblem& p) {
  if (sgn(p.radius) <= 0)
    throw DomainError("disk radius must be positive");
  DiskTransform t;
  t.shift = -Gaussian(Rational(floor_of(p.center.re)), Rational(floor_of(p.center.im)));
  Gaussian w = t.map_point(p.center);
  const Rational half(1, 2);
  if (w.re > half) {
    t = t.reflect();
    w = t.map_point(p.center);
  }
  if (w.im > half) {
    t = t.mirror();
    w = t.map_point(p.center);
  }
  if (w.norm2() <= p.radius * p.radius)
    throw InfeasibleError("the disk contains a Gaussian integer; no non-integer constant can be approximated");
  return {{t.map_lambda(p.lambda), w, p.radius}, t};
}

/// rho1 = r/|z0|, rho2 = |z0| + r and rho = max of the two, as enclosures.
struct DiskRates {
  Rational rho1_sq;
  Enclosure rho1;
  Enclosure rho2;
  Enclosure rho;
  /// Decided exactly: rho1 >= rho2 iff r (1 - |z0|) >= |z0|^2.
  bool rho1_dominates = false;
};

inline DiskRates disk_rates(const DiskProblem& p) {
  const Rational n2 = p.center.norm2();
  if (sgn(n2) == 0)
    throw InfeasibleError("centre at a Gaussian integer");
  DiskRates out;
  out.rho1_sq = p.radius * p.radius / n2;
  const Enclosure z = modulus(p.center);
  out.rho1 = sqrt_enclosure(out.rho1_sq);
  out.rho2 = {z.lo + p.radius, z.hi + p.radius};
  // r - |z0|^2 >= r |z0|, both sides compared after squaring when the left is nonnegative
  const Rational lhs = p.radius - n2;
  out.rho1_dominates = sgn(lhs) >= 0 && lhs * lhs >= p.radius * p.radius * n2;
  out.rho = out.rho1_dominates ? out.rho1 : out.rho2;
  return out;
}

/// The disk cascade on an arbitrary starting polynomial A of degree <= n.
///
/// Working upwards from z^0, the fractional part delta of each coefficient is
/// cancelled by subtracting delta * z^k * ((z - z0)/(-z0))^(n-k); the added
/// error is at most |delta| rho2^k rho1^(n-k) on the disk.
inline CPoly disk_cascade(CPoly a, const Gaussian& z0, unsigned n) {
  std::map<unsigned, CPoly> powers;
  for (unsigned k = 0; k <= n; ++k) {
    const Gaussian t = a[k];
    const Gaussian delta = t - round_nearest(t);
    if (delta.is_zero())
      continue;
    auto it = powers.find(n - k);
    if (it == powers.end())
      it = powers.emplace(n - k, shifted_power_expand(z0, n - k)).first;
    a = a - CPoly::monomial(delta, k) * it->second;
  }
  if (!a.is_integer())
    throw Error("disk cascade left a non-integer coefficient");
  return a;
}

/// Gaussian-integer q_n with sup |lambda - q_n| <= (n+1) rho^n on a canonical disk.
inline CPoly disk_construct(const DiskProblem& p, unsigned n) {
  if (!is_canonical(p))
    throw ProtocolError("disk_construct expects a canonical problem; call canonicalize first");
  if (p.center.norm2() <= p.radius * p.radius)
    throw InfeasibleError("the disk contains a Gaussian integer");
  return disk_cascade(CPoly::constant(p.lambda), p.center, n);
}

/// Canonicalizes, constructs and pulls the result back to the original coordinates.
inline CPoly disk_construct_any(const DiskProblem& p, unsigned n) {
  CanonicalDisk c = canonicalize(p);
  return c.transform.pull_back(disk_construct(c.problem, n));
}

/// Certified sup over the disk of |lambda - q|.
inline Enclosure disk_error(const DiskProblem& p, const CPoly& q, const NormRequest& req = {}) {
  return sup_norm(CPoly::constant(p.lambda) - q, p.disk(), req);
}

/// (n+1) rho^n.
inline Enclosure disk_upper_bound(const DiskProblem& p, unsigned n) {
  DiskRates r = disk_rates(p);
  Enclosure e = pow(r.rho, n);
  return e * Rational(n + 1);
}

/// Distance from lambda to the Gaussian integers, as an enclosure.
inline Enclosure gaussian_distance(const Gaussian& l) { return modulus(l - round_nearest(l)); }

/// dist(lambda, Z + iZ) * rho1^n, valid for every n.
inline Enclosure disk_lower_growth(const DiskProblem& p, unsigned n) {
  const Gaussian frac = p.lambda - round_nearest(p.lambda);
  DiskRates r = disk_rates(p);
  // square is rational: dist^2 * rho1^(2n)
  return sqrt_enclosure(frac.norm2() * pow(r.rho1_sq, n));
}

/// No two consecutive 0 digits and no two consecutive (q-1) digits in the base-q
/// expansion of frac(x). digits == 0 checks the whole (eventually periodic) expansion.
inline bool digit_condition(const Rational& x, unsigned q, unsigned digits = 0) {
  if (q < 2)
    throw DomainError("digit base must be at least 2");
  Rational frac = x - Rational(floor_of(x));
  const Integer den = frac.get_den();
  Integer num = frac.get_num();
  std::vector<unsigned> stream;
  auto next = [&] {
    num *= q;
    Integer d = num / den;
    num -= d * den;
    stream.push_back(static_cast<unsigned>(d.get_ui()));
  };
  if (digits > 0) {
    while (stream.size() < digits)
      next();
  } else {
    // remainders repeat within den steps; then one more period covers the wrap-around pair
    std::map<Integer, std::size_t> seen;
    while (seen.emplace(num, stream.size()).second)
      next();
    const std::size_t period = stream.size() - seen[num];
    for (std::size_t k = 0; k <= period; ++k)
      next();
  }
  for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
    if (stream[i] == 0 && stream[i + 1] == 0)
      return false;
    if (stream[i] == q - 1 && stream[i + 1] == q - 1)
      return false;
  }
  return true;
}

/// q^-(n+2) when the disk reaches out to 1/q on the real axis and Re lambda passes the digit test.
inline std::optional<Rational> qadic_lower_bound(const DiskProblem& p, unsigned q, unsigned n) {
  if (q < 2)
    throw DomainError("q must be at least 2");
  DiskProblem c = is_canonical(p) ? p : canonicalize(p).problem;
  const Rational inv(1, q);
  const Rational gap = inv - c.radius; // must equal |z0|
  if (sgn(gap) <= 0 || gap * gap != c.center.norm2())
    return std::nullopt;
  const Gaussian edge = Gaussian(inv) - c.center;
  if (edge.norm2() > c.radius * c.radius)
    return std::nullopt;
  if (!digit_condition(c.lambda.re, q))
    return std::nullopt;
  return pow(inv, n + 2);
}

/// The p/q^s family: integer Q of degree s*floor(n/s) with
/// lambda - Q = (p/q^s) (1 - qz)^(s floor(n/s)).
inline Poly1 pqs_construct(const Integer& p, unsigned q, unsigned s, unsigned n) {
  if (q < 2 || s < 1)
    throw DomainError("need q >= 2 and s >= 1");
  const Rational lambda = Rational(p) / pow(Rational(q), s);
  if (is_integer(lambda))
    throw DomainError("p/q^s must not be an integer");
  const unsigned m = n / s;
  const Poly1 one_minus = Poly1{Rational(1), Rational(-static_cast<long>(q))}.pow(m);
  const Poly1 qm = (Poly1::constant(Rational(1)) - one_minus) * Rational(1, q); // 1/q - (1/q)(1-qz)^m
  // p (1/q - qm)^s = lambda (1-qz)^(sm); the j = 0 term of the binomial expansion is lambda
  Poly1 out;
  Poly1 qpow = Poly1::constant(Rational(1));
  for (unsigned j = 1; j <= s; ++j) {
    qpow = qpow * qm;
    Rational c = Rational(p) * Rational(binomial(s, j)) / pow(Rational(q), s - j);
    if (j % 2 == 1)
      out = out + qpow * c; // -(-1)^j
    else
      out = out - qpow * c;
  }
  if (!out.is_integer())
    throw DomainError("the p/q^s combination is not an integer polynomial for this (q, s, n)");
  return out;
}

/// lambda - Q == (p/q^s)(1 - qz)^(s floor(n/s)) as an exact polynomial identity.
inline bool pqs_identity_holds(const Integer& p, unsigned q, unsigned s, unsigned n, const Poly1& built) {
  const Rational lambda = Rational(p) / pow(Rational(q), s);
  const Poly1 rhs = Poly1{Rational(1), Rational(-static_cast<long>(q))}.pow(s * (n / s)) * lambda;
  return Poly1::constant(lambda) - built == rhs;
}

/// Result of approximating an analytic function on the disk.
struct FunctionApprox {
  CPoly q;
  /// Certified sup over the disk of |T_n - q| with T_n the Taylor truncation.
  Enclosure truncation_error;
  /// majorant * (r/R)^(n+1), the Taylor tail.
  Rational tail_bound;
  /// tail + truncation error upper end: a bound on sup |f - q|.
  Rational total_bound;
  /// majorant * (r/R)^(n+1) + (n+1) rho^n, the a-priori bound.
  Rational theory_bound;
};

/// Integer approximation of f(z) = sum a_k (z - z0)^k on a canonical disk.
///
/// The series is truncated at degree n and the truncation is fed through the
/// same cascade as constants. `majorant` must bound sum |a_k| R^k.
inline FunctionApprox disk_construct_function(const std::vector<Gaussian>& taylor, const Rational& big_r,
                                              const Rational& majorant, const DiskProblem& p, unsigned n,
                                              const NormRequest& req = {}) {
  if (!(big_r > p.radius))
    throw DomainError("need R > r");
  if (sgn(majorant) < 0)
    throw DomainError("majorant must be nonnegative (a divergent series has none)");
  if (!is_canonical(p))
    throw ProtocolError("disk_construct_function expects a canonical problem");
  CPoly trunc;
  const CPoly shift{-p.center, Gaussian(1)};
  CPoly pw = CPoly::constant(Gaussian(1));
  for (unsigned k = 0; k <= n && k < taylor.size(); ++k) {
    trunc = trunc + pw * CPoly::constant(taylor[k]);
    pw = pw * shift;
  }
  FunctionApprox out;
  out.q = disk_cascade(trunc, p.center, n);
  out.truncation_error = sup_norm(trunc - out.q, p.disk(), req);
  const Rational ratio = p.radius / big_r;
  out.tail_bound = taylor.size() <= n + 1 ? Rational(0) : majorant * pow(ratio, n + 1);
  out.total_bound = out.tail_bound + out.truncation_error.hi;
  out.theory_bound = majorant * pow(ratio, n + 1) + disk_upper_bound(p, n).hi;
  return out;
}

} // namespace intcheb

#endif // INTCHEB_DISK_HPP
