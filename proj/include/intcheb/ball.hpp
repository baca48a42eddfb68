#ifndef INTCHEB_BALL_HPP
#define INTCHEB_BALL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "intcheb/bigfloat.hpp"
#include "intcheb/chebyshev.hpp"
#include "intcheb/domain.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/linalg.hpp"
#include "intcheb/lp.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Approximate lambda by radial integer polynomials Q(|x|^2) in L_p of the ball of radius r in R^d.
struct BallProblem {
  Rational lambda;
  Rational r;
  unsigned dim = 1;
  Rational p{1};

  Ball ball() const { return {r, dim}; }
  /// Weight exponent of the radial reduction in u = |x|^2.
  Rational alpha() const { return ratio(static_cast<long>(dim), 2) - 1; }
  void validate() const {
    if (!(sgn(lambda) > 0 && lambda < 1))
      throw DomainError("ball problems need lambda in (0,1)");
    if (sgn(r) <= 0)
      throw DomainError("ball radius must be positive");
    if (dim == 0)
      throw DomainError("ball dimension must be positive");
    if (p < 1)
      throw DomainError("ball problems need p >= 1");
  }
};

// ---------------------------------------------------------------------------
// Lemma 3: the weighted L2 extremal problem with a forced value at 0

/// min over a_m..a_n of the integral over [0,1] of t^alpha (1 - sum a_k t^k)^2.
inline Rational lemma3_value(const Rational& alpha, unsigned m, unsigned n) {
  if (!(m >= 1 && n >= m))
    throw DomainError("lemma3 needs n >= m >= 1");
  if (alpha <= -1)
    throw DomainError("lemma3 needs alpha > -1");
  Rational v = 1 / (alpha + 1);
  for (unsigned k = m; k <= n; ++k) {
    Rational f = Rational(k) / (Rational(k) + alpha + 1);
    v *= f * f;
  }
  return v;
}

struct Lemma3Family {
  Rational alpha;
  unsigned m = 1;
  unsigned n = 1;
  /// 1 - sum_{k=m}^n a_k t^k.
  Poly1 poly;
  /// Minimal weighted L2 value reached by poly.
  Rational value;
};

namespace detail {

inline void lemma3_check(const Rational& alpha, unsigned m, unsigned n) {
  if (!(m >= 1 && n >= m))
    throw DomainError("lemma3 needs n >= m >= 1");
  if (alpha <= -1)
    throw DomainError("lemma3 needs alpha > -1");
}

/// Integral over [0,1] of t^alpha f(t) for a polynomial f.
inline Rational moment(const Poly1& f, const Rational& alpha) {
  Rational acc = 0;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k)
    acc += f.coeffs()[k] / (alpha + static_cast<long>(k) + 1);
  return acc;
}

} // namespace detail

/// Minimizer by an exact solve of the normal equations with Gram entries 1/(alpha+j+k+1).
inline Lemma3Family lemma3_poly(const Rational& alpha, unsigned m, unsigned n) {
  detail::lemma3_check(alpha, m, n);
  const unsigned cnt = n - m + 1;
  RMatrix g(cnt, std::vector<Rational>(cnt));
  std::vector<Rational> rhs(cnt);
  for (unsigned j = 0; j < cnt; ++j) {
    for (unsigned k = 0; k < cnt; ++k)
      g[j][k] = 1 / (alpha + (m + j) + (m + k) + 1);
    rhs[j] = 1 / (alpha + (m + j) + 1);
  }
  const auto a = solve_exact(std::move(g), std::move(rhs));
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = 1;
  for (unsigned j = 0; j < cnt; ++j)
    c[m + j] = -a[j];
  Lemma3Family out{alpha, m, n, Poly1(std::move(c)), Rational(0)};
  out.value = detail::moment(out.poly * out.poly, alpha);
  return out;
}

/// The same minimizer from its residue formula, without a linear solve.
///
/// With c_k the coefficients of the extremal polynomial, F(s) = sum c_k / (s + k + alpha + 1)
/// vanishes at s = m..n, so F(s) = C prod (s - j) / prod (s + k + alpha + 1) and c_k is a residue.
inline Lemma3Family lemma3_poly_closed(const Rational& alpha, unsigned m, unsigned n) {
  detail::lemma3_check(alpha, m, n);
  std::vector<unsigned> support{0};
  for (unsigned k = m; k <= n; ++k)
    support.push_back(k);
  auto residue = [&](unsigned k) {
    const Rational s = -(alpha + k + 1);
    Rational v = 1;
    for (unsigned j = m; j <= n; ++j)
      v *= s - j;
    for (unsigned kk : support)
      if (kk != k)
        v /= Rational(static_cast<long>(kk) - static_cast<long>(k));
    return v;
  };
  const Rational scale = 1 / residue(0);
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k : support)
    c[k] = residue(k) * scale;
  c[0] = 1;
  Lemma3Family out{alpha, m, n, Poly1(std::move(c)), Rational(0)};
  out.value = detail::moment(out.poly, alpha);
  return out;
}

/// Certified sup over [0,1] of |poly|.
inline Enclosure lemma3_sup(const Lemma3Family& f, const NormRequest& req = {}) {
  return sup_norm_adaptive(f.poly, Interval{Rational(0), Rational(1)}, req);
}

// ---------------------------------------------------------------------------
// Lemma 1 and the radial reduction

/// (integral over [0,1] of t^alpha |f|^p) n^(2+2 alpha) / |f(0)|^p.
inline Enclosure lemma1_lower(const Rational& alpha, const Rational& p, unsigned n, const Poly1& f,
                              const NormRequest& req = {}) {
  if (alpha <= -1 || p < 1)
    throw DomainError("lemma1 needs alpha > -1 and p >= 1");
  if (n == 0 || f.degree() > static_cast<long>(n))
    throw DomainError("lemma1 needs deg f <= n and n >= 1");
  const Rational f0 = abs(f[0]);
  if (sgn(f0) == 0)
    throw DegenerateError("lemma1 ratio is undefined when f(0) = 0");
  const Enclosure integral = weighted_lp_integral(f, {Rational(0), Rational(1), alpha, p}, req).value;
  const Enclosure growth = power_enclosure(Rational(n), 2 + 2 * alpha, req.precision_bits);
  const Enclosure denom = power_enclosure(f0, p, req.precision_bits);
  const Enclosure num = integral * growth;
  return {num.lo / denom.hi, num.hi / denom.lo};
}

/// Surface area of the unit sphere in R^d, 2 pi^(d/2) / Gamma(d/2) = coeff * pi^pi_power.
struct SphereArea {
  Rational coeff;
  unsigned pi_power = 0;

  Enclosure value(mpfr_prec_t bits = 128) const {
    if (pi_power == 0)
      return Enclosure(coeff);
    const Rational pi = BigFloat::pi(bits).to_rational();
    const Rational slack = Rational(1) / Rational(mpz_class(1) << static_cast<unsigned long>(bits - 4));
    return pow(Enclosure(pi - slack, pi + slack), pi_power) * coeff;
  }
};

inline SphereArea sphere_area(unsigned d) {
  if (d == 0)
    throw DomainError("sphere_area needs d >= 1");
  const unsigned k = d / 2;
  Integer fact = 1;
  if (d % 2 == 0) {
    for (unsigned i = 2; i < k; ++i)
      fact *= i;
    return {Rational(2) / Rational(fact), k};
  }
  // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
  Integer kf = 1, k2f = 1;
  for (unsigned i = 2; i <= k; ++i)
    kf *= i;
  for (unsigned i = 2; i <= 2 * k; ++i)
    k2f *= i;
  return {Rational(pow(Rational(2), 2 * k + 1) * Rational(kf)) / Rational(k2f), k};
}

struct BallError {
  /// Integral of |lambda - Q(|x|^2)|^p over the ball.
  Enclosure integral;
  /// Its p-th root.
  Enclosure norm;
  bool certified = true;
};

/// L_p error of the radial polynomial Q(|x|^2) on the ball, via (sigma/2) int_0^{r^2} u^(d/2-1) |lambda - Q|^p du.
inline BallError radial_lp_error(const Rational& lambda, const Poly1& q, const Rational& r, unsigned d,
                                 const Rational& p, const NormRequest& req = {}) {
  if (sgn(r) <= 0 || d == 0 || p < 1)
    throw DomainError("radial_lp_error needs r > 0, d >= 1 and p >= 1");
  const Poly1 diff = Poly1::constant(lambda) - q;
  const WeightedInterval w{Rational(0), r * r, ratio(static_cast<long>(d), 2) - 1, p};
  const LpIntegral in = weighted_lp_integral(diff, w, req);
  const Enclosure integral = in.value * sphere_area(d).value(req.precision_bits) * Rational(1, 2);
  return {integral, root_enclosure(integral, p, req.precision_bits), in.certified};
}

// ---------------------------------------------------------------------------
// Unit polynomials and the binomial redistribution

/// Monic integer X with 0 <= X <= rho < 1 on E = [0, c], vanishing at the integers of E.
struct UnitPolynomial {
  Poly1 x;
  /// Certified enclosure of sup_E X; rho.hi < 1.
  Enclosure rho;
  Rational c;
  unsigned degree() const { return static_cast<unsigned>(x.degree()); }
};

namespace detail {

/// +1 or -1 when f keeps that sign on [0, c] away from its roots, 0 when it changes sign.
inline int constant_sign(const Poly1& f, const Rational& c) {
  const auto roots = isolate_real_roots(f, Rational(0), c, c / Rational(mpz_class(1) << 40));
  std::vector<Rational> probes;
  Rational prev(0);
  for (const auto& r : roots) {
    if (prev < r.lo)
      probes.push_back((prev + r.lo) / 2);
    prev = r.hi;
  }
  if (prev < c)
    probes.push_back((prev + c) / 2);
  int sign = 0;
  for (const auto& t : probes) {
    const int s = sgn(f(t));
    if (s == 0 || (sign != 0 && s != sign))
      return 0;
    sign = s;
  }
  return sign;
}

} // namespace detail

/// Searches monic integer squares X = P^2 with sup_E |P| < 1.
///
/// With `allow_signed`, a P of constant sign on E is used directly as X = +-P
/// (then X may have leading coefficient -1), which halves the degree.
/// P must vanish at every integer of [0, c], so P = base * R with
/// base = prod (t - g) and R monic integer. Candidates are tried by
/// increasing degree of R with |coefficients of R| <= coeff_bound; the
/// first degree that yields any admissible P wins, and within it the
/// smallest certified sup.
inline UnitPolynomial find_unit_X(const Rational& c, unsigned max_degree = 8, unsigned coeff_bound = 3,
                                  const NormRequest& req = {}, bool allow_signed = false) {
  if (sgn(c) <= 0)
    throw DomainError("find_unit_X needs c > 0");
  if (c >= 4)
    throw NonexistenceError("[0, c] with c >= 4 has transfinite diameter >= 1; no monic integer X is below 1");
  const Interval e{Rational(0), c};
  Poly1 base = Poly1::constant(Rational(1));
  for (Integer g = 0; g <= c; ++g)
    base *= Poly1(std::vector<Rational>{Rational(-g), Rational(1)});
  const unsigned base_deg = static_cast<unsigned>(base.degree());
  // cheap exact screen: |P| < 1 at a few points of E
  std::vector<Rational> probes;
  for (int k = 1; k < 16; ++k)
    probes.push_back(c * ratio(k, 16));
  for (unsigned extra = 0; base_deg + extra <= max_degree; ++extra) {
    std::optional<UnitPolynomial> best;
    std::vector<long> r(extra, -static_cast<long>(coeff_bound));
    for (;;) {
      std::vector<Rational> rc(r.begin(), r.end());
      rc.push_back(Rational(1));
      const Poly1 cand = base * Poly1(rc);
      const bool screened =
          std::all_of(probes.begin(), probes.end(), [&](const Rational& t) { return abs(cand(t)) < 1; });
      if (screened) {
        const Enclosure s = sup_norm_adaptive(cand, e, req);
        const int sign = allow_signed ? detail::constant_sign(cand, c) : 0;
        if (sign != 0 && s.hi < 1 && (!best || s.hi < best->rho.hi))
          best = UnitPolynomial{cand * Rational(sign), s, c};
        else if (sign == 0 && s.hi < 1 && (!best || s.hi * s.hi < best->rho.hi))
          best = UnitPolynomial{cand * cand, Enclosure(s.lo * s.lo, s.hi * s.hi), c};
      }
      std::size_t j = 0;
      while (j < r.size() && r[j] == static_cast<long>(coeff_bound))
        r[j++] = -static_cast<long>(coeff_bound);
      if (j == r.size())
        break;
      ++r[j];
    }
    if (best)
      return *best;
  }
  throw NotFoundError("no monic integer unit polynomial found within the search bounds");
}

struct Lemma2Result {
  /// Integer polynomial sum q_{2,s} X^s (1-X)^(N-s).
  Poly1 q;
  /// Real mixture coefficients p_{2,s}, s = m..N, before rounding.
  std::vector<Poly1> mixture;
  std::vector<Poly1> rounded;
  /// The unrounded mixture reproduces f exactly.
  bool identity_holds = false;
  /// m rho^(N-m+1) + N^(-m), evaluated at rho.hi.
  Rational envelope;
  unsigned m = 0;
  unsigned n_blocks = 0;
};

/// X-adic digits of f: f = sum d_k X^k with deg d_k < deg X.
inline std::vector<Poly1> xadic_digits(Poly1 f, const Poly1& x) {
  std::vector<Poly1> digits;
  while (!f.is_zero()) {
    auto [quot, rem] = f.divmod(x);
    digits.push_back(rem);
    f = quot;
  }
  return digits;
}

namespace detail {

/// sum_{s=m}^N c_s X^s (1-X)^(N-s), collected in powers of X and then summed by Horner.
inline Poly1 mixture_to_poly(const std::vector<Poly1>& c, unsigned m, unsigned n_blocks, const Poly1& x) {
  std::vector<Poly1> g(n_blocks + 1);
  for (unsigned s = m; s <= n_blocks; ++s) {
    const Poly1& cs = c[s - m];
    if (cs.is_zero())
      continue;
    // y^s (1-y)^(N-s) = sum_j (-1)^(j-s) C(N-s, j-s) y^j
    for (unsigned j = s; j <= n_blocks; ++j) {
      Rational b(binomial(n_blocks - s, j - s));
      if ((j - s) % 2)
        b = -b;
      g[j] += cs * b;
    }
  }
  Poly1 acc;
  for (unsigned j = n_blocks + 1; j-- > 0;)
    acc = acc * x + g[j];
  return acc;
}

} // namespace detail

/// Redistributes f = X^m g over the binomial mixture of X^s (1-X)^(N-s) and rounds it.
///
/// With digits d_k of f, p_{2,s} = sum_{k=m}^s d_k C(N-k, s-k), because
/// X^k = X^k (X + 1 - X)^(N-k). Rounding each p_{2,s} coefficient-wise
/// changes f by at most sup |p - round p| times sum X^s (1-X)^(N-s).
inline Lemma2Result lemma2_convert(const Poly1& f, const UnitPolynomial& x, unsigned m, unsigned n_blocks) {
  if (m == 0 || n_blocks < m)
    throw DomainError("lemma2_convert needs N >= m >= 1");
  const Poly1& X = x.x;
  const auto digits = xadic_digits(f, X);
  for (unsigned k = 0; k < m && k < digits.size(); ++k)
    if (!digits[k].is_zero())
      throw ProtocolError("lemma2_convert: f is not divisible by X^m");
  if (digits.size() > n_blocks + 1)
    throw DomainError("lemma2_convert: deg f needs fewer than N + 1 blocks of deg X");
  auto digit = [&](unsigned k) { return k < digits.size() ? digits[k] : Poly1(); };

  Lemma2Result out;
  out.m = m;
  out.n_blocks = n_blocks;
  for (unsigned s = m; s <= n_blocks; ++s) {
    Poly1 p2;
    for (unsigned k = m; k <= s; ++k)
      p2 += digit(k) * Rational(binomial(n_blocks - k, s - k));
    out.mixture.push_back(p2);
    out.rounded.push_back(round_coeffs(p2).rounded);
  }
  const Poly1 check = detail::mixture_to_poly(out.mixture, m, n_blocks, X);
  const Poly1 q = detail::mixture_to_poly(out.rounded, m, n_blocks, X);
  out.identity_holds = check == f;
  if (!out.identity_holds)
    throw Error("lemma2_convert: binomial mixture does not reproduce f");
  out.q = q;
  out.envelope = Rational(m) * pow(x.rho.hi, n_blocks - m + 1) + 1 / pow(Rational(n_blocks), m);
  return out;
}

/// Certified sup over E of |f - q|.
///
/// When every digit is constant the error is a polynomial B(X) in X alone,
/// so its sup over E equals its sup over the range [0, sup X].
inline Enclosure lemma2_sup_error(const Poly1& f, const Lemma2Result& res, const UnitPolynomial& x,
                                  const NormRequest& req = {}) {
  const bool constant_digits = std::all_of(res.mixture.begin(), res.mixture.end(), [](const Poly1& p) {
    return p.degree() <= 0;
  });
  if (!constant_digits)
    return sup_norm_adaptive(f - res.q, Interval{Rational(0), x.c}, req);
  // B(y) = sum (p_{2,s} - q_{2,s}) y^s (1-y)^(N-s)
  const Poly1 y = Poly1::x();
  const Poly1 one_minus = Poly1::constant(Rational(1)) - y;
  Poly1 b;
  for (unsigned s = res.m; s <= res.n_blocks; ++s) {
    const std::size_t i = s - res.m;
    b += (res.mixture[i] - res.rounded[i]) * y.pow(s) * one_minus.pow(res.n_blocks - s);
  }
  if (b.is_zero())
    return Enclosure(Rational(0));
  const Enclosure hi = sup_norm_adaptive(b, Interval{Rational(0), x.rho.hi}, req);
  if (sgn(x.rho.lo) == 0)
    return {Rational(0), hi.hi};
  const Enclosure lo = sup_norm_adaptive(b, Interval{Rational(0), x.rho.lo}, req);
  return {lo.lo, hi.hi};
}

// ---------------------------------------------------------------------------
// The ball: construction for r <= 1 and lower bounds

struct BallConstruction {
  /// Integer polynomial in u = |x|^2.
  Poly1 q;
  BallError error;
  /// True when the best integer constant beat the construction (or the degree was too small for it).
  bool fallback = false;
  UnitPolynomial x;
  /// Vanishing order M at the forced zeros and the block count N handed to the redistribution.
  unsigned order = 0;
  unsigned blocks = 0;
  /// Degrees of the extremal factors at u = 0 and (when r = 1) at u = 1.
  unsigned k0 = 0;
  unsigned k1 = 0;
  /// error.norm * n^(d/p): the observed constant C in E_n <= C n^(-d/p).
  Enclosure scaled;
};

/// Integer Q(|x|^2) of degree <= n in x with small L_p error on the ball of radius r <= 1.
///
/// With E = [0, r^2] and X = u (or X = u - u^2 when r = 1), the target
/// f = lambda (1 - L0(u / r^2)^e) [(1 - L1(1 - u)^e)] vanishes to order M = ceil(d/p)
/// at the forced zeros; L0, L1 are extremal polynomials of the weighted
/// L2 problem (weight u^(d/2-1), resp. 1), and e = 2 for p < 2 so that
/// an L2 estimate controls the L_p one. The redistribution then rounds f to
/// an integer polynomial at a cost of order N^(-M) in sup norm.
inline BallConstruction ball_construct(const BallProblem& prob, unsigned n, const NormRequest& req = {}) {
  prob.validate();
  const Rational c = prob.r * prob.r;
  if (c >= 4)
    throw NonexistenceError("r >= 2: the ball error is bounded below independently of n");
  if (prob.r > 1)
    throw UnsupportedError("ball construction supports r <= 1 only (a single forced zero at u = 0)");
  const Rational alpha = prob.alpha();
  const bool two_zeros = c == 1;

  BallConstruction out;
  out.x = find_unit_X(c, 4, 1, req, true);
  const unsigned l = out.x.degree();
  const unsigned deg_u = n / 2;
  out.order = static_cast<unsigned>(ceil_of(Rational(static_cast<long>(prob.dim)) / prob.p).get_ui());
  const unsigned e = prob.p >= 2 ? 1 : 2;
  out.blocks = deg_u + 1 >= l ? (deg_u + 1 - l) / l : 0;
  const unsigned budget = (l * (out.blocks + 1) - 1) / e;
  out.k0 = two_zeros ? (budget + 1) / 2 : budget;
  out.k1 = two_zeros ? budget / 2 : 0;

  const Poly1 best_const = Poly1::constant(Rational(round_nearest(prob.lambda)));
  const BallError const_err = radial_lp_error(prob.lambda, best_const, prob.r, prob.dim, prob.p, req);
  const unsigned mo = out.order;
  const bool feasible = out.blocks >= mo && out.k0 >= mo && (!two_zeros || out.k1 >= mo);
  if (feasible) {
    const Poly1 one = Poly1::constant(Rational(1));
    const Poly1 l0 = lemma3_poly_closed(alpha, mo, out.k0).poly.affine(Rational(0), 1 / c);
    Poly1 f = (one - l0.pow(e)) * prob.lambda;
    if (two_zeros) {
      const Poly1 l1 = lemma3_poly_closed(Rational(0), mo, out.k1).poly.affine(Rational(1), Rational(-1));
      f *= one - l1.pow(e);
    }
    out.q = lemma2_convert(f, out.x, mo, out.blocks).q;
    out.error = radial_lp_error(prob.lambda, out.q, prob.r, prob.dim, prob.p, req);
  }
  if (!feasible || const_err.norm.hi < out.error.norm.lo) {
    out.q = best_const;
    out.error = const_err;
    out.fallback = true;
  }
  const Rational nn(static_cast<long>(std::max(n, 1u)));
  out.scaled = out.error.norm * power_enclosure(nn, Rational(static_cast<long>(prob.dim)) / prob.p, req.precision_bits);
  return out;
}

/// Explicit lower bound for the L_p error of any integer polynomial of degree <= n on the ball.
///
/// Averaging over spheres, (E_n)^p >= (sigma/2) int_0^{r^2} u^alpha |g(u)|^p du with
/// g(0) = lambda - integer. For integer p, |g|^p is a polynomial of degree
/// mu <= p floor(n/2), and integrating it from 0 gives
/// int_0^1 t^alpha |h| >= |h(0)| / ((alpha+1) |C_mu(0; 1/mu^2, 1)| mu^(2 alpha + 2)).
/// A fractional p goes through the integer part and Hoelder, which loses rate.
inline Enclosure ball_lower(const BallProblem& prob, unsigned n, const NormRequest& req = {}) {
  prob.validate();
  const Rational dist = dist_to_integers(prob.lambda);
  if (sgn(dist) == 0)
    return Enclosure(Rational(0));
  const Rational alpha = prob.alpha();
  const Integer kz = floor_of(prob.p);
  const unsigned k = static_cast<unsigned>(kz.get_ui());
  const unsigned mu = std::max(k * (n / 2), 2u);
  const Rational delta = Rational(1) / Rational(static_cast<long>(mu) * mu);
  const Rational growth = abs(cheb(mu, delta, Rational(1))[0]);
  const Rational base = pow(dist, k) / ((alpha + 1) * growth * pow(Rational(static_cast<long>(mu)), prob.dim));
  Enclosure inner(base);
  if (prob.p != Rational(kz)) {
    const Rational ratio = prob.p / Rational(kz);
    inner = power_enclosure(base, ratio, req.precision_bits) *
            power_enclosure(alpha + 1, ratio - 1, req.precision_bits).lo;
  }
  const Enclosure sigma = sphere_area(prob.dim).value(req.precision_bits);
  const Enclosure pth = inner * (sigma * (pow(prob.r, prob.dim) / 2));
  return root_enclosure(pth, prob.p, req.precision_bits);
}

/// Korkin-Zolotarev: the integral over [a, b] of |P| is at least 4 ((b - a)/4)^(deg + 1) |leading coefficient|.
inline Rational kz_l1_bound(const Rational& a, const Rational& b, unsigned degree, const Rational& lead) {
  return 4 * pow((b - a) / 4, degree + 1) * abs(lead);
}

struct KzObstruction {
  /// n-independent lower bound on the L_p error; value.lo is the certified figure.
  Enclosure value;
  /// For d >= 2 the bound is proved for radial polynomials Q(|x|^2) only.
  bool radial_only = false;
};

/// Lower bound on the L_p error on balls with r >= 2, valid for every degree.
///
/// d = 1: the even part of an integer polynomial is integer, and on [-2, 2]
/// lambda - Q(t^2) is either a constant at least dist(lambda, Z) or has a nonzero
/// integer leading coefficient, so its L1 norm is >= 4 dist; Hoelder gives 4^(1/p) dist.
/// d >= 2: on [0, 4], u^m (lambda - Q(u)) with m = ceil(alpha/p) has L1 norm >= K0, and
/// Hoelder against u^(m - alpha/p) converts it into the weighted L_p norm.
inline KzObstruction korkin_zolotarev_obstruction(const Rational& lambda, const Rational& r, unsigned d,
                                                  const Rational& p, const NormRequest& req = {}) {
  if (r < 2)
    throw DomainError("the obstruction needs r >= 2");
  if (d == 0 || p < 1)
    throw DomainError("the obstruction needs d >= 1 and p >= 1");
  const Rational dist = dist_to_integers(lambda);
  const mpfr_prec_t bits = req.precision_bits;
  if (d == 1)
    return {power_enclosure(Rational(4), 1 / p, bits) * dist, false};
  const Rational alpha = ratio(static_cast<long>(d), 2) - 1;
  const Integer mz = ceil_of(alpha / p);
  const unsigned m = static_cast<unsigned>(mz.get_ui());
  const Rational beta = Rational(mz) - alpha / p;
  const Rational k0 = std::min<Rational>(Rational(4), dist * pow(Rational(4), m + 1) / (m + 1));
  // (int_0^4 u^(beta p'))^(1/p'), or sup u^beta = 4^beta when p = 1
  Enclosure hold;
  if (p == 1) {
    hold = power_enclosure(Rational(4), beta, bits);
  } else {
    const Rational pc = p / (p - 1);
    const Rational ex = beta * pc + 1;
    const Enclosure j = power_enclosure(Rational(4), ex, bits) * (1 / ex);
    hold = {power_enclosure(j.lo, 1 / pc, bits).lo, power_enclosure(j.hi, 1 / pc, bits).hi};
  }
  const Enclosure sigma = sphere_area(d).value(bits);
  const Enclosure s_root = {power_enclosure(sigma.lo / 2, 1 / p, bits).lo, power_enclosure(sigma.hi / 2, 1 / p, bits).hi};
  const Enclosure num = s_root * k0;
  return {{num.lo / hold.hi, num.hi / hold.lo}, true};
}

} // namespace intcheb

#endif // INTCHEB_BALL_HPP
