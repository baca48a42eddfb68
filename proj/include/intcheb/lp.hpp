#ifndef INTCHEB_LP_HPP
#define INTCHEB_LP_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "intcheb/bigfloat.hpp"
#include "intcheb/domain.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/roots.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Value of the weighted integral together with how it was obtained.
struct LpIntegral {
  Enclosure value;
  /// False when the enclosure rests on a quadrature error estimate.
  bool certified = true;
};

namespace detail {

/// Bound on max |g| over [lo, hi] from the absolute coefficient sum.
inline Rational coeff_bound(const Poly1& g, const Rational& lo, const Rational& hi) {
  Rational r = std::max<Rational>(abs(lo), abs(hi));
  Rational acc = 0, pw = 1;
  for (const auto& c : g.coeffs()) {
    acc += abs(c) * pw;
    pw *= r;
  }
  return acc;
}

/// Enclosure of the integral of |g| over [a, b] for a rational polynomial g.
inline Enclosure abs_integral(const Poly1& g, const Rational& a, const Rational& b, const Rational& rel_tol) {
  if (g.degree() < 0)
    return Enclosure(Rational(0));
  Poly1 h = g.antiderivative();
  Rational eps = (b - a) / Rational(mpz_class(1) << 64);
  for (int attempt = 0; attempt < 6; ++attempt, eps /= Rational(mpz_class(1) << 32)) {
    auto roots = isolate_real_roots(g, a, b, eps);
    bool touching = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      if (!(roots[i].hi < roots[i + 1].lo))
        touching = true;
    if (touching)
      continue;
    // breakpoints a, r_1, ..., r_k, b; piece i runs between breakpoints i and i+1
    std::vector<Rational> lo_pts{a}, hi_pts{a};
    for (const auto& r : roots) {
      lo_pts.push_back(r.lo);
      hi_pts.push_back(r.hi);
    }
    lo_pts.push_back(b);
    hi_pts.push_back(b);
    Rational value = 0, slack = 0;
    const std::size_t pieces = lo_pts.size() - 1;
    for (std::size_t i = 0; i < pieces; ++i) {
      Rational probe = (hi_pts[i] + lo_pts[i + 1]) / 2;
      int s = sgn(g(probe));
      if (s == 0)
        continue; // cannot happen for disjoint brackets, but keep the sum honest
      value += Rational(s) * (h(lo_pts[i + 1]) - h(lo_pts[i]));
    }
    for (std::size_t i = 1; i < pieces; ++i)
      if (lo_pts[i] != hi_pts[i])
        slack += 2 * (hi_pts[i] - lo_pts[i]) * coeff_bound(g, lo_pts[i], hi_pts[i]);
    Rational lo = std::max<Rational>(Rational(0), value - slack), hi = value + slack;
    if (slack == 0 || hi - lo <= rel_tol * lo / 4 || attempt == 5)
      return {lo, hi};
  }
  throw PrecisionError("could not separate the roots of the integrand");
}

/// t^alpha (|f(t)|)^p at a long double point, f evaluated in extended precision.
struct LpIntegrand {
  std::vector<BigFloat> coeffs;
  long double alpha;
  long double p;

  long double poly(long double t) const {
    const mpfr_prec_t bits = coeffs.front().bits();
    BigFloat x(static_cast<double>(0), bits);
    mpfr_set_ld(x.get(), t, MPFR_RNDN);
    BigFloat acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;)
      acc = acc * x + coeffs[k];
    return mpfr_get_ld(acc.get(), MPFR_RNDN);
  }
};

} // namespace detail

/// The p-th root of a nonnegative enclosure, widened outward by a few ulps.
inline Enclosure root_enclosure(const Enclosure& e, const Rational& p, mpfr_prec_t bits = 128) {
  if (p == 1)
    return e;
  if (p == 2) {
    Enclosure lo = sqrt_enclosure(e.lo, static_cast<unsigned>(bits)), hi = sqrt_enclosure(e.hi, static_cast<unsigned>(bits));
    return {lo.lo, hi.hi};
  }
  const BigFloat inv = BigFloat(1L, bits) / BigFloat(p, bits);
  const BigFloat u = BigFloat::epsilon(bits) * BigFloat(16L, bits);
  auto root = [&](const Rational& x) { return sgn(x) == 0 ? BigFloat(bits) : pow(BigFloat(x, bits), inv); };
  BigFloat lo = root(e.lo) * (BigFloat(1L, bits) - u);
  BigFloat hi = root(e.hi) * (BigFloat(1L, bits) + u);
  return {lo.to_rational(), hi.to_rational()};
}

/// base^e for base >= 0, exact when e is an integer and via a square root when 2e is.
inline Enclosure power_enclosure(const Rational& base, const Rational& e, mpfr_prec_t bits = 128) {
  if (sgn(base) < 0)
    throw DomainError("power_enclosure expects a nonnegative base");
  if (sgn(base) == 0)
    return Enclosure(Rational(sgn(e) == 0 ? 1 : 0));
  auto int_pow = [](const Rational& b, const Integer& k) {
    return sgn(k) >= 0 ? pow(b, k.get_ui()) : pow(1 / b, Integer(-k).get_ui());
  };
  if (is_integer(e))
    return Enclosure(int_pow(base, e.get_num()));
  if (is_integer(2 * e)) {
    const Integer k = floor_of(e);
    const Enclosure s = sqrt_enclosure(base, static_cast<unsigned>(bits));
    return s * int_pow(base, k);
  }
  const BigFloat v = pow(BigFloat(base, bits), BigFloat(e, bits));
  const BigFloat u = BigFloat::epsilon(bits) * BigFloat(16L, bits);
  return {(v * (BigFloat(1L, bits) - u)).to_rational(), (v * (BigFloat(1L, bits) + u)).to_rational()};
}

/// True when the integral of t^alpha |f|^p over the interval is evaluated in exact arithmetic.
inline bool lp_exact_path(const WeightedInterval& w) {
  if (!is_integer(w.p))
    return false;
  if (is_integer(w.alpha))
    return true;
  Rational ra, rb;
  return is_integer(2 * w.alpha) && sgn(w.a) >= 0 && exact_sqrt(w.a, ra) && exact_sqrt(w.b, rb);
}

/// Integral of t^alpha |f(t)|^p over [a, b] by adaptive Gauss-Kronrod quadrature.
///
/// The interval is split at the real roots of f, and a zero endpoint is
/// handled by the substitution t = s^(1/(alpha+1)), which removes the weight
/// singularity. The enclosure is the quadrature estimate widened by its own
/// error estimate, so it is not a proof.
inline LpIntegral weighted_lp_quadrature(const Poly1& f, const WeightedInterval& w, const NormRequest& req = {}) {
  if (!(w.a < w.b))
    throw DomainError("weighted interval requires a < b");
  if (w.alpha <= -1 || w.p < 1)
    throw DomainError("weighted L_p needs alpha > -1 and p >= 1");
  if (!is_integer(w.alpha) && sgn(w.a) < 0)
    throw DomainError("a non-integer weight exponent needs a >= 0");
  if (f.degree() < 0)
    return {Enclosure(Rational(0)), false};

  detail::LpIntegrand in{detail::to_floats(f.coeffs(), req.precision_bits), static_cast<long double>(w.alpha.get_d()),
                         static_cast<long double>(w.p.get_d())};
  std::vector<long double> cuts{static_cast<long double>(w.a.get_d())};
  if (sgn(w.a) < 0 && sgn(w.b) > 0)
    cuts.push_back(0.0L);
  for (const auto& r : isolate_real_roots(f, w.a, w.b, (w.b - w.a) / Rational(mpz_class(1) << 80)))
    cuts.push_back(static_cast<long double>(Rational((r.lo + r.hi) / 2).get_d()));
  cuts.push_back(static_cast<long double>(w.b.get_d()));
  std::sort(cuts.begin(), cuts.end());

  using GK = boost::math::quadrature::gauss_kronrod<long double, 31>;
  const long double tol = static_cast<long double>(req.tolerance.get_d()) / 64;
  long double total = 0, err_total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    long double lo = cuts[i], hi = cuts[i + 1];
    if (!(lo < hi))
      continue;
    long double err = 0, piece = 0;
    if (lo == 0.0L && in.alpha != 0) {
      // t^alpha dt = ds / (alpha + 1) with s = t^(alpha+1)
      long double e = 1 / (in.alpha + 1);
      auto g = [&](long double s) { return std::pow(std::fabs(in.poly(std::pow(s, e))), in.p); };
      piece = GK::integrate(g, 0.0L, std::pow(hi, in.alpha + 1), 30, tol, &err) * e;
      err *= e;
    } else if (hi == 0.0L && in.alpha != 0) {
      // mirror of the above on the negative side; alpha is an integer here
      long double e = 1 / (in.alpha + 1);
      auto g = [&](long double s) { return std::pow(std::fabs(in.poly(-std::pow(s, e))), in.p); };
      piece = GK::integrate(g, 0.0L, std::pow(-lo, in.alpha + 1), 30, tol, &err) * e;
      err *= e;
    } else {
      auto g = [&](long double t) { return std::pow(std::fabs(t), in.alpha) * std::pow(std::fabs(in.poly(t)), in.p); };
      piece = GK::integrate(g, lo, hi, 30, tol, &err);
    }
    total += piece;
    err_total += err;
  }
  err_total += total * 64 * std::numeric_limits<long double>::epsilon();
  auto to_q = [](long double v) {
    BigFloat x(static_cast<double>(0), 80);
    mpfr_set_ld(x.get(), v, MPFR_RNDN);
    return x.to_rational();
  };
  Rational lo = to_q(std::max(0.0L, total - err_total)), hi = to_q(total + err_total);
  return {{lo, hi}, false};
}

/// Integral of t^alpha |f(t)|^p over [a, b].
///
/// Exact whenever p is an integer and alpha is an integer (or a half-integer
/// with square endpoints, via t = s^2); otherwise falls back to quadrature.
inline LpIntegral weighted_lp_integral(const Poly1& f, const WeightedInterval& w, const NormRequest& req = {}) {
  if (!(w.a < w.b))
    throw DomainError("weighted interval requires a < b");
  if (w.alpha <= -1 || w.p < 1)
    throw DomainError("weighted L_p needs alpha > -1 and p >= 1");
  if (!lp_exact_path(w))
    return weighted_lp_quadrature(f, w, req);
  const unsigned long p = w.p.get_num().get_ui();
  if (is_integer(w.alpha)) {
    if (sgn(w.alpha) < 0)
      throw DomainError("an integer weight exponent must be nonnegative");
    Poly1 g = f.pow(static_cast<unsigned>(p)) * Poly1::monomial(Rational(1), w.alpha.get_num().get_ui());
    return {detail::abs_integral(g, w.a, w.b, req.tolerance), true};
  }
  // t = s^2: t^alpha |f(t)|^p dt = 2 s^(2 alpha + 1) |f(s^2)|^p ds
  Rational sa, sb;
  exact_sqrt(w.a, sa);
  exact_sqrt(w.b, sb);
  Rational e = 2 * w.alpha + 1;
  Poly1 fs = f.compose(Poly1::monomial(Rational(1), 2));
  Poly1 g = fs.pow(static_cast<unsigned>(p)) * Poly1::monomial(Rational(2), e.get_num().get_ui());
  return {detail::abs_integral(g, sa, sb, req.tolerance), true};
}

/// (integral of t^alpha |f|^p over [a, b])^(1/p).
inline Enclosure weighted_lp_norm(const Poly1& f, const WeightedInterval& w, const NormRequest& req = {}) {
  return root_enclosure(weighted_lp_integral(f, w, req).value, w.p, req.precision_bits);
}

} // namespace intcheb

#endif // INTCHEB_LP_HPP
