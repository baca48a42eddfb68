#ifndef INTCHEB_ORACLE_HPP
#define INTCHEB_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intcheb/ball.hpp"
#include "intcheb/domain.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/linalg.hpp"
#include "intcheb/lp.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

enum class CoeffRing { Integer, Gaussian };

/// Integer bounds on each coefficient; Gaussian boxes list real parts, then imaginary parts.
struct SearchBox {
  std::vector<Integer> lo;
  std::vector<Integer> hi;
  unsigned n = 0;
  CoeffRing ring = CoeffRing::Integer;
  /// How each bound was derived.
  std::vector<std::string> log;

  bool contains(const std::vector<Integer>& c) const {
    if (c.size() != lo.size())
      return false;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] < lo[k] || c[k] > hi[k])
        return false;
    return true;
  }
  bool empty() const {
    for (std::size_t k = 0; k < lo.size(); ++k)
      if (lo[k] > hi[k])
        return true;
    return false;
  }
  /// Number of integer points, saturating at 2^62.
  double volume() const {
    double v = 1;
    for (std::size_t k = 0; k < lo.size(); ++k)
      v *= std::max(0.0, Integer(hi[k] - lo[k] + 1).get_d());
    return v;
  }
};

struct OracleOptions {
  CoeffRing ring = CoeffRing::Integer;
  /// Exponent for ball domains (weighted intervals carry their own).
  Rational p{1};
  /// Known upper bound on the optimum in the norm being minimized; the best constant is always tried.
  std::optional<Rational> upper;
  unsigned cap_sup = 6;
  unsigned cap_lp = 5;
  unsigned cap_gaussian = 4;
  /// Sup search: past this many nodes the walk may stop once the lattice lower bound is attained.
  std::size_t node_budget = 20'000'000;
  /// Sup search: hard limit on visited nodes.
  std::size_t node_cap = 2'000'000'000;
  NormRequest req;
};

struct OracleResult {
  /// Optimal coefficients: real parts, then imaginary parts for the Gaussian ring.
  std::vector<Integer> coeffs;
  Poly1 q;
  CPoly qc;
  /// For balls, q is Q(u) in u = |x|^2.
  bool radial = false;
  Enclosure value;
  std::size_t nodes = 0;
  std::size_t certified = 0;
  /// False when the sup search stopped early at a candidate attaining the lattice lower bound;
  /// the value is still certified, the tie-break then only covers the candidates seen.
  bool exhaustive = true;
  /// max over rational points u/v of the domain of dist(lambda, v^-n Z), a bound for every integer q.
  Rational lattice_lower;
  SearchBox box;
};

namespace detail {

inline Rational to_q(double v) { return Rational(v); }

/// ceil(1.5 (n + 2)) Chebyshev-distributed points of [a, b], exact doubles inside the interval.
inline std::vector<double> interval_witnesses(const Rational& a, const Rational& b, unsigned n) {
  const unsigned k = (3 * (n + 2) + 1) / 2;
  std::vector<double> out;
  auto add = [&](double x) {
    const double mid = Rational((a + b) / 2).get_d();
    for (int guard = 0; guard < 64 && !(Rational(x) >= a && Rational(x) <= b); ++guard)
      x = std::nextafter(x, mid);
    if (Rational(x) >= a && Rational(x) <= b)
      out.push_back(x);
  };
  add(a.get_d());
  add(b.get_d());
  const double pi = 3.14159265358979323846;
  for (unsigned i = 0; i < k; ++i)
    add(Rational(a + (b - a) * to_q(0.5 * (1 - std::cos(pi * (i + 0.5) / k)))).get_d());
  return out;
}

/// Points just inside the circle |z - z0| = r, exact doubles checked to lie in the disk.
inline std::vector<std::complex<double>> disk_witnesses(const Gaussian& z0, const Rational& r, unsigned n) {
  const unsigned k = (3 * (n + 2) + 1) / 2;
  std::vector<std::complex<double>> out;
  const double pi = 3.14159265358979323846;
  for (unsigned i = 0; i <= k; ++i) {
    const double theta = i == k ? pi : -pi + 2 * pi * (i + 0.5) / k;
    for (double shrink = 1 - 0x1p-40; shrink > 0.5; shrink -= 0x1p-20) {
      const double x = z0.re.get_d() + shrink * r.get_d() * std::cos(theta);
      const double y = z0.im.get_d() + shrink * r.get_d() * std::sin(theta);
      const Rational dx = Rational(x) - z0.re, dy = Rational(y) - z0.im;
      if (dx * dx + dy * dy <= r * r) {
        out.emplace_back(x, y);
        break;
      }
    }
  }
  return out;
}

/// Gram matrix of 1, x, ..., x^n under the arcsine probability measure on [a, b].
inline RMatrix arcsine_gram(const Rational& a, const Rational& b, unsigned n) {
  const Rational c = (a + b) / 2, h = (b - a) / 2;
  std::vector<Rational> mom(2 * n + 1);
  for (unsigned k = 0; k <= 2 * n; ++k) {
    Rational acc = 0;
    for (unsigned j = 0; j <= k; j += 2)
      acc += Rational(binomial(k, j)) * pow(c, k - j) * pow(h, j) * Rational(binomial(j, j / 2)) / pow(Rational(2), j);
    mom[k] = acc;
  }
  RMatrix g(n + 1, std::vector<Rational>(n + 1));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j)
      g[i][j] = mom[i + j];
  return g;
}

/// Real form of the Gram matrix of z^j under the uniform measure on |z - z0| = r.
inline RMatrix circle_gram(const Gaussian& z0, const Rational& r, unsigned n, bool gaussian) {
  const unsigned d = n + 1;
  std::vector<std::vector<Gaussian>> g(d, std::vector<Gaussian>(d));
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k) {
      Gaussian acc;
      for (unsigned l = 0; l <= std::min(j, k); ++l)
        acc += Gaussian(Rational(binomial(j, l) * binomial(k, l)) * pow(r, 2 * l)) * pow(z0, j - l) *
               pow(z0.conj(), k - l);
      g[j][k] = acc;
    }
  if (!gaussian) {
    RMatrix out(d, std::vector<Rational>(d));
    for (unsigned j = 0; j < d; ++j)
      for (unsigned k = 0; k < d; ++k)
        out[j][k] = g[j][k].re;
    return out;
  }
  // (u + iv): u^T A u + v^T A v + 2 u^T B v with G = A + iB
  RMatrix out(2 * d, std::vector<Rational>(2 * d));
  for (unsigned j = 0; j < d; ++j)
    for (unsigned k = 0; k < d; ++k) {
      out[j][k] = g[j][k].re;
      out[d + j][d + k] = g[j][k].re;
      out[j][d + k] = g[j][k].im;
      out[d + j][k] = -g[j][k].im;
    }
  return out;
}

inline Integer ceil_q(const Rational& x) { return ceil_of(x); }
inline Integer floor_q(const Rational& x) { return floor_of(x); }

} // namespace detail

/// Coefficient bounds for every integer q of degree <= n with sup |lambda - q| <= B on an interval.
///
/// With nodes x_i in [a, b] and V the node Vandermonde matrix,
/// q_k = sum_i q(x_i) (V^-1)_{ki}, and the interpolant of a constant has no
/// higher coefficients, so |q_k - lambda [k = 0]| <= B sum_i |(V^-1)_{ki}|.
inline SearchBox coeff_box(const Rational& lambda, const Interval& iv, unsigned n, const Rational& bound) {
  if (!(iv.a < iv.b))
    throw DomainError("coeff_box needs a nondegenerate interval");
  if (sgn(bound) < 0)
    throw DomainError("coeff_box needs B >= 0");
  SearchBox box;
  box.n = n;
  std::vector<Rational> nodes;
  const double pi = 3.14159265358979323846;
  for (unsigned i = 0; i <= n; ++i) {
    const double c = n == 0 ? 0.0 : std::cos(pi * (2.0 * i + 1) / (2.0 * (n + 1)));
    nodes.push_back(std::clamp(Rational(iv.a + (iv.b - iv.a) * detail::to_q(0.5 * (1 - c))), iv.a, iv.b));
  }
  RMatrix v(n + 1, std::vector<Rational>(n + 1));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned k = 0; k <= n; ++k)
      v[i][k] = pow(nodes[i], k);
  const RMatrix inv = inverse_exact(v);
  for (unsigned k = 0; k <= n; ++k) {
    Rational leb = 0;
    for (unsigned i = 0; i <= n; ++i)
      leb += abs(inv[k][i]);
    const Rational centre = k == 0 ? lambda : Rational(0);
    box.lo.push_back(detail::ceil_q(centre - bound * leb));
    box.hi.push_back(detail::floor_q(centre + bound * leb));
    box.log.push_back("c" + std::to_string(k) + ": Lagrange at " + std::to_string(n + 1) +
                      " Chebyshev nodes, Lambda_k = " + leb.get_str());
  }
  return box;
}

/// Cauchy estimates on the circle: |q_j - lambda [j = 0]| <= B sum_k C(k, j) |z0|^(k-j) / r^k.
inline SearchBox coeff_box(const Rational& lambda, const Disk& disk, unsigned n, const Rational& bound,
                           CoeffRing ring = CoeffRing::Integer) {
  if (sgn(disk.radius) <= 0)
    throw DomainError("coeff_box needs a positive radius");
  if (sgn(bound) < 0)
    throw DomainError("coeff_box needs B >= 0");
  SearchBox box;
  box.n = n;
  box.ring = ring;
  const Rational az = modulus(disk.center).hi;
  std::vector<Rational> rad(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    Rational acc = 0;
    for (unsigned k = j; k <= n; ++k)
      acc += Rational(binomial(k, j)) * pow(az, k - j) / pow(disk.radius, k);
    rad[j] = bound * acc;
  }
  const unsigned parts = ring == CoeffRing::Gaussian ? 2 : 1;
  for (unsigned part = 0; part < parts; ++part)
    for (unsigned j = 0; j <= n; ++j) {
      const Rational centre = (j == 0 && part == 0) ? lambda : Rational(0);
      box.lo.push_back(detail::ceil_q(centre - rad[j]));
      box.hi.push_back(detail::floor_q(centre + rad[j]));
      box.log.push_back(std::string(part ? "Im c" : "c") + std::to_string(j) +
                        ": Cauchy estimate on the boundary circle, radius " + rad[j].get_str());
    }
  return box;
}

namespace detail {

/// LLL reduction of the integer lattice under the form G; the columns of the result are the new basis.
inline RMatrix lll_reduce(const RMatrix& g, const Rational& delta = Rational(99, 100)) {
  const std::size_t n = g.size();
  RMatrix u(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    u[i][i] = 1;
  RMatrix mu(n, std::vector<Rational>(n));
  std::vector<Rational> bn(n);
  auto orthogonalize = [&]() {
    RMatrix h(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        Rational acc = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (sgn(u[r][i]) == 0)
            continue;
          for (std::size_t c = 0; c < n; ++c)
            acc += u[r][i] * g[r][c] * u[c][j];
        }
        h[i][j] = h[j][i] = acc;
      }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational v = h[i][j];
        for (std::size_t l = 0; l < j; ++l)
          v -= mu[j][l] * mu[i][l] * bn[l];
        mu[i][j] = v / bn[j];
      }
      bn[i] = h[i][i];
      for (std::size_t l = 0; l < i; ++l)
        bn[i] -= mu[i][l] * mu[i][l] * bn[l];
    }
  };
  orthogonalize();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const Rational r(round_nearest(mu[k][j]));
      if (sgn(r) == 0)
        continue;
      for (std::size_t row = 0; row < n; ++row)
        u[row][k] -= r * u[row][j];
      for (std::size_t l = 0; l < j; ++l)
        mu[k][l] -= r * mu[j][l];
      mu[k][j] -= r;
    }
    if (bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
      continue;
    }
    for (std::size_t row = 0; row < n; ++row)
      std::swap(u[row][k], u[row][k - 1]);
    orthogonalize();
    k = std::max<std::size_t>(k - 1, 1);
  }
  return u;
}

/// Visits every integer a in the box with (a - centre)^T G (a - centre) <= radius2.
///
/// Fincke-Pohst: with G = L D L^T the form is sum_j d_j (y_j + sum_{i>j} L_ij y_i)^2,
/// so the coordinates are fixed from the last one down, each within an interval.
/// The factor is exact; the walk runs in long double over a slightly inflated radius,
/// so it visits a superset of the ellipsoid.
inline std::size_t fincke_pohst(const RMatrix& g0, const std::vector<Rational>& centre0, const Rational& radius2,
                                const SearchBox& box, const std::function<bool(const std::vector<long long>&, std::size_t)>& visit,
                                std::size_t node_cap = static_cast<std::size_t>(-1)) {
  using ld = long double;
  const std::size_t dim = g0.size();
  // enumerate x with a = U x in an LLL-reduced basis
  const RMatrix um = lll_reduce(g0);
  const RMatrix uinv = inverse_exact(um);
  RMatrix g(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          g[i][j] += um[r][i] * g0[r][c] * um[c][j];
  std::vector<Rational> centre(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      centre[i] += uinv[i][j] * centre0[j];
  std::vector<std::vector<long long>> um_ll(dim, std::vector<long long>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      um_ll[i][j] = um[i][j].get_num().get_si();
  std::vector<long long> coeffs(dim), blo(dim), bhi(dim);
  bool stop = false;
  std::size_t nodes = 0;
  const LdlFactor f = ldl_exact(g);
  std::vector<std::vector<ld>> l(dim, std::vector<ld>(dim));
  std::vector<ld> d(dim), c(dim), y(dim);
  std::vector<long long> lo(dim), hi(dim), a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d[i] = f.d[i].get_d();
    c[i] = centre[i].get_d();
    for (std::size_t j = 0; j < dim; ++j)
      l[i][j] = f.l[i][j].get_d();
    const double cap = 4e18;
    blo[i] = static_cast<long long>(std::max(-cap, box.lo[i].get_d()));
    bhi[i] = static_cast<long long>(std::min(cap, box.hi[i].get_d()));
    lo[i] = -static_cast<long long>(cap);
    hi[i] = static_cast<long long>(cap);
  }
  auto leaf = [&]() {
    for (std::size_t i = 0; i < dim; ++i) {
      long long v = 0;
      for (std::size_t j = 0; j < dim; ++j)
        v += um_ll[i][j] * a[j];
      if (v < blo[i] || v > bhi[i])
        return;
      coeffs[i] = v;
    }
    if (!visit(coeffs, nodes))
      stop = true;
  };
  const ld r2 = static_cast<ld>(radius2.get_d()) * (1 + 1e-6L) + 1e-300L;
  std::function<void(std::size_t, ld)> rec = [&](std::size_t level, ld used) {
    const std::size_t j = level - 1;
    ld t = 0;
    for (std::size_t i = j + 1; i < dim; ++i)
      t += l[i][j] * y[i];
    const ld room = r2 - used;
    if (room < 0)
      return;
    const ld s = std::sqrt(room / d[j]) * (1 + 1e-9L) + 1e-12L;
    const ld mid = c[j] - t;
    const long long from = std::max(lo[j], static_cast<long long>(std::ceil(mid - s)));
    const long long to = std::min(hi[j], static_cast<long long>(std::floor(mid + s)));
    if (from > to)
      return;
    // centre first, then alternating outwards
    const long long start = std::clamp(static_cast<long long>(std::llround(mid)), from, to);
    for (long long step = 0; !stop; ++step) {
      const long long v = step % 2 ? start + (step + 1) / 2 : start - step / 2;
      if (start + (step + 1) / 2 > to && start - step / 2 < from)
        break;
      if (v < from || v > to)
        continue;
      if (++nodes > node_cap)
        throw OracleError("sup search exceeded its node cap");
      a[j] = v;
      y[j] = static_cast<ld>(v) - c[j];
      const ld z = y[j] + t;
      const ld next = used + d[j] * z * z;
      if (next > r2)
        continue;
      if (j == 0)
        leaf();
      else
        rec(j, next);
    }
  };
  if (dim > 0)
    rec(dim, 0);
  return nodes;
}

/// Rigorous lower bound on max |lambda - q| over exact double witness points.
///
/// Horner in double; the rounding error is at most (8n + 16) u (sum |a_k| |x|^k + |lambda|).
template <typename Point>
double witness_bound(double lambda, const std::vector<long long>& a, std::size_t count, bool gaussian,
                     const std::vector<Point>& pts) {
  double best = 0;
  const double u = 0x1p-53;
  for (const auto& x : pts) {
    std::complex<double> v = 0;
    double mag = 0;
    for (std::size_t k = count; k-- > 0;) {
      const std::complex<double> ck(static_cast<double>(a[k]), gaussian ? static_cast<double>(a[count + k]) : 0.0);
      v = v * std::complex<double>(x) + ck;
      mag = mag * std::abs(x) + std::abs(ck);
    }
    const double err = (16.0 * count + 32) * u * (mag + std::fabs(lambda)) + 4 * u * std::fabs(lambda);
    best = std::max(best, std::abs(lambda - v) - err);
  }
  return best;
}

/// max over reduced u/v in [lo, hi] with v <= vmax of dist(lambda v^n, Z) / v^n.
///
/// For gcd(u, v) = 1 the values q(u/v) of integer q of degree <= n fill v^-n Z exactly,
/// so this bounds the error of every integer polynomial from below.
inline Rational lattice_lower(const Rational& lambda, unsigned n, const Rational& lo, const Rational& hi,
                              unsigned vmax = 64) {
  Rational best = 0;
  const Rational top = dist_to_integers(lambda);
  for (unsigned v = 1; v <= vmax && best < top; ++v) {
    const Integer from = ceil_of(lo * v), to = floor_of(hi * v);
    if (to - from > 4096)
      continue;
    const Rational vn = pow(Rational(v), n);
    for (Integer u = from; u <= to; ++u) {
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), u.get_mpz_t(), v);
      if (g != 1)
        continue;
      best = std::max(best, Rational(dist_to_integers(lambda * vn) / vn));
    }
  }
  return best;
}

struct Scored {
  std::vector<Integer> coeffs;
  /// Lower bound on the squared sup error (or on the L_p integral).
  Rational lb;
};

/// Two passes over the candidates.
///
/// First, certify in increasing order of the lower bound until no remaining
/// candidate can beat the incumbent or lower the enclosure: E* lies in
/// [min(certified lo, next lb), min certified hi] = [lo, H].
/// Second, walk the candidates with lb <= H in lexicographic order and return
/// the first whose enclosure reaches H, so the pick depends only on the candidate set.
/// refine(c) is an exact lower bound, cheaper than certification and used to skip candidates.
template <typename Certify, typename Refine, typename Beats>
std::pair<Enclosure, std::vector<Integer>> settle(std::vector<Scored> cand, Certify&& certify, Refine&& refine,
                                                  Beats&& beyond, std::size_t& certified) {
  std::sort(cand.begin(), cand.end(), [](const Scored& x, const Scored& y) {
    if (x.lb != y.lb)
      return x.lb < y.lb;
    return x.coeffs < y.coeffs;
  });
  std::map<std::vector<Integer>, Enclosure> done;
  auto get = [&](const std::vector<Integer>& c) -> const Enclosure& {
    auto it = done.find(c);
    if (it == done.end()) {
      it = done.emplace(c, certify(c)).first;
      ++certified;
    }
    return it->second;
  };
  std::optional<Rational> best_hi, best_lo;
  std::size_t i = 0;
  for (; i < cand.size(); ++i) {
    if (best_hi && (beyond(cand[i].lb, *best_hi) || !beyond(*best_lo, cand[i].lb)))
      break;
    if (best_hi && !beyond(*best_lo, refine(cand[i].coeffs)))
      continue;
    const Enclosure& e = get(cand[i].coeffs);
    if (!best_hi || e.hi < *best_hi)
      best_hi = e.hi;
    if (!best_lo || e.lo < *best_lo)
      best_lo = e.lo;
  }
  if (!best_hi)
    throw OracleError("no candidate inside the certified region; the supplied upper bound is below the optimum");
  Rational lo = *best_lo;
  if (i < cand.size() && cand[i].lb < lo)
    lo = cand[i].lb;
  std::vector<const std::vector<Integer>*> ties;
  for (const auto& c : cand)
    if (!beyond(c.lb, *best_hi))
      ties.push_back(&c.coeffs);
  std::sort(ties.begin(), ties.end(), [](auto x, auto y) { return *x < *y; });
  for (const auto* c : ties)
    if (!beyond(refine(*c), *best_hi) && !beyond(get(*c).lo, *best_hi))
      return {Enclosure(std::min(lo, *best_hi), *best_hi), *c};
  throw OracleError("internal: incumbent lost during tie-break");
}

inline Poly1 real_poly(const std::vector<Integer>& c, std::size_t count) {
  std::vector<Rational> v;
  for (std::size_t k = 0; k < count; ++k)
    v.emplace_back(c[k]);
  return Poly1(std::move(v));
}

inline CPoly gaussian_poly(const std::vector<Integer>& c, std::size_t count) {
  std::vector<Gaussian> v;
  for (std::size_t k = 0; k < count; ++k)
    v.emplace_back(Rational(c[k]), Rational(c[count + k]));
  return CPoly(std::move(v));
}

/// Integral of |t|^alpha t^k over [lo, hi] on the exact path.
inline Rational weight_moment(const Rational& lo, const Rational& hi, const Rational& alpha, unsigned k) {
  const Rational e = alpha + k + 1;
  if (is_integer(alpha)) {
    const unsigned long ai = alpha.get_num().get_ui();
    const unsigned long ei = e.get_num().get_ui();
    auto prim = [&](const Rational& t) {
      // antiderivative of |t|^alpha t^k, continuous through 0
      Rational v = pow(t, ei) / e;
      return (sgn(t) < 0 && ai % 2) ? Rational(-v) : v;
    };
    return prim(hi) - prim(lo);
  }
  Rational sl, sh;
  if (!exact_sqrt(lo, sl) || !exact_sqrt(hi, sh))
    throw UnsupportedError("moments of a half-integer weight need square endpoints");
  const unsigned long odd = Rational(2 * e).get_num().get_ui();
  return (pow(sh, odd) - pow(sl, odd)) / e;
}

/// Piece endpoints: squares for a half-integer weight, and always a break at 0.
inline std::vector<Rational> moment_pieces(const WeightedInterval& w, unsigned count) {
  std::vector<Rational> pts;
  if (!is_integer(w.alpha)) {
    Rational sa, sb;
    exact_sqrt(w.a, sa);
    exact_sqrt(w.b, sb);
    for (unsigned i = 0; i <= count; ++i) {
      const Rational s = sa + (sb - sa) * ratio(i, count);
      pts.push_back(s * s);
    }
    return pts;
  }
  for (unsigned i = 0; i <= count; ++i)
    pts.push_back(w.a + (w.b - w.a) * ratio(i, count));
  if (sgn(w.a) < 0 && sgn(w.b) > 0)
    pts.push_back(Rational(0));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

} // namespace detail

/// Exact best integer (or Gaussian integer) polynomial approximation of lambda in sup norm.
inline OracleResult oracle_best_int(const Rational& lambda, const Domain& domain, unsigned n,
                                    const OracleOptions& opt = {}) {
  OracleResult out;
  const NormRequest& req = opt.req;
  const Rational dist = dist_to_integers(lambda);
  const bool gauss = opt.ring == CoeffRing::Gaussian;

  // each degree starts from the previous optimum, which keeps the ellipsoid small
  auto bound_for = [&]() {
    Rational bound = dist;
    if (opt.upper)
      bound = std::min(bound, *opt.upper);
    else if (n > 0)
      bound = std::min(bound, oracle_best_int(lambda, domain, n - 1, opt).value.hi);
    return bound;
  };
  auto sup_search = [&](const RMatrix& gram, const Rational& bound, const Rational& lattice, auto&& witness,
                        auto&& refine, auto&& certify) {
    out.lattice_lower = lattice;
    std::vector<Rational> centre(gram.size(), Rational(0));
    centre[0] = lambda;
    const double cut = bound.get_d() * (1 + 1e-12);
    const double near = lattice.get_d() * (1 + 1e-9);
    const Rational target = lattice * (1 + req.tolerance);
    std::vector<detail::Scored> cand;
    std::optional<std::pair<Enclosure, std::vector<Integer>>> hit;
    bool scanned = false;
    // past the budget, a certified candidate meeting the lattice bound ends the walk
    auto attains = [&](const std::vector<Integer>& c) {
      if (refine(c) > target)
        return false;
      const Enclosure e = certify(c);
      ++out.certified;
      if (e.hi > target)
        return false;
      hit.emplace(e, c);
      return true;
    };
    out.nodes = detail::fincke_pohst(
        gram, centre, bound * bound, out.box,
        [&](const std::vector<long long>& a, std::size_t nodes) {
          const double lb = witness(a);
          if (lb > cut)
            return true;
          std::vector<Integer> c(a.size());
          for (std::size_t k = 0; k < a.size(); ++k)
            c[k] = Integer(static_cast<long>(a[k]));
          cand.push_back({c, Rational(lb)});
          if (nodes < opt.node_budget || sgn(lattice) == 0)
            return true;
          if (!scanned) {
            scanned = true;
            std::vector<const detail::Scored*> early;
            for (const auto& e : cand)
              if (e.lb.get_d() <= near)
                early.push_back(&e);
            std::sort(early.begin(), early.end(), [](auto x, auto y) {
              return x->lb != y->lb ? x->lb < y->lb : x->coeffs < y->coeffs;
            });
            for (const auto* e : early)
              if (attains(e->coeffs))
                return false;
            return true;
          }
          return !(lb <= near && attains(c));
        },
        opt.node_cap);
    if (hit) {
      out.exhaustive = false;
      out.value = Enclosure(lattice, hit->first.hi);
      out.coeffs = hit->second;
      return;
    }
    auto beyond = [](const Rational& lb, const Rational& hi) { return lb > hi; };
    auto [value, pick] = detail::settle(std::move(cand), certify, refine, beyond, out.certified);
    out.value = Enclosure(std::max(value.lo, lattice), value.hi);
    out.coeffs = pick;
  };

  if (const auto* iv_ptr = std::get_if<Interval>(&domain); iv_ptr || std::holds_alternative<Cube>(domain)) {
    Interval iv;
    if (iv_ptr) {
      iv = *iv_ptr;
    } else {
      const Cube& c = std::get<Cube>(domain);
      if (c.dim != 1)
        throw UnsupportedError("the oracle handles one-dimensional cubes only");
      iv = {c.a, c.b};
    }
    if (gauss)
      throw UnsupportedError("Gaussian coefficients are for disks");
    if (n > opt.cap_sup)
      throw OracleError("degree above the oracle cap of " + std::to_string(opt.cap_sup));
    const Rational bound = bound_for();
    out.box = coeff_box(lambda, iv, n, bound);
    const auto wit = detail::interval_witnesses(iv.a, iv.b, n);
    const double lam = lambda.get_d();
    auto witness = [&](const std::vector<long long>& a) { return detail::witness_bound(lam, a, n + 1, false, wit); };
    auto certify = [&](const std::vector<Integer>& a) {
      return sup_norm_adaptive(Poly1::constant(lambda) - detail::real_poly(a, n + 1), iv, req);
    };
    auto refine = [&](const std::vector<Integer>& a) {
      const Poly1 q = detail::real_poly(a, n + 1);
      Rational best = 0;
      for (double x : wit)
        best = std::max<Rational>(best, abs(lambda - q(Rational(x))));
      return best;
    };
    sup_search(detail::arcsine_gram(iv.a, iv.b, n), bound, detail::lattice_lower(lambda, n, iv.a, iv.b), witness,
               refine, certify);
    out.q = detail::real_poly(out.coeffs, n + 1);
    out.qc = to_complex(out.q);
    return out;
  }

  if (const auto* disk = std::get_if<Disk>(&domain)) {
    const unsigned cap = gauss ? opt.cap_gaussian : opt.cap_sup;
    if (n > cap)
      throw OracleError("degree above the oracle cap of " + std::to_string(cap));
    const Rational bound = bound_for();
    out.box = coeff_box(lambda, *disk, n, bound, opt.ring);
    const auto wit = detail::disk_witnesses(disk->center, disk->radius, n);
    auto make = [&](const std::vector<Integer>& a) {
      return gauss ? detail::gaussian_poly(a, n + 1) : to_complex(detail::real_poly(a, n + 1));
    };
    const double lam = lambda.get_d();
    auto witness = [&](const std::vector<long long>& a) { return detail::witness_bound(lam, a, n + 1, gauss, wit); };
    auto certify = [&](const std::vector<Integer>& a) {
      return sup_norm_adaptive(CPoly::constant(Gaussian(lambda)) - make(a), *disk, req);
    };
    auto refine = [&](const std::vector<Integer>& a) {
      const CPoly q = make(a);
      Rational best = 0;
      for (const auto& z : wit)
        best = std::max<Rational>(best, (Gaussian(lambda) - q(Gaussian(Rational(z.real()), Rational(z.imag())))).norm2());
      return sqrt_enclosure(best, 128).lo;
    };
    // real points of the disk, when its centre is real
    const Rational lattice = sgn(disk->center.im) == 0
                                 ? detail::lattice_lower(lambda, n, disk->center.re - disk->radius,
                                                         disk->center.re + disk->radius)
                                 : Rational(0);
    sup_search(detail::circle_gram(disk->center, disk->radius, n, gauss), bound, lattice, witness, refine, certify);
    out.qc = make(out.coeffs);
    if (!gauss)
      out.q = detail::real_poly(out.coeffs, n + 1);
    return out;
  }

  // weighted L_p: balls reduce to radial Q(u) on [0, r^2]
  if (gauss)
    throw UnsupportedError("Gaussian coefficients are for disks");
  if (n > opt.cap_lp)
    throw OracleError("degree above the oracle cap of " + std::to_string(opt.cap_lp));
  WeightedInterval w;
  unsigned deg = n;
  Enclosure scale(Rational(1));
  if (const auto* ball = std::get_if<Ball>(&domain)) {
    w = {Rational(0), ball->r * ball->r, ratio(static_cast<long>(ball->dim), 2) - 1, opt.p};
    deg = n / 2;
    scale = sphere_area(ball->dim).value(req.precision_bits) * Rational(1, 2);
    out.radial = true;
  } else {
    w = std::get<WeightedInterval>(domain);
  }
  if (!(w.a < w.b) || w.alpha <= -1 || w.p < 1)
    throw DomainError("invalid weighted interval");
  if (!lp_exact_path(w))
    throw UnsupportedError("the L_p oracle needs an integer p and exactly integrable moments");
  const unsigned long p = w.p.get_num().get_ui();

  // integral bound from E <= B, and the best constant
  const Rational c0(round_nearest(lambda));
  const Rational mom0 = detail::weight_moment(w.a, w.b, w.alpha, 0);
  Rational bound_int = pow(dist, p) * mom0;
  if (opt.upper)
    bound_int = std::min(bound_int, Rational(pow(*opt.upper, p) / scale.lo));

  // dual functionals: coefficient k of g equals the weighted integral of g psi_k
  RMatrix gram(deg + 1, std::vector<Rational>(deg + 1));
  std::vector<Rational> mom(2 * deg + 1);
  for (unsigned k = 0; k <= 2 * deg; ++k)
    mom[k] = detail::weight_moment(w.a, w.b, w.alpha, k);
  for (unsigned i = 0; i <= deg; ++i)
    for (unsigned j = 0; j <= deg; ++j)
      gram[i][j] = mom[i + j];
  const RMatrix inv = inverse_exact(gram);
  const Rational l1 = Rational(power_enclosure(mom0, 1 - Rational(1) / w.p, req.precision_bits).hi *
                               power_enclosure(bound_int, Rational(1) / w.p, req.precision_bits).hi);
  out.box.n = deg;
  for (unsigned k = 0; k <= deg; ++k) {
    const Poly1 psi(inv[k]);
    const Rational s = sup_norm_adaptive(psi, Interval{w.a, w.b}, req).hi;
    const Rational centre = k == 0 ? lambda : Rational(0);
    out.box.lo.push_back(ceil_of(centre - s * l1));
    out.box.hi.push_back(floor_of(centre + s * l1));
    out.box.log.push_back("c" + std::to_string(k) + ": dual functional bound, sup|psi_k| <= " + s.get_str() +
                          ", weighted L1 norm <= " + l1.get_str());
  }
  if (out.box.volume() > 5e7)
    throw OracleError("search box too large for exhaustive search");

  // piecewise moments give a cheap lower bound: on each piece, int w|g|^p >= |int w g|^p / (int w)^(p-1)
  const auto pts = detail::moment_pieces(w, 48);
  std::vector<std::vector<long double>> pm;
  std::vector<long double> pw;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    std::vector<long double> row;
    for (unsigned k = 0; k <= deg; ++k)
      row.push_back(static_cast<long double>(detail::weight_moment(pts[i], pts[i + 1], w.alpha, k).get_d()));
    pw.push_back(row[0]);
    pm.push_back(std::move(row));
  }
  const long double lam = static_cast<long double>(lambda.get_d());
  auto lower = [&](const std::vector<Integer>& a) {
    long double acc = 0;
    for (std::size_t i = 0; i < pm.size(); ++i) {
      long double v = pm[i][0] * (lam - a[0].get_d()), mag = std::fabs(pm[i][0]) * (std::fabs(lam) + std::fabs(a[0].get_d()));
      for (unsigned k = 1; k <= deg; ++k) {
        v -= pm[i][k] * a[k].get_d();
        mag += std::fabs(pm[i][k] * a[k].get_d());
      }
      const long double m = std::max(0.0L, std::fabs(v) - 1e-12L * mag - 1e-30L);
      acc += std::pow(m, static_cast<long double>(p)) / std::pow(pw[i], static_cast<long double>(p - 1));
    }
    return acc * (1 - 1e-9L);
  };
  const long double cut = static_cast<long double>(bound_int.get_d()) * (1 + 1e-9L);
  std::vector<detail::Scored> cand;
  std::vector<Integer> a(out.box.lo);
  if (!out.box.empty()) {
    for (;;) {
      ++out.nodes;
      const long double lb = lower(a);
      if (lb <= cut) {
        BigFloat lbf(0.0, 64);
        mpfr_set_ld(lbf.get(), lb, MPFR_RNDD);
        cand.push_back({a, lbf.to_rational()});
      }
      std::size_t j = 0;
      while (j < a.size() && a[j] == out.box.hi[j]) {
        a[j] = out.box.lo[j];
        ++j;
      }
      if (j == a.size())
        break;
      ++a[j];
    }
  }
  auto certify = [&](const std::vector<Integer>& c) {
    return weighted_lp_integral(Poly1::constant(lambda) - detail::real_poly(c, deg + 1), w, req).value;
  };
  auto beyond = [](const Rational& lb, const Rational& hi) { return lb > hi; };
  (void)c0;
  auto refine = [](const std::vector<Integer>&) { return Rational(0); };
  auto [integral, pick] = detail::settle(std::move(cand), certify, refine, beyond, out.certified);
  out.coeffs = pick;
  out.q = detail::real_poly(pick, deg + 1);
  out.qc = to_complex(out.q);
  out.value = root_enclosure(integral * scale, w.p, req.precision_bits);
  return out;
}

/// Error of the oracle's own answer, for re-deriving its box.
inline Rational oracle_box_bound(const OracleResult& r) { return r.value.hi; }

} // namespace intcheb

#endif // INTCHEB_ORACLE_HPP
