#ifndef INTCHEB_NORMS_HPP
#define INTCHEB_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "intcheb/bigfloat.hpp"
#include "intcheb/domain.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/multipoly.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

enum class NormKind { Sup, WeightedLp };

/// Which norm to certify and how hard to work at it.
struct NormRequest {
  NormKind kind = NormKind::Sup;
  Rational alpha{0};
  Rational p{1};
  /// Working precision of the floating sampling, in bits.
  mpfr_prec_t precision_bits = 128;
  /// Target relative width of the returned enclosure.
  Rational tolerance{1, 1000000000};
  /// Lower limit on the number of initial samples for one-parameter domains.
  std::size_t min_samples = 4096;

  void validate() const {
    if (sgn(tolerance) <= 0)
      throw DomainError("norm tolerance must be positive");
    if (precision_bits < 53)
      throw DomainError("precision must be at least 53 bits");
    if (kind == NormKind::WeightedLp && (alpha <= -1 || p < 1))
      throw DomainError("weighted L_p needs alpha > -1 and p >= 1");
  }
};

namespace detail {

struct Sample {
  BigFloat value; // computed |F| at the centre
  BigFloat err;   // bound on |computed - exact| for value
  BigFloat a;     // bound on the first-order Taylor model over the cell, evaluation error included
  /// Sign of d|F|/dy_j; when given, cells on the box boundary are also probed on the boundary.
  std::vector<int> ascent;
};

/// Certified maximum of |F| over a box by cell subdivision.
///
/// On a cell with centre m and half-widths h_j the sampler supplies a bound a
/// on the linear Taylor model, so that
///   |F(x)| <= a + (1/2) (sum_j M_j h_j)^2 S,
/// where S is the global maximum and M_j bounds ||d_j F|| / ||F|| (Markov or
/// Bernstein). The cell holding the maximiser then gives S <= a / (1 - kappa).
template <typename Sampler>
Enclosure box_sup(Sampler&& sample, const std::vector<BigFloat>& lo, const std::vector<BigFloat>& hi,
                  const std::vector<std::size_t>& grid, const std::vector<BigFloat>& markov,
                  const NormRequest& req) {
  const std::size_t dim = lo.size();
  const mpfr_prec_t bits = req.precision_bits;
  const BigFloat u = BigFloat::epsilon(bits);
  const BigFloat tol(req.tolerance, bits);
  const BigFloat one(1, bits);
  const BigFloat half(Rational(1, 2), bits);
  const BigFloat quarter(Rational(1, 4), bits);
  constexpr std::size_t kMaxCells = 400000;
  constexpr int kMaxRounds = 80;

  struct Cell {
    std::vector<BigFloat> centre;
    std::vector<BigFloat> halfw;
    BigFloat a;
    BigFloat kappa;
    BigFloat err;
  };

  BigFloat best_lower(bits);
  std::vector<Cell> cells;
  auto evaluate = [&](std::vector<BigFloat> centre, std::vector<BigFloat> halfw) {
    Sample s = sample(centre, halfw);
    BigFloat lower = s.value - s.err;
    if (lower > best_lower)
      best_lower = lower;
    if (!s.ascent.empty()) {
      // a maximum on the boundary would otherwise only be approached at first order
      std::vector<BigFloat> probe = centre;
      bool moved = false;
      for (std::size_t j = 0; j < dim; ++j) {
        BigFloat slack = halfw[j] * quarter;
        if (s.ascent[j] < 0 && centre[j] - halfw[j] - lo[j] <= slack) {
          probe[j] = lo[j];
          moved = true;
        } else if (s.ascent[j] > 0 && hi[j] - centre[j] - halfw[j] <= slack) {
          probe[j] = hi[j];
          moved = true;
        }
      }
      if (moved) {
        Sample edge = sample(probe, halfw);
        BigFloat edge_lower = edge.value - edge.err;
        if (edge_lower > best_lower)
          best_lower = edge_lower;
      }
    }
    BigFloat m(bits);
    for (std::size_t j = 0; j < dim; ++j)
      m += markov[j] * halfw[j];
    BigFloat kappa = half * m * m;
    cells.push_back({std::move(centre), std::move(halfw), std::move(s.a), std::move(kappa), std::move(s.err)});
  };

  {
    std::vector<BigFloat> width;
    std::size_t total = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      width.push_back((hi[j] - lo[j]) / BigFloat(static_cast<long>(grid[j]), bits));
      total *= grid[j];
    }
    std::vector<std::size_t> idx(dim, 0);
    for (std::size_t t = 0; t < total; ++t) {
      std::vector<BigFloat> centre, halfw;
      for (std::size_t j = 0; j < dim; ++j) {
        centre.push_back(lo[j] + width[j] * BigFloat(static_cast<double>(idx[j]) + 0.5, bits));
        halfw.push_back(width[j] * half);
      }
      evaluate(std::move(centre), std::move(halfw));
      for (std::size_t j = 0; j < dim; ++j) {
        if (++idx[j] < grid[j])
          break;
        idx[j] = 0;
      }
    }
  }

  bool upper_finite = false;
  BigFloat upper(bits);
  BigFloat dropped(bits);
  for (int round = 0;; ++round) {
    // refresh the global bound from every live cell
    BigFloat candidate = max(dropped, best_lower);
    bool finite = true;
    for (const auto& c : cells) {
      if (c.kappa >= one) {
        finite = false;
        break;
      }
      candidate = max(candidate, c.a / (one - c.kappa));
    }
    if (finite && (!upper_finite || candidate < upper)) {
      upper = candidate;
      upper_finite = true;
    }

    std::vector<Cell> keep;
    if (upper_finite) {
      BigFloat threshold = best_lower * (one + tol * half);
      for (auto& c : cells) {
        BigFloat bound = c.a + c.kappa * upper;
        if (bound <= threshold)
          dropped = max(dropped, bound);
        else
          keep.push_back(std::move(c));
      }
    } else {
      keep = std::move(cells);
    }
    cells.clear();

    if (upper_finite) {
      BigFloat tightened = max(dropped, best_lower);
      bool all_finite = true;
      for (const auto& c : keep) {
        if (c.kappa >= one) {
          all_finite = false;
          break;
        }
        tightened = max(tightened, c.a / (one - c.kappa));
      }
      if (all_finite && tightened < upper)
        upper = tightened;
      if (keep.empty() || upper - best_lower <= tol * upper)
        break;
    }

    BigFloat worst_err(bits);
    for (const auto& c : keep)
      worst_err = max(worst_err, c.err);
    if (best_lower.sign() > 0 && worst_err * BigFloat(8L, bits) > tol * best_lower)
      throw PrecisionError("sup-norm tolerance unreachable at " + std::to_string(bits) +
                           " bits; raise --precision-bits");
    if (round >= kMaxRounds || (keep.size() << dim) > kMaxCells)
      throw PrecisionError("sup-norm refinement did not converge; raise --precision-bits or loosen --tolerance");

    for (const auto& c : keep) {
      const std::size_t children = std::size_t{1} << dim;
      for (std::size_t mask = 0; mask < children; ++mask) {
        std::vector<BigFloat> centre, halfw;
        for (std::size_t j = 0; j < dim; ++j) {
          BigFloat q = c.halfw[j] * half;
          centre.push_back((mask >> j) & 1u ? c.centre[j] + q : c.centre[j] - q);
          halfw.push_back(q);
        }
        evaluate(std::move(centre), std::move(halfw));
      }
    }
  }

  BigFloat margin = one - u * BigFloat(8L, bits);
  BigFloat lo_val = best_lower * margin;
  Rational lo_q = lo_val.sign() > 0 ? lo_val.to_rational() : Rational(0);
  Rational hi_q = (upper * (one + u * BigFloat(8L, bits))).to_rational();
  if (hi_q < lo_q)
    hi_q = lo_q;
  return {lo_q, hi_q};
}

inline std::vector<BigFloat> to_floats(const std::vector<Rational>& c, mpfr_prec_t bits) {
  std::vector<BigFloat> out;
  out.reserve(c.size());
  for (const auto& v : c)
    out.emplace_back(v, bits);
  return out;
}

inline std::size_t one_param_grid(std::size_t needed, std::size_t degree, const NormRequest& req) {
  return std::max({needed, req.min_samples, std::size_t{128} * degree, std::size_t{8}});
}

} // namespace detail

/// Enclosure of max_{[a,b]} |f|.
inline Enclosure sup_norm(const Poly1& f, const Interval& iv, const NormRequest& req = {}) {
  req.validate();
  if (!(iv.a < iv.b))
    throw DomainError("interval requires a < b");
  if (f.degree() <= 0)
    return Enclosure(abs(f[0]));
  const mpfr_prec_t bits = req.precision_bits;
  const Rational mid = (iv.a + iv.b) / 2, halfw = (iv.b - iv.a) / 2;
  const Poly1 g = f.affine(mid, halfw); // g(y) = f(mid + halfw*y), y in [-1,1]
  const std::vector<BigFloat> c = detail::to_floats(g.coeffs(), bits);
  std::vector<BigFloat> ac;
  for (const auto& v : c)
    ac.push_back(abs(v));
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const BigFloat u = BigFloat::epsilon(bits);
  const BigFloat err_scale = u * BigFloat(static_cast<long>(4 * n + 16), bits);

  auto sample = [&](const std::vector<BigFloat>& pt, const std::vector<BigFloat>& h) {
    const BigFloat& y = pt[0];
    BigFloat ay = abs(y);
    BigFloat p = c[n], dp(bits), A = ac[n], dA(bits);
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * y + p;
      p = p * y + c[k];
      dA = dA * ay + A;
      A = A * ay + ac[k];
    }
    BigFloat err = err_scale * (A + dA);
    BigFloat a = abs(p) + err + (abs(dp) + err) * h[0];
    return detail::Sample{abs(p), err, a, {p.sign() * dp.sign()}};
  };
  // sup |f''| <= n^2 (n^2 - 1) / 3 sup |f| on [-1,1], and 0.5774 > 1/sqrt(3)
  const BigFloat markov(Rational(static_cast<long>(n * n)) * ratio(5774, 10000), bits);
  const std::size_t grid = detail::one_param_grid(2 * n * n, n, req);
  return detail::box_sup(sample, {BigFloat(-1L, bits)}, {BigFloat(1L, bits)}, {grid}, {markov}, req);
}

/// Enclosure of max over the closed disk of |f|, taken on the boundary circle.
inline Enclosure sup_norm(const CPoly& f, const Disk& disk, const NormRequest& req = {}) {
  req.validate();
  if (sgn(disk.radius) <= 0)
    throw DomainError("disk radius must be positive");
  if (f.degree() <= 0)
    return modulus(f[0], static_cast<unsigned>(req.precision_bits) + 32);
  const mpfr_prec_t bits = req.precision_bits;
  // P(w) = f(center + radius * w), |w| = 1
  const CPoly g = f.affine(disk.center, Gaussian(disk.radius));
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<BigComplex> c;
  BigFloat A(bits), dA(bits);
  for (std::size_t k = 0; k <= n; ++k) {
    c.emplace_back(g[k], bits);
    BigFloat m = c.back().modulus();
    A += m;
    dA += m * BigFloat(static_cast<long>(k), bits);
  }
  const BigFloat u = BigFloat::epsilon(bits);
  const BigFloat err = u * BigFloat(static_cast<long>(8 * (n + 2) * (n + 2)), bits) * (A + dA);

  const BigFloat slack = BigFloat(1L, bits) + u * BigFloat(8L, bits);
  auto sample = [&](const std::vector<BigFloat>& pt, const std::vector<BigFloat>& h) {
    BigComplex w(cos(pt[0]), sin(pt[0]));
    BigComplex p = c[n];
    BigComplex dp(bits);
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * w;
      dp += p;
      p = p * w;
      p += c[k];
    }
    // derivative in theta is i w P'(w), same modulus as P'(w); the linear model
    // |P + i w P' t|^2 = |P|^2 - 2 t Im(conj(P) w P') + t^2 |P'|^2
    BigComplex wdp = w * dp;
    BigFloat cross = abs(p.re * wdp.im - p.im * wdp.re);
    BigFloat dmod = dp.modulus();
    BigFloat lin = sqrt(p.re * p.re + p.im * p.im + BigFloat(2L, bits) * cross * h[0] + dmod * dmod * h[0] * h[0]);
    BigFloat a = lin * slack + err * (BigFloat(1L, bits) + h[0]);
    return detail::Sample{p.modulus(), err, a};
  };
  BigFloat two_pi = BigFloat::pi(bits) * BigFloat(2L, bits) * (BigFloat(1L, bits) + u * BigFloat(4L, bits));
  const BigFloat markov(static_cast<long>(n), bits);
  const std::size_t grid = detail::one_param_grid(static_cast<std::size_t>(std::ceil(7.0 * n)), n, req);
  return detail::box_sup(sample, {BigFloat(bits)}, {two_pi}, {grid}, {markov}, req);
}

inline Enclosure sup_norm(const Poly1& f, const Disk& disk, const NormRequest& req = {}) {
  return sup_norm(to_complex(f), disk, req);
}

namespace detail {

/// Dense coefficient tensor in y in [-1,1]^d, last axis contiguous.
struct DenseTensor {
  std::vector<unsigned> deg;
  std::vector<std::size_t> stride;
  std::vector<BigFloat> c;

  std::size_t size() const { return c.size(); }
};

inline DenseTensor dense_tensor(const MultiPoly& g, mpfr_prec_t bits) {
  DenseTensor t;
  const std::size_t dim = g.dim();
  t.deg = g.axis_degrees();
  t.stride.assign(dim, 1);
  for (std::size_t j = dim - 1; j-- > 0;)
    t.stride[j] = t.stride[j + 1] * (t.deg[j + 1] + 1);
  t.c.assign(t.stride[0] * (t.deg[0] + 1), BigFloat(bits));
  for (const auto& [k, v] : g.terms()) {
    std::size_t at = 0;
    for (std::size_t j = 0; j < dim; ++j)
      at += k[j] * t.stride[j];
    t.c[at] = BigFloat(v, bits);
  }
  return t;
}

/// In place: coefficients of G(t) = F(m + h t), one axis after another.
/// h must be a power of two so that the scaling is exact.
inline void shift_scale(DenseTensor& t, const std::vector<BigFloat>& m, const std::vector<BigFloat>& h) {
  const std::size_t dim = t.deg.size();
  for (std::size_t j = 0; j < dim; ++j) {
    const std::size_t n = t.deg[j], st = t.stride[j];
    if (n == 0)
      continue;
    const std::size_t block = st * (n + 1);
    for (std::size_t base = 0; base < t.size(); base += block)
      for (std::size_t inner = 0; inner < st; ++inner) {
        auto at = [&](std::size_t k) -> BigFloat& { return t.c[base + inner + k * st]; };
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = n; k-- > i;)
            mpfr_fma(at(k).get(), at(k + 1).get(), m[j].get(), at(k).get(), MPFR_RNDN);
        for (std::size_t k = 1; k <= n; ++k)
          mpfr_mul_2si(at(k).get(), at(k).get(), static_cast<long>(k) * mpfr_get_exp(h[j].get()) - static_cast<long>(k), MPFR_RNDN);
      }
  }
}

/// Certified max of |F| over [-1,1]^d by centred forms on dyadic cells.
///
/// On a cell m + h[-1,1]^d the shifted polynomial G(t) = F(m + h t) satisfies
/// |G| <= sum_k |g_k|, and any vertex value is attained, so each cell carries
/// an upper and a lower bound without any global derivative estimate.
inline Enclosure centred_form_sup(const MultiPoly& g, const NormRequest& req) {
  const mpfr_prec_t bits = req.precision_bits;
  const std::size_t dim = g.dim();
  const DenseTensor base = dense_tensor(g, bits);
  DenseTensor abs_base = base;
  for (auto& v : abs_base.c)
    v = abs(v);
  unsigned deg_sum = 0;
  for (unsigned d : base.deg)
    deg_sum += d;
  const BigFloat u = BigFloat::epsilon(bits);
  const BigFloat err_scale = u * BigFloat(static_cast<long>(4 * (deg_sum + dim + 2) + base.size()), bits);
  const BigFloat tol(req.tolerance, bits);
  const BigFloat one(1L, bits), half(Rational(1, 2), bits);
  constexpr std::size_t kMaxCells = 400000;
  constexpr int kMaxRounds = 90;

  struct Cell {
    std::vector<BigFloat> m;
    BigFloat upper;
    BigFloat err;
  };
  BigFloat best_lower(bits), dropped(bits);
  BigFloat h(Rational(1, 4), bits);
  std::vector<Cell> cells;

  auto evaluate = [&](std::vector<BigFloat> m) {
    DenseTensor t = base, at = abs_base;
    std::vector<BigFloat> hv(dim, h), am(dim, BigFloat(bits));
    for (std::size_t j = 0; j < dim; ++j)
      am[j] = abs(m[j]);
    shift_scale(t, m, hv);
    shift_scale(at, am, hv);
    BigFloat sum(bits), abs_sum(bits);
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += abs(t.c[i]);
      abs_sum += at.c[i];
    }
    BigFloat err = err_scale * abs_sum;
    // vertex in the ascent direction of the linear part
    BigFloat vertex(bits);
    const int s0 = t.c[0].sign();
    std::vector<int> dir(dim, 1);
    for (std::size_t j = 0; j < dim; ++j)
      if (t.deg[j] > 0 && s0 * t.c[t.stride[j]].sign() < 0)
        dir[j] = -1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::size_t rest = i;
      int sign = 1;
      for (std::size_t j = 0; j < dim; ++j) {
        std::size_t kj = rest / t.stride[j];
        rest %= t.stride[j];
        if (dir[j] < 0 && kj % 2 == 1)
          sign = -sign;
      }
      if (sign > 0)
        vertex += t.c[i];
      else
        vertex -= t.c[i];
    }
    BigFloat lower = max(abs(t.c[0]), abs(vertex)) - err;
    if (lower > best_lower)
      best_lower = lower;
    cells.push_back({std::move(m), sum + err, std::move(err)});
  };

  {
    // 4 cells per axis to start
    std::vector<BigFloat> offs{BigFloat(Rational(-3, 4), bits), BigFloat(Rational(-1, 4), bits),
                               BigFloat(Rational(1, 4), bits), BigFloat(Rational(3, 4), bits)};
    std::vector<std::size_t> idx(dim, 0);
    std::size_t total = std::size_t{1} << (2 * dim);
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<BigFloat> m;
      for (std::size_t j = 0; j < dim; ++j)
        m.push_back(offs[idx[j]]);
      evaluate(std::move(m));
      for (std::size_t j = 0; j < dim; ++j) {
        if (++idx[j] < 4)
          break;
        idx[j] = 0;
      }
    }
  }

  BigFloat upper(bits);
  for (int round = 0;; ++round) {
    const BigFloat threshold = best_lower * (one + tol * half);
    std::vector<Cell> keep;
    for (auto& c : cells) {
      if (c.upper <= threshold)
        dropped = max(dropped, c.upper);
      else
        keep.push_back(std::move(c));
    }
    cells.clear();
    upper = max(dropped, best_lower);
    BigFloat worst_err(bits);
    for (const auto& c : keep) {
      upper = max(upper, c.upper);
      worst_err = max(worst_err, c.err);
    }
    if (keep.empty() || upper - best_lower <= tol * upper)
      break;
    if (best_lower.sign() > 0 && worst_err * BigFloat(8L, bits) > tol * best_lower)
      throw PrecisionError("sup-norm tolerance unreachable at " + std::to_string(bits) +
                           " bits; raise --precision-bits");
    if (round >= kMaxRounds || (keep.size() << dim) > kMaxCells)
      throw PrecisionError("sup-norm refinement did not converge; raise --precision-bits or loosen --tolerance");
    h *= half;
    for (const auto& c : keep)
      for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        std::vector<BigFloat> m;
        for (std::size_t j = 0; j < dim; ++j)
          m.push_back((mask >> j) & 1u ? c.m[j] + h : c.m[j] - h);
        evaluate(std::move(m));
      }
  }

  BigFloat lo_val = best_lower * (one - u * BigFloat(8L, bits));
  Rational lo_q = lo_val.sign() > 0 ? lo_val.to_rational() : Rational(0);
  Rational hi_q = (upper * (one + u * BigFloat(8L, bits))).to_rational();
  if (hi_q < lo_q)
    hi_q = lo_q;
  return {lo_q, hi_q};
}

} // namespace detail

/// Enclosure of max over [a,b]^d of |f|.
inline Enclosure sup_norm(const MultiPoly& f, const Cube& cube, const NormRequest& req = {}) {
  req.validate();
  if (f.dim() != cube.dim)
    throw DomainError("polynomial and cube dimensions differ");
  if (!(cube.a < cube.b))
    throw DomainError("cube requires a < b");
  if (f.total_degree() <= 0)
    return Enclosure(abs(f.coeff(MultiIndex(f.dim(), 0))));
  if (f.dim() == 1) {
    std::vector<Rational> c(static_cast<std::size_t>(f.total_degree()) + 1, Rational(0));
    for (const auto& [k, v] : f.terms())
      c[k[0]] = v;
    return sup_norm(Poly1(std::move(c)), Interval{cube.a, cube.b}, req);
  }
  const std::size_t dim = f.dim();
  const Rational mid = (cube.a + cube.b) / 2, halfw = (cube.b - cube.a) / 2;
  const MultiPoly g = f.affine(std::vector<Rational>(dim, mid), std::vector<Rational>(dim, halfw));
  return detail::centred_form_sup(g, req);
}

/// Retries a certified sup at doubled precision while cancellation defeats the working precision.
template <typename F, typename D>
Enclosure sup_norm_adaptive(const F& f, const D& domain, NormRequest req = {}, mpfr_prec_t max_bits = 4096) {
  for (;;) {
    try {
      return sup_norm(f, domain, req);
    } catch (const PrecisionError&) {
      if (req.precision_bits * 2 > max_bits)
        throw;
      req.precision_bits *= 2;
    }
  }
}

} // namespace intcheb

#endif // INTCHEB_NORMS_HPP
