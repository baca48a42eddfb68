#ifndef INTCHEB_REMEZ_HPP
#define INTCHEB_REMEZ_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "intcheb/bigfloat.hpp"
#include "intcheb/chebyshev.hpp"
#include "intcheb/errors.hpp"
#include "intcheb/lp.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/poly.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// min over p_n of max_{[0,1]} t^alpha |1 - t^m p_n(t)|.
struct Lemma5Result {
  /// lo: levelled error of the final reference (the grid optimum); hi: sup of the returned p over [0,1].
  Enclosure value;
  bool converged = true;
  /// The upper end is a certified sup (integer alpha) rather than a fine-grid maximum.
  bool certified = true;
  std::size_t grid_points = 0;
  /// The near-optimal p_n with rational coefficients.
  Poly1 p;
};

namespace detail {

/// Discrete linear minimax of w(t) - sum c_k psi_k(t) over a fixed grid by multi-point exchange.
class DiscreteRemez {
public:
  DiscreteRemez(std::vector<BigFloat> w, std::vector<std::vector<BigFloat>> psi, mpfr_prec_t bits)
      : w_(std::move(w)), psi_(std::move(psi)), bits_(bits) {}

  struct Outcome {
    std::vector<BigFloat> c;
    BigFloat levelled;
    BigFloat max_error;
    std::vector<std::size_t> reference;
    bool converged;
  };

  Outcome run(std::vector<std::size_t> ref, int max_iter = 80) const {
    const std::size_t nb = psi_.front().size();
    Outcome out{{}, BigFloat(bits_), BigFloat(bits_), ref, false};
    for (int it = 0; it < max_iter; ++it) {
      std::vector<BigFloat> sol = solve_reference(ref);
      out.c.assign(sol.begin(), sol.begin() + static_cast<long>(nb));
      out.levelled = abs(sol.back());
      out.reference = ref;
      std::vector<BigFloat> err = residual(out.c);
      out.max_error = BigFloat(bits_);
      for (const auto& e : err)
        out.max_error = max(out.max_error, abs(e));
      const BigFloat gap = out.max_error - out.levelled;
      if (gap <= out.max_error * BigFloat(1e-12, bits_)) {
        out.converged = true;
        return out;
      }
      std::vector<std::size_t> next = exchange(err);
      if (next.size() != ref.size() || next == ref)
        return out;
      ref = std::move(next);
    }
    return out;
  }

  std::vector<BigFloat> residual(const std::vector<BigFloat>& c) const {
    std::vector<BigFloat> err;
    err.reserve(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) {
      BigFloat e = w_[i];
      for (std::size_t k = 0; k < c.size(); ++k)
        e -= c[k] * psi_[i][k];
      err.push_back(std::move(e));
    }
    return err;
  }

private:
  /// sum_k c_k psi_k(t_i) + (-1)^i h = w(t_i) on the reference.
  std::vector<BigFloat> solve_reference(const std::vector<std::size_t>& ref) const {
    const std::size_t nb = psi_.front().size();
    const std::size_t dim = nb + 1;
    std::vector<std::vector<BigFloat>> a(dim);
    std::vector<BigFloat> b(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t i = ref[r];
      a[r] = psi_[i];
      a[r].push_back(BigFloat(r % 2 ? -1L : 1L, bits_));
      b[r] = w_[i];
    }
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < dim; ++r)
        if (abs(a[r][col]) > abs(a[piv][col]))
          piv = r;
      if (a[piv][col].sign() == 0)
        throw DegenerateError("singular exchange reference");
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
      for (std::size_t r = col + 1; r < dim; ++r) {
        const BigFloat f = a[r][col] / a[col][col];
        for (std::size_t k = col; k < dim; ++k)
          a[r][k] -= f * a[col][k];
        b[r] -= f * b[col];
      }
    }
    std::vector<BigFloat> x(dim, BigFloat(bits_));
    for (std::size_t i = dim; i-- > 0;) {
      BigFloat acc = b[i];
      for (std::size_t k = i + 1; k < dim; ++k)
        acc -= a[i][k] * x[k];
      x[i] = acc / a[i][i];
    }
    return x;
  }

  /// One extremum per run of constant sign, trimmed to the reference size keeping the global maximum.
  std::vector<std::size_t> exchange(const std::vector<BigFloat>& err) const {
    const std::size_t want = psi_.front().size() + 1;
    std::vector<std::size_t> picks;
    int run_sign = 0;
    for (std::size_t i = 0; i < err.size(); ++i) {
      const int s = err[i].sign();
      if (s == 0)
        continue;
      if (s != run_sign) {
        picks.push_back(i);
        run_sign = s;
      } else if (abs(err[i]) > abs(err[picks.back()])) {
        picks.back() = i;
      }
    }
    std::size_t first = 0, last = picks.size();
    while (last - first > want) {
      if (abs(err[picks[first]]) < abs(err[picks[last - 1]]))
        ++first;
      else
        --last;
    }
    return {picks.begin() + static_cast<long>(first), picks.begin() + static_cast<long>(last)};
  }

  std::vector<BigFloat> w_;
  std::vector<std::vector<BigFloat>> psi_;
  mpfr_prec_t bits_;
};

/// Chebyshev-Lobatto points of [0,1]; the endpoint 0 is dropped when the weight vanishes there.
inline std::vector<BigFloat> lobatto01(std::size_t count, bool drop_zero, mpfr_prec_t bits) {
  std::vector<BigFloat> t;
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat one(1L, bits), half(Rational(1, 2), bits);
  for (std::size_t i = drop_zero ? 1 : 0; i < count; ++i) {
    const BigFloat ang = pi * BigFloat(static_cast<long>(i), bits) / BigFloat(static_cast<long>(count - 1), bits);
    t.push_back(half * (one - cos(ang)));
  }
  return t;
}

} // namespace detail

/// Near-optimal value of the weighted minimax problem by discretized exchange on refined Chebyshev grids.
///
/// The problem is linear in the coefficients of p_n, so the optimum over a
/// grid approaches the true optimum from below; the grid is doubled from 257
/// points until the optimum moves by less than `rel_change`.
inline Lemma5Result lemma5_rate(const Rational& alpha, unsigned m, unsigned n, const NormRequest& req = {},
                                double rel_change = 1e-6, mpfr_prec_t bits = 128) {
  if (sgn(alpha) < 0)
    throw DomainError("lemma5 needs alpha >= 0");
  if (m == 0)
    throw DomainError("lemma5 needs m >= 1");
  Lemma5Result out;
  if (sgn(alpha) == 0) {
    // the error at t = 0 is 1 whatever p is, and p = 0 attains it
    out.value = Enclosure(Rational(1));
    return out;
  }
  const BigFloat a(alpha, bits);
  const std::size_t nb = n + 1;
  std::size_t count = 257;
  std::vector<std::size_t> ref;
  BigFloat prev(bits);
  bool have_prev = false;
  std::vector<BigFloat> best_c;
  for (int level = 0; level < 8; ++level, count = 2 * count - 1) {
    const auto t = detail::lobatto01(count, true, bits);
    std::vector<BigFloat> w;
    std::vector<std::vector<BigFloat>> psi;
    for (const auto& x : t) {
      BigFloat wx = pow(x, a);
      BigFloat lead = wx;
      for (unsigned j = 0; j < m; ++j)
        lead *= x;
      const BigFloat y = BigFloat(2L, bits) * x - BigFloat(1L, bits);
      std::vector<BigFloat> row;
      BigFloat tkm1(1L, bits), tk = y;
      for (std::size_t k = 0; k < nb; ++k) {
        if (k == 0) {
          row.push_back(lead);
        } else {
          row.push_back(lead * tk);
          BigFloat nxt = BigFloat(2L, bits) * y * tk - tkm1;
          tkm1 = tk;
          tk = nxt;
        }
      }
      w.push_back(std::move(wx));
      psi.push_back(std::move(row));
    }
    if (ref.empty()) {
      for (std::size_t j = 0; j <= nb; ++j)
        ref.push_back(j * (t.size() - 1) / nb);
    } else {
      // the refined Lobatto grid contains the old one at even positions (shifted by the dropped zero)
      for (auto& i : ref)
        i = 2 * i + 1;
    }
    detail::DiscreteRemez solver(std::move(w), std::move(psi), bits);
    auto res = solver.run(ref);
    ref = res.reference;
    out.converged = res.converged;
    out.grid_points = t.size();
    best_c = res.c;
    const BigFloat cur = res.levelled;
    const bool settled = have_prev && abs(cur - prev) <= cur * BigFloat(rel_change, bits);
    prev = cur;
    have_prev = true;
    if (settled)
      break;
    if (level == 7)
      out.converged = false;
  }

  // p in monomial form, exactly from rounded Chebyshev coefficients
  Poly1 p;
  for (std::size_t k = 0; k < nb; ++k)
    p += chebyshev_t(static_cast<unsigned>(k)).affine(Rational(-1), Rational(2)) * best_c[k].to_rational();
  out.p = p;
  const Rational lo = (prev * (BigFloat(1L, bits) - BigFloat::epsilon(bits) * BigFloat(1024L, bits))).to_rational();
  const Poly1 inner = Poly1::constant(Rational(1)) - Poly1::monomial(Rational(1), m) * p;
  Rational hi;
  if (is_integer(alpha)) {
    const Poly1 full = Poly1::monomial(Rational(1), alpha.get_num().get_ui()) * inner;
    hi = sup_norm_adaptive(full, Interval{Rational(0), Rational(1)}, req).hi;
  } else {
    // fine-grid maximum; not a proof
    out.certified = false;
    const auto t = detail::lobatto01(4 * out.grid_points, true, bits);
    const auto coeffs = detail::to_floats(inner.coeffs(), bits);
    BigFloat best(bits);
    for (const auto& x : t) {
      BigFloat acc = coeffs.back();
      for (std::size_t k = coeffs.size() - 1; k-- > 0;)
        acc = acc * x + coeffs[k];
      best = max(best, abs(acc) * pow(x, a));
    }
    hi = best.to_rational();
  }
  out.value = {std::min(lo, hi), std::max(lo, hi)};
  return out;
}

/// The symmetric variant on [-1,1] with weight |t|^alpha.
///
/// Averaging P(t) and P(-t) keeps the constraint and does not raise the
/// maximum, so P may be taken even; with s = t^2 this is the one-sided
/// problem for (alpha/2, ceil(m/2), floor((n+m)/2) - ceil(m/2)).
inline Lemma5Result lemma5_rate_symmetric(const Rational& alpha, unsigned m, unsigned n, const NormRequest& req = {},
                                          double rel_change = 1e-6) {
  const unsigned mh = (m + 1) / 2;
  const unsigned top = (n + m) / 2;
  if (top < mh)
    throw DomainError("lemma5 symmetric variant needs n + m >= 2 ceil(m/2)");
  return lemma5_rate(alpha / 2, mh, top - mh, req, rel_change);
}

/// n^(-2 alpha) / |C_{n+m}(0; 1/n^2, 1)|, a lower bound on the one-sided optimum.
///
/// On [1/n^2, 1] the weight is at least n^(-2 alpha), and P = 1 - t^m p has
/// P(0) = 1 and degree n + m, so its max there is at least 1/|C_{n+m}(0)|.
inline Enclosure lemma5_lower(const Rational& alpha, unsigned m, unsigned n, mpfr_prec_t bits = 128) {
  if (n < 2)
    throw DomainError("lemma5_lower needs n >= 2");
  const Rational delta = Rational(1) / Rational(static_cast<long>(n) * n);
  const Rational g = abs(cheb(n + m, delta, Rational(1))[0]);
  const Enclosure w = power_enclosure(Rational(static_cast<long>(n)), -2 * alpha, bits);
  return w * (1 / g);
}

} // namespace intcheb

#endif // INTCHEB_REMEZ_HPP
