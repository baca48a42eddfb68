#ifndef INTCHEB_RATE_HPP
#define INTCHEB_RATE_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "intcheb/errors.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

enum class RateModel {
  /// E_n ~ C rho^n
  Geometric,
  /// E_n ~ C n^-kappa
  Polynomial,
};

inline std::string to_string(RateModel m) { return m == RateModel::Geometric ? "geometric" : "polynomial"; }

struct RateEstimate {
  RateModel model = RateModel::Polynomial;
  /// rho for the geometric model, kappa for the polynomial one.
  double estimate = 0;
  /// log C
  double log_constant = 0;
  /// Root mean square of the log residuals.
  double residual = 0;
  /// Largest change of the estimate when the fit uses the enclosure ends instead of the midpoints.
  double uncertainty = 0;
  unsigned n_min = 0;
  unsigned n_max = 0;
  std::size_t points = 0;
};

/// Natural log of a positive rational, without underflow for tiny values.
inline double log_rational(const Rational& x) {
  if (sgn(x) <= 0)
    throw DomainError("log of a nonpositive value");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(en - ed) * std::log(2.0);
}

namespace detail {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double rms = 0;
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0)
    throw DomainError("rate fit needs at least two distinct n");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / m);
  return f;
}

} // namespace detail

/// Least squares on log E_n against n (geometric) or log n (polynomial), at enclosure midpoints.
inline RateEstimate rate_fit(const std::vector<std::pair<unsigned, Enclosure>>& series, RateModel model) {
  if (series.size() < 5)
    throw DomainError("rate fit needs at least 5 points");
  std::vector<double> x, mid, lo, hi;
  RateEstimate out;
  out.model = model;
  out.points = series.size();
  out.n_min = series.front().first;
  out.n_max = series.front().first;
  for (const auto& [n, e] : series) {
    if (sgn(e.lo) <= 0)
      throw DomainError("rate fit needs positive errors");
    if (model == RateModel::Polynomial && n == 0)
      throw DomainError("the polynomial model needs n >= 1");
    x.push_back(model == RateModel::Geometric ? static_cast<double>(n) : std::log(static_cast<double>(n)));
    mid.push_back(log_rational((e.lo + e.hi) / 2));
    lo.push_back(log_rational(e.lo));
    hi.push_back(log_rational(e.hi));
    out.n_min = std::min(out.n_min, n);
    out.n_max = std::max(out.n_max, n);
  }
  const auto f = detail::least_squares(x, mid);
  const auto fl = detail::least_squares(x, lo);
  const auto fh = detail::least_squares(x, hi);
  auto value = [&](double slope) { return model == RateModel::Geometric ? std::exp(slope) : -slope; };
  out.estimate = value(f.slope);
  out.log_constant = f.intercept;
  out.residual = f.rms;
  out.uncertainty = std::max(std::fabs(value(fl.slope) - out.estimate), std::fabs(value(fh.slope) - out.estimate));
  return out;
}

} // namespace intcheb

#endif // INTCHEB_RATE_HPP
