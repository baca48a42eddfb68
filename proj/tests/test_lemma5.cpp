#include <cmath>

#include <gtest/gtest.h>

#include "intcheb/rate.hpp"
#include "intcheb/remez.hpp"

using namespace intcheb;

namespace {

// max over a uniform grid of t^alpha |1 - t^m p(t)|
double weighted_max(double alpha, unsigned m, const std::vector<double>& p, int steps = 20000) {
  double best = 0;
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    double v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
      v = v * t + *it;
    best = std::max(best, std::pow(t, alpha) * std::fabs(1 - std::pow(t, m) * v));
  }
  return best;
}

std::vector<double> to_double(const Poly1& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs())
    out.push_back(c.get_d());
  return out;
}

} // namespace

TEST(Lemma5, ZeroWeightIsExactlyOne) {
  for (unsigned n : {1u, 5u, 20u}) {
    const Lemma5Result r = lemma5_rate(Rational(0), 1, n);
    EXPECT_EQ(r.value.lo, Rational(1));
    EXPECT_EQ(r.value.hi, Rational(1));
  }
}

TEST(Lemma5, ConstantMultiplierAgainstBruteForce) {
  // n = 0: minimize over c the max of t |1 - c t| by golden section on the grid maximum
  double lo = 0, hi = 4;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (weighted_max(1, 1, {a}) < weighted_max(1, 1, {b}))
      hi = b;
    else
      lo = a;
  }
  const double brute = weighted_max(1, 1, {(lo + hi) / 2});
  const Lemma5Result r = lemma5_rate(Rational(1), 1, 0);
  EXPECT_NEAR(r.value.hi.get_d(), brute, 1e-6);
  EXPECT_LE(r.value.lo.get_d(), brute + 1e-9);
}

TEST(Lemma5, ReturnedPolynomialReachesTheValue) {
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned n : {4u, 10u}) {
      const Lemma5Result r = lemma5_rate(Rational(a), 1, n);
      const double sampled = weighted_max(a, 1, to_double(r.p));
      EXPECT_LE(sampled, r.value.hi.get_d() * (1 + 1e-9));
      EXPECT_LE(r.value.lo, r.value.hi);
      EXPECT_LT((r.value.hi - r.value.lo) / r.value.hi, Rational(1, 1000));
    }
}

TEST(Lemma5, LowerBoundBelowTheOptimum) {
  for (unsigned n : {4u, 8u, 16u}) {
    const Lemma5Result r = lemma5_rate(Rational(1), 1, n);
    EXPECT_LE(lemma5_lower(Rational(1), 1, n).hi, r.value.lo) << "n = " << n;
  }
}

TEST(Lemma5, ValuesDecreaseWithDegree) {
  Rational prev = 2;
  for (unsigned n = 2; n <= 12; n += 2) {
    const Lemma5Result r = lemma5_rate(Rational(1), 1, n);
    EXPECT_LE(r.value.lo, prev);
    prev = r.value.hi;
  }
}

TEST(Lemma5, SymmetricVariantReducesToOneSided) {
  const Lemma5Result s = lemma5_rate_symmetric(Rational(2), 2, 6);
  const Lemma5Result o = lemma5_rate(Rational(1), 1, 3);
  EXPECT_EQ(s.value.lo, o.value.lo);
  EXPECT_EQ(s.value.hi, o.value.hi);
}

TEST(Lemma5, RateForUnitWeight) {
  std::vector<std::pair<unsigned, Enclosure>> series;
  for (unsigned n = 4; n <= 40; n += 4)
    series.emplace_back(n, lemma5_rate(Rational(1), 1, n).value);
  const RateEstimate fit = rate_fit(series, RateModel::Polynomial);
  EXPECT_GT(fit.estimate, 2 * 0.85);
  EXPECT_LT(fit.estimate, 2 * 1.15);
}
