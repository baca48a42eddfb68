#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "intcheb/oracle.hpp"

using namespace intcheb;

namespace {

double horner(const std::vector<int>& c, double t) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    v = v * t + *it;
  return v;
}

// min over integer q of degree <= n with |coefficients| <= bound of the grid max of |lambda - q| on [a, b]
double brute_interval(double lambda, double a, double b, unsigned n, int bound) {
  std::vector<int> c(n + 1, -bound);
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i)
    grid.push_back(a + (b - a) * i / 400);
  double best = 1e300;
  for (;;) {
    double worst = 0;
    for (double t : grid) {
      worst = std::max(worst, std::fabs(lambda - horner(c, t)));
      if (worst >= best)
        break;
    }
    best = std::min(best, worst);
    std::size_t j = 0;
    while (j <= n && c[j] == bound)
      c[j++] = -bound;
    if (j > n)
      return best;
    ++c[j];
  }
}

// int_{-1}^{1} |lambda - Q(x^2)| dx by the midpoint rule
double ball_l1(double lambda, const std::vector<int>& c) {
  const int steps = 20000;
  double sum = 0;
  for (int i = 0; i < steps; ++i) {
    const double x = (i + 0.5) / steps;
    sum += std::fabs(lambda - horner(c, x * x));
  }
  return 2 * sum / steps;
}

} // namespace

TEST(Oracle, DegreeZeroIsTheDistance) {
  const OracleResult r = oracle_best_int(ratio(2, 7), Interval{ratio(1, 4), ratio(1, 2)}, 0);
  EXPECT_EQ(r.value.lo, ratio(2, 7));
  EXPECT_EQ(r.value.hi, ratio(2, 7));
  EXPECT_EQ(r.q, Poly1());
}

TEST(Oracle, IntervalAgainstBruteForce) {
  for (unsigned n = 1; n <= 2; ++n) {
    const OracleResult r = oracle_best_int(ratio(2, 5), Interval{ratio(1, 5), ratio(3, 5)}, n);
    const double brute = brute_interval(0.4, 0.2, 0.6, n, 40);
    EXPECT_TRUE(r.q.is_integer());
    EXPECT_LE(brute, r.value.hi.get_d() * (1 + 1e-12));
    EXPECT_NEAR(r.value.hi.get_d(), brute, 1e-3 * brute) << "n = " << n;
  }
}

TEST(Oracle, IntervalMeetsTheHalfPointBound) {
  // q(1/2) lies in 2^-n Z, so |1/3 - q(1/2)| >= dist(2^n/3, Z) 2^-n = 1/(3 2^n)
  std::optional<Rational> prev;
  for (unsigned n = 0; n <= 4; ++n) {
    OracleOptions opt;
    opt.upper = prev;
    const OracleResult r = oracle_best_int(ratio(1, 3), Interval{ratio(1, 4), ratio(1, 2)}, n, opt);
    prev = r.value.hi;
    const Rational expect = ratio(1, 3) / pow(Rational(2), n);
    EXPECT_EQ(r.lattice_lower, expect);
    EXPECT_GE(r.value.lo, expect) << "n = " << n;
    EXPECT_GE(r.value.hi, expect) << "n = " << n;
    EXPECT_LT(r.value.hi - expect, expect / 1000000) << "n = " << n;
  }
}

TEST(Oracle, DiskDigitBoundHolds) {
  const Disk disk{Gaussian(ratio(3, 8)), ratio(1, 8)};
  std::optional<Rational> prev;
  for (unsigned n = 0; n <= 4; ++n) {
    OracleOptions opt;
    opt.upper = prev;
    const OracleResult r = oracle_best_int(ratio(1, 3), disk, n, opt);
    prev = r.value.hi;
    EXPECT_GE(r.value.lo, pow(ratio(1, 2), n + 2)) << "n = " << n;
    EXPECT_TRUE(r.qc.is_integer());
  }
}

TEST(Oracle, DiskDegreeOne) {
  // q = z leaves 1/2 - z, of modulus 1/4 on the boundary circle
  const OracleResult r = oracle_best_int(ratio(1, 2), Disk{Gaussian(ratio(1, 2)), ratio(1, 4)}, 1);
  EXPECT_LE(r.value.lo, ratio(1, 4));
  EXPECT_GE(r.value.hi, ratio(1, 4));
  EXPECT_LT(r.value.hi - r.value.lo, ratio(1, 1000000));
  EXPECT_EQ(r.qc, CPoly::x());
}

TEST(Oracle, GaussianRingIsNoWorse) {
  const Disk disk{Gaussian(ratio(1, 2), ratio(1, 4)), ratio(1, 4)};
  OracleOptions gauss;
  gauss.ring = CoeffRing::Gaussian;
  for (unsigned n = 0; n <= 2; ++n) {
    const OracleResult zi = oracle_best_int(ratio(1, 3), disk, n, gauss);
    const OracleResult z = oracle_best_int(ratio(1, 3), disk, n);
    EXPECT_LE(zi.value.lo, z.value.hi) << "n = " << n;
  }
}

TEST(Oracle, BallAgainstBruteForce) {
  const Ball ball{Rational(1), 1};
  for (unsigned n = 0; n <= 3; ++n) {
    const OracleResult r = oracle_best_int(ratio(1, 2), ball, n);
    EXPECT_TRUE(r.radial);
    double brute = 1e300;
    if (n < 2) {
      brute = std::min(ball_l1(0.5, {0}), ball_l1(0.5, {1}));
    } else {
      for (int c0 = -6; c0 <= 6; ++c0)
        for (int c1 = -12; c1 <= 12; ++c1)
          brute = std::min(brute, ball_l1(0.5, {c0, c1}));
    }
    EXPECT_NEAR(r.value.hi.get_d(), brute, 1e-6) << "n = " << n;
    EXPECT_LE(r.value.lo, r.value.hi);
  }
}

TEST(Oracle, RefusesUnsupportedDomains) {
  EXPECT_THROW(oracle_best_int(ratio(1, 3), Cube{ratio(1, 4), ratio(1, 2), 2}, 2), UnsupportedError);
}
