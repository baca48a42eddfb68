#include <cmath>

#include <gtest/gtest.h>

#include "intcheb/rate.hpp"

using namespace intcheb;

TEST(Rate, LogOfTinyRationals) {
  EXPECT_NEAR(log_rational(pow(ratio(1, 2), 2000)), -2000 * std::log(2.0), 1e-9);
  EXPECT_NEAR(log_rational(ratio(3, 7)), std::log(3.0 / 7), 1e-15);
  EXPECT_THROW(log_rational(Rational(0)), DomainError);
}

TEST(Rate, RecoversGeometricRate) {
  std::vector<std::pair<unsigned, Enclosure>> s;
  for (unsigned n = 0; n <= 20; ++n)
    s.emplace_back(n, Enclosure(3 * pow(ratio(1, 2), n)));
  const RateEstimate f = rate_fit(s, RateModel::Geometric);
  EXPECT_NEAR(f.estimate, 0.5, 1e-12);
  EXPECT_NEAR(f.log_constant, std::log(3.0), 1e-12);
  EXPECT_NEAR(f.residual, 0, 1e-12);
  EXPECT_NEAR(f.uncertainty, 0, 1e-12);
  EXPECT_EQ(f.n_min, 0u);
  EXPECT_EQ(f.n_max, 20u);
  EXPECT_EQ(f.points, 21u);
}

TEST(Rate, RecoversPolynomialRate) {
  std::vector<std::pair<unsigned, Enclosure>> s;
  for (unsigned n = 1; n <= 30; ++n)
    s.emplace_back(n, Enclosure(5 / pow(Rational(n), 2)));
  const RateEstimate f = rate_fit(s, RateModel::Polynomial);
  EXPECT_NEAR(f.estimate, 2, 1e-12);
  EXPECT_NEAR(f.log_constant, std::log(5.0), 1e-12);
}

TEST(Rate, UncertaintyReflectsEnclosureWidth) {
  // widths growing with n tilt the lo and hi fits away from the midpoint fit
  std::vector<std::pair<unsigned, Enclosure>> s;
  for (unsigned n = 1; n <= 10; ++n) {
    const Rational v = 1 / Rational(n);
    s.emplace_back(n, Enclosure(v * (1 - ratio(n, 100)), v * (1 + ratio(n, 100))));
  }
  const RateEstimate f = rate_fit(s, RateModel::Polynomial);
  EXPECT_NEAR(f.estimate, 1, 0.05);
  EXPECT_GT(f.uncertainty, 0);
}

TEST(Rate, RejectsBadSeries) {
  std::vector<std::pair<unsigned, Enclosure>> s;
  for (unsigned n = 1; n <= 4; ++n)
    s.emplace_back(n, Enclosure(Rational(1)));
  EXPECT_THROW(rate_fit(s, RateModel::Geometric), DomainError);
  s.emplace_back(5, Enclosure(Rational(0)));
  EXPECT_THROW(rate_fit(s, RateModel::Geometric), DomainError);
  s.back() = {0, Enclosure(Rational(1))};
  EXPECT_THROW(rate_fit(s, RateModel::Polynomial), DomainError);
}
