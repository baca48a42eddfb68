#include <cmath>

#include <gtest/gtest.h>

#include "intcheb/ball.hpp"
#include "intcheb/rate.hpp"

using namespace intcheb;

namespace {

// integral over the d-ball of radius r of |lambda - Q(|x|^2)|, midpoint rule in double (d = 1 or 2)
double radial_l1(double lambda, const Poly1& q, double r, unsigned d) {
  const int steps = 200000;
  double sum = 0;
  for (int i = 0; i < steps; ++i) {
    const double rho = r * (i + 0.5) / steps;
    double v = 0;
    for (long j = q.degree(); j >= 0; --j)
      v = v * rho * rho + q[j].get_d();
    sum += std::fabs(lambda - v) * (d == 1 ? 2.0 : 2 * M_PI * rho);
  }
  return sum * r / steps;
}

// int_0^1 t^alpha f(t) dt, term by term
Rational weighted_integral(const Poly1& f, const Rational& alpha) {
  Rational acc = 0;
  for (long k = 0; k <= f.degree(); ++k)
    acc += f[k] / (Rational(k + 1) + alpha);
  return acc;
}

} // namespace

TEST(Ball, SphereAreas) {
  const double expect[] = {2, 2 * M_PI, 4 * M_PI, 2 * M_PI * M_PI, 8 * M_PI * M_PI / 3, M_PI * M_PI * M_PI};
  for (unsigned d = 1; d <= 6; ++d) {
    const Enclosure a = sphere_area(d).value();
    EXPECT_NEAR(a.lo.get_d(), expect[d - 1], 1e-12) << "d = " << d;
    EXPECT_LE(a.lo, a.hi);
  }
}

TEST(Ball, GramValueMatchesClosedForm) {
  const std::vector<Rational> alphas{0, ratio(1, 2), 1, ratio(3, 2), 2};
  for (const auto& a : alphas)
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned n = m; n <= 10; ++n) {
        const Lemma3Family f = lemma3_poly(a, m, n);
        EXPECT_EQ(f.value, lemma3_value(a, m, n)) << a << " " << m << " " << n;
        EXPECT_EQ(f.poly[0], Rational(1));
        for (unsigned k = 1; k < m; ++k)
          EXPECT_EQ(f.poly[k], Rational(0));
        EXPECT_EQ(weighted_integral(f.poly * f.poly, a), f.value);
      }
}

TEST(Ball, GramValueSmallCases) {
  // min_a int_0^1 (1 - a t)^2 dt = 1/4 at a = 3/2
  EXPECT_EQ(lemma3_value(0, 1, 1), ratio(1, 4));
  EXPECT_EQ(lemma3_poly(0, 1, 1).poly, (Poly1{Rational(1), ratio(-3, 2)}));
  for (unsigned n = 1; n <= 50; ++n)
    EXPECT_EQ(lemma3_value(0, 1, n), 1 / pow(Rational(n + 1), 2));
}

TEST(Ball, ClosedFormPolynomialAgrees) {
  for (unsigned n = 1; n <= 8; ++n) {
    const Lemma3Family g = lemma3_poly(1, 1, n);
    const Lemma3Family c = lemma3_poly_closed(1, 1, n);
    EXPECT_EQ(g.poly, c.poly) << "n = " << n;
  }
}

TEST(Ball, RadialErrorAgreesWithQuadrature) {
  const Poly1 q{Rational(0), Rational(1), Rational(-1)};
  for (unsigned d = 1; d <= 2; ++d) {
    const BallError e = radial_lp_error(ratio(1, 2), q, Rational(1), d, Rational(1));
    const double ref = radial_l1(0.5, q, 1.0, d);
    EXPECT_NEAR(e.integral.lo.get_d(), ref, 1e-6 * ref) << "d = " << d;
    EXPECT_LE(e.integral.lo, e.integral.hi);
  }
}

TEST(Ball, UnitPolynomialOnTheUnitInterval) {
  const UnitPolynomial x = find_unit_X(1);
  EXPECT_TRUE(x.x.is_integer());
  EXPECT_EQ(x.x(Rational(0)), Rational(0));
  EXPECT_EQ(x.x(Rational(1)), Rational(0));
  EXPECT_LT(x.rho.hi, Rational(1));
  // sampled values stay in [0, rho]
  for (int i = 0; i <= 1000; ++i) {
    const Rational t = ratio(i, 1000);
    EXPECT_GE(x.x(t), Rational(0));
    EXPECT_LE(x.x(t), x.rho.hi);
  }
}

TEST(Ball, RedistributionIsIntegerAndWithinEnvelope) {
  const UnitPolynomial x = find_unit_X(1);
  NormRequest req;
  req.tolerance = ratio(1, 100);
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned n : {m, m + 3, 12u}) {
      const Poly1 f = x.x.pow(m) * ratio(1, 3);
      const Lemma2Result r = lemma2_convert(f, x, m, n);
      EXPECT_TRUE(r.q.is_integer());
      EXPECT_TRUE(r.identity_holds);
      const Enclosure e = lemma2_sup_error(f, r, x, req);
      EXPECT_LE(e.hi, r.envelope) << "m = " << m << ", N = " << n;
      EXPECT_LE(e.hi, Rational(m) * pow(ratio(1, 16), n - m + 1) + 1 / pow(Rational(n), m));
    }
}

TEST(Ball, ConstructionSandwich) {
  const BallProblem prob{ratio(1, 2), Rational(1), 1, Rational(1)};
  std::vector<std::pair<unsigned, Enclosure>> series;
  for (unsigned n = 4; n <= 16; ++n) {
    const BallConstruction c = ball_construct(prob, n);
    EXPECT_TRUE(c.q.is_integer());
    EXPECT_LE(2 * c.q.degree(), static_cast<long>(n));
    EXPECT_LE(ball_lower(prob, n).hi, c.error.norm.lo) << "n = " << n;
    // the best integer constant has error 1
    EXPECT_LE(c.error.norm.hi, Rational(1));
    series.emplace_back(n, c.error.norm);
  }
  const RateEstimate fit = rate_fit(series, RateModel::Polynomial);
  EXPECT_GT(fit.estimate, 0.5);
}

TEST(Ball, ConstructionErrorAgreesWithQuadrature) {
  const BallProblem prob{ratio(1, 3), Rational(1), 2, Rational(1)};
  const BallConstruction c = ball_construct(prob, 8);
  const double ref = radial_l1(1.0 / 3, c.q, 1.0, 2);
  EXPECT_NEAR(c.error.integral.lo.get_d(), ref, 1e-5 * ref);
}

TEST(Ball, ObstructionForLargeRadius) {
  const KzObstruction one = korkin_zolotarev_obstruction(ratio(1, 3), Rational(2), 1, Rational(1));
  EXPECT_EQ(one.value.lo, ratio(4, 3));
  EXPECT_FALSE(one.radial_only);
  for (unsigned d = 2; d <= 4; ++d) {
    const KzObstruction k = korkin_zolotarev_obstruction(ratio(1, 3), Rational(2), d, Rational(2));
    EXPECT_GT(k.value.lo, 0);
    EXPECT_TRUE(k.radial_only);
  }
  EXPECT_THROW(korkin_zolotarev_obstruction(ratio(1, 3), Rational(1), 1, Rational(1)), DomainError);
}

TEST(Ball, KorkinZolotarevBound) {
  // monic quadratics have L1 norm at least 2^(1-2) = 1/2 on [-1, 1]
  EXPECT_EQ(kz_l1_bound(Rational(-1), Rational(1), 2, Rational(1)), ratio(1, 2));
}
