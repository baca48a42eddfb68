#include <cmath>

#include <gtest/gtest.h>

#include "intcheb/chebyshev.hpp"
#include "intcheb/norms.hpp"
#include "intcheb/roots.hpp"
#include "intcheb/scalar.hpp"

using namespace intcheb;

TEST(Scalar, RatioIsCanonical) {
  EXPECT_EQ(ratio(2, 2), Rational(1));
  EXPECT_EQ(ratio(6, -4), ratio(-3, 2));
  EXPECT_EQ(ratio(6, -4).get_den(), 2);
}

TEST(Scalar, ParseRational) {
  EXPECT_EQ(parse_rational("3/9"), ratio(1, 3));
  EXPECT_EQ(parse_rational("0.125"), ratio(1, 8));
  EXPECT_EQ(parse_rational("-0.0625"), ratio(-1, 16));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Scalar, DistToIntegers) {
  EXPECT_EQ(dist_to_integers(ratio(1, 3)), ratio(1, 3));
  EXPECT_EQ(dist_to_integers(ratio(7, 4)), ratio(1, 4));
  EXPECT_EQ(dist_to_integers(ratio(-5, 2)), ratio(1, 2));
}

TEST(Scalar, SqrtEnclosureBracketsTheRoot) {
  const Enclosure e = sqrt_enclosure(Rational(2));
  EXPECT_LE(e.lo * e.lo, Rational(2));
  EXPECT_GE(e.hi * e.hi, Rational(2));
  EXPECT_EQ(sqrt_enclosure(ratio(4, 9)).lo, ratio(2, 3));
}

TEST(Poly, ArithmeticAndCompose) {
  const Poly1 x = Poly1::x();
  const Poly1 p = x * x - Poly1::constant(Rational(1));
  EXPECT_EQ(p(Rational(3)), Rational(8));
  EXPECT_EQ(p.compose(x + Poly1::constant(Rational(1))), x * x + x * Rational(2));
  const auto [quo, rem] = p.divmod(x - Poly1::constant(Rational(1)));
  EXPECT_EQ(quo, x + Poly1::constant(Rational(1)));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(p.antiderivative().derivative(), p);
}

TEST(Chebyshev, MatchesCosineIdentity) {
  // T_n(cos t) = cos(n t), checked in double
  for (unsigned n = 0; n <= 20; ++n) {
    const Poly1 t = chebyshev_t(n);
    for (double th : {0.1, 0.7, 1.3, 2.9}) {
      const Rational c(std::cos(th));
      EXPECT_NEAR(t(c).get_d(), std::cos(n * th), 1e-9) << "n = " << n;
    }
  }
}

TEST(Chebyshev, ShiftedPolynomialHasLeadingTwoPowers) {
  // cheb(n, a, b) = T_n((2t - a - b)/(b - a)), leading coefficient 2^(2n-1)/(b-a)^n
  const Poly1 c = cheb(5, ratio(1, 4), Rational(1));
  EXPECT_EQ(c.leading(), pow(Rational(2), 9) / pow(ratio(3, 4), 5));
  EXPECT_EQ(c(Rational(1)), Rational(1));
  EXPECT_EQ(c(ratio(1, 4)), Rational(-1));
}

TEST(Chebyshev, ValueAtZeroClosedForm) {
  for (unsigned n = 0; n <= 40; ++n) {
    const Rational v = abs(cheb(n, ratio(1, 4), Rational(1))[0]) / pow(Rational(3), n);
    EXPECT_EQ(v, (1 + pow(ratio(1, 9), n)) / 2) << "n = " << n;
  }
}

TEST(Roots, IsolatesSimpleRoots) {
  // (t - 1/3)(t - 1/2)(t + 2)
  const Poly1 x = Poly1::x();
  const Poly1 f = (x - Poly1::constant(ratio(1, 3))) * (x - Poly1::constant(ratio(1, 2))) *
                  (x + Poly1::constant(Rational(2)));
  const auto roots = isolate_real_roots(f, Rational(0), Rational(1), ratio(1, 1000000));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LE(roots[0].lo, ratio(1, 3));
  EXPECT_GE(roots[0].hi, ratio(1, 3));
  EXPECT_LE(roots[1].lo, ratio(1, 2));
  EXPECT_GE(roots[1].hi, ratio(1, 2));
}

TEST(Norms, SupOfKnownPolynomials) {
  const Poly1 x = Poly1::x();
  const Poly1 f = x - x * x; // max 1/4 at 1/2
  const Enclosure e = sup_norm(f, Interval{Rational(0), Rational(1)});
  EXPECT_LE(e.lo, ratio(1, 4));
  EXPECT_GE(e.hi, ratio(1, 4));
  EXPECT_LT(e.hi - e.lo, ratio(1, 1000));
  // Chebyshev polynomials have sup 1 on their interval
  const Enclosure c = sup_norm_adaptive(cheb(12, ratio(1, 4), ratio(1, 2)), Interval{ratio(1, 4), ratio(1, 2)});
  EXPECT_LE(c.lo, Rational(1));
  EXPECT_GE(c.hi, Rational(1));
}

TEST(Norms, ExtensionRatioStaysBounded) {
  for (unsigned n : {2u, 5u, 16u, 40u}) {
    const Rational delta = 1 / Rational(static_cast<long>(n) * n);
    const Poly1 f = cheb(n, delta, Rational(1));
    const Enclosure whole = sup_norm_adaptive(f, Interval{Rational(0), Rational(1)});
    EXPECT_LE(whole.hi, Rational(10)) << "n = " << n;
    EXPECT_GE(whole.hi, Rational(1));
  }
}
