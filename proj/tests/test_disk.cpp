#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "intcheb/disk.hpp"

using namespace intcheb;

namespace {

// max of |lambda - q| over 2048 boundary points, in double
double boundary_max(const DiskProblem& p, const CPoly& q) {
  const std::complex<double> z0(p.center.re.get_d(), p.center.im.get_d());
  const std::complex<double> lam(p.lambda.re.get_d(), p.lambda.im.get_d());
  const double r = p.radius.get_d();
  double best = 0;
  for (int k = 0; k < 2048; ++k) {
    const std::complex<double> z = z0 + std::polar(r, 2 * M_PI * k / 2048);
    std::complex<double> acc = 0;
    for (long j = q.degree(); j >= 0; --j)
      acc = acc * z + std::complex<double>(q[j].re.get_d(), q[j].im.get_d());
    best = std::max(best, std::abs(lam - acc));
  }
  return best;
}

} // namespace

TEST(Disk, SandwichOnTheQuarterDisk) {
  const DiskProblem p{Gaussian(ratio(1, 3)), Gaussian(ratio(1, 2)), ratio(1, 4)};
  for (unsigned n = 0; n <= 20; ++n) {
    const CPoly q = disk_construct_any(p, n);
    EXPECT_TRUE(q.is_integer());
    EXPECT_LE(q.degree(), static_cast<long>(n));
    const Enclosure e = disk_error(p, q);
    EXPECT_LE(ratio(1, 3) * pow(ratio(1, 2), n), e.lo) << "n = " << n;
    EXPECT_LE(e.hi, Rational(n + 1) * pow(ratio(3, 4), n)) << "n = " << n;
    EXPECT_LE(e.hi, disk_upper_bound(p, n).hi);
    EXPECT_LE(disk_lower_growth(p, n).hi, e.lo);
  }
}

TEST(Disk, ErrorAgreesWithBoundarySampling) {
  const DiskProblem p{Gaussian(ratio(1, 3), ratio(1, 5)), Gaussian(ratio(1, 2)), ratio(1, 4)};
  for (unsigned n : {1u, 4u, 9u}) {
    const CPoly q = disk_construct_any(p, n);
    const Enclosure e = disk_error(p, q);
    const double sampled = boundary_max(p, q);
    EXPECT_LE(sampled, e.hi.get_d() * (1 + 1e-9));
    EXPECT_GE(sampled, e.lo.get_d() * (1 - 1e-3));
  }
}

TEST(Disk, ReflectedDiskGivesTheSameError) {
  const DiskProblem p{Gaussian(ratio(1, 3)), Gaussian(ratio(1, 2)), ratio(1, 4)};
  const DiskProblem m{Gaussian(ratio(1, 3)), Gaussian(ratio(-1, 2)), ratio(1, 4)};
  EXPECT_TRUE(is_canonical(p));
  EXPECT_FALSE(is_canonical(m));
  for (unsigned n : {2u, 6u}) {
    const Enclosure a = disk_error(p, disk_construct_any(p, n));
    const Enclosure b = disk_error(m, disk_construct_any(m, n));
    EXPECT_LE(a.lo, b.hi);
    EXPECT_LE(b.lo, a.hi);
  }
}

TEST(Disk, RatesOnTheQuarterDisk) {
  // rho1 = r/|z0| = 1/2, rho2 = |z0| + r = 3/4, and r - |z0|^2 < r |z0| so rho2 governs
  const DiskRates r = disk_rates({Gaussian(ratio(1, 3)), Gaussian(ratio(1, 2)), ratio(1, 4)});
  EXPECT_EQ(r.rho1_sq, ratio(1, 4));
  EXPECT_FALSE(r.rho1_dominates);
  EXPECT_EQ(r.rho.lo, ratio(3, 4));
  EXPECT_EQ(r.rho.hi, ratio(3, 4));
}

TEST(Disk, DigitCondition) {
  EXPECT_TRUE(digit_condition(ratio(1, 3), 2));  // 0.0101...
  EXPECT_FALSE(digit_condition(ratio(1, 4), 2)); // 0.01000...
  EXPECT_FALSE(digit_condition(ratio(1, 2), 2));
  EXPECT_FALSE(digit_condition(ratio(7, 8), 2)); // 0.111000...
  EXPECT_TRUE(digit_condition(ratio(2, 5), 3));  // 0.101210121...
}

TEST(Disk, QadicLowerBound) {
  const DiskProblem touching{Gaussian(ratio(1, 3)), Gaussian(ratio(3, 8)), ratio(1, 8)};
  for (unsigned n = 0; n <= 8; ++n) {
    const auto b = qadic_lower_bound(touching, 2, n);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(*b, pow(ratio(1, 2), n + 2));
    EXPECT_LE(*b, disk_error(touching, disk_construct_any(touching, n)).lo);
  }
  const DiskProblem inside{Gaussian(ratio(1, 3)), Gaussian(ratio(1, 4)), ratio(1, 8)};
  EXPECT_FALSE(qadic_lower_bound(inside, 2, 3).has_value());
  const DiskProblem bad_digits{Gaussian(ratio(1, 4)), Gaussian(ratio(3, 8)), ratio(1, 8)};
  EXPECT_FALSE(qadic_lower_bound(bad_digits, 2, 3).has_value());
}

TEST(Disk, PqsFamily) {
  for (auto [p, q, s] : {std::array<unsigned, 3>{1, 2, 1}, {3, 2, 2}, {2, 3, 1}})
    for (unsigned n = 0; n <= 16; ++n) {
      const Poly1 built = pqs_construct(Integer(p), q, s, n);
      EXPECT_TRUE(built.is_integer());
      EXPECT_TRUE(pqs_identity_holds(Integer(p), q, s, n, built));
    }
  EXPECT_THROW(pqs_construct(Integer(4), 2, 1, 3), DomainError);
}

TEST(Disk, PqsErrorAtTheEdgePoint) {
  // lambda - Q = (1/2)(1 - 2z)^n: at z = 0 the error is exactly 1/2
  const Poly1 built = pqs_construct(Integer(1), 2, 1, 7);
  EXPECT_EQ(ratio(1, 2) - built(Rational(0)), ratio(1, 2));
  EXPECT_EQ(ratio(1, 2) - built(ratio(1, 2)), Rational(0));
}
