#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "intcheb/cube.hpp"

using namespace intcheb;

namespace {

double eval(const MultiPoly& q, const std::vector<double>& x) {
  double acc = 0;
  for (const auto& [k, v] : q.terms()) {
    double t = v.get_d();
    for (std::size_t j = 0; j < x.size(); ++j)
      t *= std::pow(x[j], k[j]);
    acc += t;
  }
  return acc;
}

// max of |lambda - q| over a uniform grid of the cube, in double
double grid_max(const CubeProblem& p, const MultiPoly& q, int steps) {
  const double a = p.a.get_d(), b = p.b.get_d(), lam = p.lambda.get_d();
  std::vector<double> x(p.dim);
  double best = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (j == p.dim) {
      best = std::max(best, std::fabs(lam - eval(q, x)));
      return;
    }
    for (int i = 0; i <= steps; ++i) {
      x[j] = a + (b - a) * i / steps;
      walk(j + 1);
    }
  };
  walk(0);
  return best;
}

} // namespace

TEST(Cube, RatesAgreeWithDoubleFormula) {
  const CubeRates r = cube_rates(ratio(1, 4), ratio(1, 2));
  const double sa = std::sqrt(0.25), sb = std::sqrt(0.5);
  const double expect = (sb - sa) / (sb + sa);
  EXPECT_NEAR(r.rho_cheb.lo.get_d(), expect, 1e-15);
  EXPECT_NEAR(r.rho_cheb.hi.get_d(), expect, 1e-15);
  // (a + b - b(b - a))^2 = 25/64 < 4ab = 1/2, so b governs
  EXPECT_FALSE(r.cheb_dominates);
  EXPECT_EQ(r.rho.hi, ratio(1, 2));
}

TEST(Cube, MonomialCountMatchesEnumeration) {
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned n = 0; n <= 10; ++n) {
      std::size_t count = 0;
      std::function<void(unsigned, unsigned)> walk = [&](unsigned left, unsigned budget) {
        if (left == 0) {
          ++count;
          return;
        }
        for (unsigned k = 0; k <= budget; ++k)
          walk(left - 1, budget - k);
      };
      walk(d, n);
      EXPECT_EQ(monomial_count(d, n), Integer(count)) << d << " " << n;
      EXPECT_EQ(multi_indices_upto(d, n).size(), count);
    }
  EXPECT_EQ(monomial_count(2, 3), 10);
}

TEST(Cube, SplitDegree) {
  EXPECT_EQ(split_degree(7, 3), (std::vector<unsigned>{3, 2, 2}));
  EXPECT_EQ(split_degree(2, 4), (std::vector<unsigned>{1, 1, 0, 0}));
}

TEST(Cube, UnitApproximationVanishesAtZero) {
  for (unsigned d = 1; d <= 3; ++d) {
    const UnitApprox u = cube_unit_approx(ratio(1, 4), ratio(1, 2), d, 6);
    EXPECT_EQ(u.poly(std::vector<Rational>(d, Rational(0))), Rational(0));
    EXPECT_LE(u.poly.total_degree(), 6);
    // 1 - U is the normalized Chebyshev product, so |1 - U| <= bound at the cube corners
    const Rational corner = 1 - u.poly(std::vector<Rational>(d, ratio(1, 2)));
    EXPECT_LE(abs(corner), u.bound);
  }
}

TEST(Cube, SandwichInOneAndTwoDimensions) {
  for (unsigned d = 1; d <= 2; ++d) {
    const CubeProblem p{ratio(1, 3), ratio(1, 4), ratio(1, 2), d};
    for (unsigned n = 0; n <= 10; ++n) {
      const MultiPoly q = cube_construct(p, n);
      EXPECT_TRUE(q.is_integer());
      EXPECT_LE(q.total_degree(), static_cast<long>(n));
      const Enclosure e = cube_error(p, q);
      EXPECT_LE(cube_lower_bernstein(p, n).hi, e.lo) << "d = " << d << ", n = " << n;
      EXPECT_LE(e.hi, cube_upper_bound(p, n).lo) << "d = " << d << ", n = " << n;
      if (auto qb = cube_lower_qadic(p, n))
        EXPECT_LE(*qb, e.lo);
    }
  }
}

TEST(Cube, ErrorAgreesWithGridSampling) {
  for (unsigned d = 1; d <= 2; ++d) {
    const CubeProblem p{ratio(2, 7), ratio(1, 5), ratio(1, 2), d};
    for (unsigned n : {2u, 5u}) {
      const MultiPoly q = cube_construct(p, n);
      const Enclosure e = cube_error(p, q);
      const double sampled = grid_max(p, q, d == 1 ? 4000 : 300);
      EXPECT_LE(sampled, e.hi.get_d() * (1 + 1e-9));
      EXPECT_GE(sampled, e.lo.get_d() * (1 - 1e-3));
    }
  }
}

TEST(Cube, QadicBoundNeedsUnitFractionEnd) {
  const CubeProblem half{ratio(1, 3), ratio(1, 4), ratio(1, 2), 1};
  ASSERT_TRUE(cube_lower_qadic(half, 3).has_value());
  EXPECT_EQ(*cube_lower_qadic(half, 3), ratio(1, 32));
  const CubeProblem other{ratio(1, 3), ratio(1, 4), ratio(2, 5), 1};
  EXPECT_FALSE(cube_lower_qadic(other, 3).has_value());
}

TEST(Cube, ValidationRejectsBadProblems) {
  EXPECT_THROW((CubeProblem{ratio(1, 3), ratio(1, 2), ratio(1, 4), 1}.validate()), DomainError);
  EXPECT_THROW((CubeProblem{ratio(1, 3), ratio(1, 2), ratio(3, 4), 1}.validate()), DomainError);
  EXPECT_THROW((CubeProblem{Rational(1), ratio(1, 4), ratio(1, 2), 1}.validate()), DomainError);
}
