// Acceptance run: one PASS/FAIL line per criterion, details on the following indented lines.
//
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "intcheb/ball.hpp"
#include "intcheb/chebyshev.hpp"
#include "intcheb/cube.hpp"
#include "intcheb/disk.hpp"
#include "intcheb/oracle.hpp"
#include "intcheb/rate.hpp"
#include "intcheb/remez.hpp"
#include "intcheb/sweep.hpp"

using namespace intcheb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    pass = false;
    detail << "  violation: " << why << '\n';
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(const Rational& v) { return format_decimal(v, 8); }

// 1. disk sandwich dist (1/2)^n <= E <= (n+1)(3/4)^n
void disk_sandwich(Outcome& o) {
  const auto t0 = Clock::now();
  const DiskProblem p{Gaussian(ratio(1, 3)), Gaussian(ratio(1, 2)), ratio(1, 4)};
  for (unsigned n = 0; n <= 30; ++n) {
    const Enclosure e = disk_error(p, disk_construct_any(p, n));
    const Rational lower = ratio(1, 3) * pow(ratio(1, 2), n);
    const Rational upper = Rational(n + 1) * pow(ratio(3, 4), n);
    if (!(lower <= e.lo && e.hi <= upper))
      o.fail("n = " + std::to_string(n) + ": " + num(lower) + " <= [" + num(e.lo) + ", " + num(e.hi) +
             "] <= " + num(upper));
  }
  const double t = seconds_since(t0);
  if (t >= 60)
    o.fail("runtime " + std::to_string(t) + " s");
  o.detail << "  n <= 30, runtime " << t << " s\n";
}

// 2. digit bound against the exact optima
void qadic_sharpness(Outcome& o) {
  const auto t0 = Clock::now();
  const Disk disk{Gaussian(ratio(3, 8)), ratio(1, 8)};
  OracleOptions opt;
  std::optional<Rational> prev;
  for (unsigned n = 0; n <= 6; ++n) {
    opt.upper = prev;
    const OracleResult r = oracle_best_int(ratio(1, 3), disk, n, opt);
    prev = r.value.hi;
    const Rational bound = pow(ratio(1, 2), n + 2);
    o.detail << "  n = " << n << ": E* in [" << r.value.lo.get_str() << ", " << num(r.value.hi) << "], nodes "
             << r.nodes << (r.exhaustive ? "" : ", stopped at the lattice bound") << '\n';
    if (r.value.lo < bound)
      o.fail("n = " + std::to_string(n) + ": E* lower end " + r.value.lo.get_str() + " < 2^-(n+2)");
  }
  const double t = seconds_since(t0);
  if (t >= 600)
    o.fail("runtime " + std::to_string(t) + " s");
  o.detail << "  runtime " << t << " s\n";
}

// 3. p/q^s identity
void pqs_identity(Outcome& o) {
  const std::vector<std::array<unsigned, 3>> cases{{1, 2, 1}, {3, 2, 2}, {2, 3, 1}};
  for (const auto& [p, q, s] : cases)
    for (unsigned n = 0; n <= 16; ++n) {
      const Poly1 built = pqs_construct(Integer(p), q, s, n);
      if (!pqs_identity_holds(Integer(p), q, s, n, built) || !built.is_integer())
        o.fail("(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(s) +
               "), n = " + std::to_string(n));
    }
  o.detail << "  3 families, n <= 16\n";
}

// 4. |C_n(0; 1/4, 1)| 3^-n
void chebyshev_growth(Outcome& o) {
  for (unsigned n = 0; n <= 64; ++n) {
    const Rational v = abs(cheb(n, ratio(1, 4), Rational(1))[0]) / pow(Rational(3), n);
    const Rational closed = (1 + pow(ratio(1, 9), n)) / 2;
    if (v < ratio(1, 2) || v > 1)
      o.fail("n = " + std::to_string(n) + " outside [1/2, 1]");
    if (v != closed)
      o.fail("n = " + std::to_string(n) + " differs from (1 + 3^-2n)/2");
  }
  o.detail << "  n <= 64, exact rationals, equal to (1 + 3^-2n)/2\n";
}

// 5. cube sandwich and monomial counts
void cube_sandwich(Outcome& o) {
  const auto t0 = Clock::now();
  for (unsigned d = 1; d <= 2; ++d) {
    const CubeProblem p{ratio(1, 3), ratio(1, 4), ratio(1, 2), d};
    std::optional<Rational> prev;
    for (unsigned n = 0; n <= 12; ++n) {
      const Enclosure e = cube_error(p, cube_construct(p, n));
      const Enclosure lower = cube_lower_bernstein(p, n);
      const Enclosure upper = cube_upper_bound(p, n);
      std::string tag = "d = " + std::to_string(d) + ", n = " + std::to_string(n);
      if (lower.hi > e.lo)
        o.fail(tag + ": lower bound above the constructed error");
      if (e.hi > upper.lo)
        o.fail(tag + ": constructed error above the upper bound");
      if (d == 1 && n <= 6) {
        OracleOptions opt;
        opt.upper = prev;
        const OracleResult r = oracle_best_int(p.lambda, p.cube(), n, opt);
        prev = r.value.hi;
        if (lower.hi > r.value.lo)
          o.fail(tag + ": lower bound above the oracle");
        if (r.value.lo > e.hi)
          o.fail(tag + ": oracle above the constructed error");
        o.detail << "  " << tag << ": lower " << num(lower.lo) << " <= E* " << num(r.value.hi) << " <= E "
                 << num(e.hi) << (r.exhaustive ? "" : " (search stopped at the lattice bound)") << '\n';
      }
    }
  }
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned n = 0; n <= 10; ++n) {
      // enumerate exponent vectors with |k| <= n
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
      if (monomial_count(d, n) != count)
        o.fail("monomial_count(" + std::to_string(d) + ", " + std::to_string(n) + ")");
    }
  o.detail << "  runtime " << seconds_since(t0) << " s\n";
}

// 6. Gram optimum against the product formula
void lemma3_exact(Outcome& o) {
  const std::vector<Rational> alphas{0, ratio(1, 2), 1, ratio(3, 2), 2};
  for (const auto& a : alphas)
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned n = m; n <= 12; ++n)
        if (lemma3_poly(a, m, n).value != lemma3_value(a, m, n))
          o.fail("alpha = " + a.get_str() + ", m = " + std::to_string(m) + ", n = " + std::to_string(n));
  for (unsigned n = 1; n <= 50; ++n)
    if (lemma3_value(0, 1, n) != 1 / pow(Rational(n + 1), 2))
      o.fail("value(0,1," + std::to_string(n) + ") != 1/(n+1)^2");
  o.detail << "  5 alphas, m <= 3, n <= 12, plus value(0,1,n) for n <= 50\n";
}

// 7. redistribution error bound
void lemma2_bound(Outcome& o) {
  const auto t0 = Clock::now();
  const UnitPolynomial x = find_unit_X(1);
  const Poly1 t = Poly1::x();
  if (x.x != (t * (t - Poly1::constant(Rational(1)))).pow(2))
    o.fail("the unit polynomial on [0, 1] is not t^2 (t - 1)^2");
  NormRequest req;
  req.tolerance = ratio(1, 1000);
  Rational worst = 0;
  auto check = [&](const Poly1& f, unsigned m, unsigned n, const std::string& tag) {
    const Lemma2Result r = lemma2_convert(f, x, m, n);
    const Enclosure e = lemma2_sup_error(f, r, x, req);
    const Rational bound = Rational(m) * pow(ratio(1, 16), n - m + 1) + 1 / pow(Rational(n), m);
    const std::string where = tag + ", m = " + std::to_string(m) + ", N = " + std::to_string(n);
    if (!r.q.is_integer() || !r.identity_holds)
      o.fail(where + ": integrality or identity");
    if (e.hi > bound)
      o.fail(where + ": " + num(e.hi) + " > " + num(bound));
    worst = std::max(worst, Rational(e.hi / bound));
  };
  for (unsigned m = 1; m <= 2; ++m) {
    for (unsigned n = m; n <= 64; ++n)
      check(x.x.pow(m) * ratio(1, 3), m, n, "f = X^m/3");
    // a digit that is not constant takes the general sup path, which is far slower at large N
    for (unsigned n : {m + 1, 8u, 16u, 32u})
      check(x.x.pow(m) * (Poly1::constant(ratio(1, 3)) + Poly1::x() * ratio(5, 7)), m, n, "f = X^m(1/3 + 5t/7)");
  }
  o.detail << "  rho <= " << num(x.rho.hi) << "; f = X^m/3 for N <= 64, f = X^m(1/3 + 5t/7) for N in {m+1, 8, 16, 32}\n"
           << "  largest error/bound " << num(worst) << ", runtime " << seconds_since(t0) << " s\n";
}

// 8. ball rate at d = 1, p = 1
void ball_rate(Outcome& o) {
  const auto t0 = Clock::now();
  const BallProblem prob{ratio(1, 2), Rational(1), 1, Rational(1)};
  std::vector<std::pair<unsigned, Enclosure>> series;
  Rational lo_scaled, hi_scaled;
  for (unsigned n = 8; n <= 40; ++n) {
    const BallConstruction c = ball_construct(prob, n);
    const Rational s = c.error.norm.hi * n;
    if (series.empty() || s < lo_scaled)
      lo_scaled = s;
    if (series.empty() || s > hi_scaled)
      hi_scaled = s;
    series.emplace_back(n, c.error.norm);
    const Enclosure lower = ball_lower(prob, n);
    if (lower.hi > c.error.norm.lo)
      o.fail("n = " + std::to_string(n) + ": lower bound above the construction");
  }
  const RateEstimate fit = rate_fit(series, RateModel::Polynomial);
  o.detail << "  E_n n in [" << num(lo_scaled) << ", " << num(hi_scaled) << "], kappa " << fit.estimate << '\n';
  if (sgn(lo_scaled) <= 0 || hi_scaled / lo_scaled > 20)
    o.fail("max/min of E_n n above 20");
  if (fit.estimate < 0.7 || fit.estimate > 1.3)
    o.fail("kappa outside [0.7, 1.3]");
  OracleOptions opt;
  for (unsigned n = 0; n <= 5; ++n) {
    const OracleResult r = oracle_best_int(prob.lambda, prob.ball(), n, opt);
    const Enclosure lower = ball_lower(prob, n);
    if (lower.hi > r.value.lo)
      o.fail("n = " + std::to_string(n) + ": lower bound above the oracle");
    if (n >= 1) {
      const BallConstruction c = ball_construct(prob, n);
      if (r.value.lo > c.error.norm.hi)
        o.fail("n = " + std::to_string(n) + ": oracle above the construction");
      o.detail << "  n = " << n << ": " << num(lower.lo) << " <= E* " << num(r.value.hi) << " <= E "
               << num(c.error.norm.hi) << '\n';
    }
  }
  const double t = seconds_since(t0);
  if (t >= 900)
    o.fail("runtime " + std::to_string(t) + " s");
  o.detail << "  runtime " << t << " s\n";
}

// 9. weighted minimax rates
void lemma5_rates(Outcome& o) {
  const auto t0 = Clock::now();
  for (unsigned n = 4; n <= 40; ++n) {
    const Lemma5Result r = lemma5_rate(Rational(0), 1, n);
    if (r.value.lo != 1 || r.value.hi != 1)
      o.fail("alpha = 0, n = " + std::to_string(n) + ": optimum is not exactly 1");
  }
  for (unsigned a = 1; a <= 2; ++a) {
    std::vector<std::pair<unsigned, Enclosure>> series;
    for (unsigned n = 4; n <= 40; ++n)
      series.emplace_back(n, lemma5_rate(Rational(a), 1, n).value);
    const RateEstimate fit = rate_fit(series, RateModel::Polynomial);
    const double lo = 2.0 * a * 0.85, hi = 2.0 * a * 1.15;
    o.detail << "  alpha = " << a << ": kappa " << fit.estimate << ", required [" << lo << ", " << hi << "]\n";
    if (fit.estimate < lo || fit.estimate > hi)
      o.fail("alpha = " + std::to_string(a) + ": kappa " + std::to_string(fit.estimate) + " outside the window");
  }
  o.detail << "  runtime " << seconds_since(t0) << " s\n";
}

// 10. the r >= 2 obstruction
void kz_obstruction(Outcome& o) {
  const auto t0 = Clock::now();
  const Rational lambda = ratio(1, 3);
  const Rational bound = 4 * dist_to_integers(lambda);
  const WeightedInterval w{Rational(-2), Rational(2), Rational(0), Rational(1)};
  // pieces of [-2, 2] for a cheap exact lower bound: sum_i |int_i g| <= int |g|
  std::vector<Rational> cuts;
  for (int i = 0; i <= 32; ++i)
    cuts.push_back(Rational(-2) + ratio(i, 8));
  std::size_t checked = 0, integrated = 0;
  std::vector<int> c(4, -8);
  Rational smallest = -1;
  for (;;) {
    // g(t) = lambda - q(t^2)
    std::vector<Rational> g(7, Rational(0));
    g[0] = lambda - c[0];
    for (unsigned k = 1; k <= 3; ++k)
      g[2 * k] = -Rational(c[k]);
    const Poly1 gp(g);
    const Poly1 prim = gp.antiderivative();
    Rational cheap = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      cheap += abs(prim(cuts[i + 1]) - prim(cuts[i]));
    Rational value = cheap;
    if (cheap < bound) {
      const Enclosure e = weighted_lp_integral(gp, w).value;
      ++integrated;
      value = e.lo;
      if (e.lo < bound)
        o.fail("q = " + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
               std::to_string(c[3]));
    }
    if (smallest < 0 || value < smallest)
      smallest = value;
    ++checked;
    std::size_t j = 0;
    while (j < 4 && c[j] == 8)
      c[j++] = -8;
    if (j == 4)
      break;
    ++c[j];
  }
  o.detail << "  " << checked << " polynomials, " << integrated << " needed a certified integral, smallest "
           << num(smallest) << " vs 4 dist = " << bound.get_str() << '\n';
  for (unsigned d = 1; d <= 3; ++d)
    for (const Rational& p : {Rational(1), Rational(2)}) {
      const KzObstruction k1 = korkin_zolotarev_obstruction(lambda, Rational(2), d, p);
      const KzObstruction k2 = korkin_zolotarev_obstruction(lambda, Rational(3), d, p);
      if (sgn(k1.value.lo) <= 0)
        o.fail("c(lambda, r, p) not positive for d = " + std::to_string(d));
      o.detail << "  c(1/3, 2, " << p.get_str() << ") for d = " << d << ": " << num(k1.value.lo)
               << (k1.radial_only ? " (radial)" : "") << "; r = 3: " << num(k2.value.lo) << '\n';
    }
  o.detail << "  runtime " << seconds_since(t0) << " s\n";
}

// 11. sup over [0,1] against sup over [1/n^2, 1]
void chebyshev_extension(Outcome& o) {
  const auto t0 = Clock::now();
  Rational worst = 0;
  for (unsigned n = 2; n <= 64; ++n) {
    const Rational delta = 1 / Rational(static_cast<long>(n) * n);
    const Poly1 f = cheb(n, delta, Rational(1));
    const Enclosure whole = sup_norm_adaptive(f, Interval{Rational(0), Rational(1)});
    const Enclosure part = sup_norm_adaptive(f, Interval{delta, Rational(1)});
    const Rational r = whole.hi / part.lo;
    worst = std::max(worst, r);
    if (r > 10)
      o.fail("n = " + std::to_string(n) + ": ratio " + num(r));
  }
  o.detail << "  2 <= n <= 64, largest ratio " << num(worst) << ", runtime " << seconds_since(t0) << " s\n";
}

// 12. two runs of the shipped sweeps give identical CSV
void determinism(Outcome& o, const std::string& spec_dir) {
  const auto t0 = Clock::now();
  for (const char* name : {"disk.json", "disk_qadic.json", "cube.json", "ball.json"}) {
    std::ifstream in(spec_dir + "/" + name);
    if (!in) {
      o.fail(std::string("missing spec ") + name);
      continue;
    }
    const SweepSpec spec = SweepSpec::from_json(nlohmann::json::parse(in));
    const SweepReport first = run_sweep(spec);
    const SweepReport second = run_sweep(spec);
    if (first.csv() != second.csv())
      o.fail(std::string(name) + ": CSV differs between runs");
    if (first.violations)
      o.fail(std::string(name) + ": " + std::to_string(first.violations) + " sandwich violations");
    o.detail << "  " << name << ": " << first.rows.size() << " rows, " << first.csv().size() << " bytes\n";
  }
  o.detail << "  runtime " << seconds_since(t0) << " s\n";
}

} // namespace

int main(int argc, char** argv) {
  const std::string spec_dir = argc > 1 ? argv[1] : "specs";
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"disk sandwich", disk_sandwich},
      {"digit bound sharpness", qadic_sharpness},
      {"p/q^s identity", pqs_identity},
      {"Chebyshev growth at 0", chebyshev_growth},
      {"cube sandwich", cube_sandwich},
      {"weighted L2 extremal value", lemma3_exact},
      {"redistribution bound", lemma2_bound},
      {"ball rate d=1 p=1", ball_rate},
      {"weighted minimax rates", lemma5_rates},
      {"r >= 2 obstruction", kz_obstruction},
      {"Chebyshev extension ratio", chebyshev_extension},
      {"determinism", [&](Outcome& o) { determinism(o, spec_dir); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ": " << criteria[i].first << '\n'
              << o.detail.str() << std::flush;
  }
  return all ? 0 : 1;
}
