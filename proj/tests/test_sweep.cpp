#include <sstream>

#include <gtest/gtest.h>

#include "intcheb/sweep.hpp"

using namespace intcheb;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    out.push_back(l);
  return out;
}

SweepSpec disk_spec() {
  return SweepSpec::from_json(nlohmann::json::parse(R"({
    "module": "disk", "lambda": "1/3", "center": "3/8", "radius": "1/8", "q": 2,
    "n": [0, 8], "oracle": true, "oracle_max_n": 3, "fit": "geometric", "fit_from": 1
  })"));
}

} // namespace

TEST(Sweep, ParsesSpecAndDefaults) {
  const SweepSpec s = disk_spec();
  EXPECT_EQ(s.module, "disk");
  EXPECT_EQ(s.center.re, ratio(3, 8));
  EXPECT_EQ(s.radius, ratio(1, 8));
  EXPECT_EQ(s.n_to, 8u);
  EXPECT_EQ(s.req.precision_bits, 128);
  ASSERT_TRUE(s.fit.has_value());
  EXPECT_EQ(*s.fit, RateModel::Geometric);
}

TEST(Sweep, RejectsBadSpecs) {
  using nlohmann::json;
  EXPECT_THROW(SweepSpec::from_json(json::parse(R"({"module": "torus"})")), DomainError);
  EXPECT_THROW(SweepSpec::from_json(json::parse(R"({"module": "disk", "radius": "1/4", "n": [5, 2]})")),
               DomainError);
  EXPECT_THROW(SweepSpec::from_json(json::parse(
                   R"({"module": "cube", "a": "1/4", "b": "1/2", "dim": 2, "n": [0, 3], "oracle": true})")),
               DomainError);
  EXPECT_THROW(SweepSpec::from_json(json::parse(R"({"module": "disk", "radius": "1/4", "fit": "cubic"})")),
               DomainError);
}

TEST(Sweep, DiskSweepCsvLayout) {
  const SweepReport rep = run_sweep(disk_spec());
  ASSERT_EQ(rep.rows.size(), 9u);
  EXPECT_EQ(rep.violations, 0u);
  const auto l = lines(rep.csv());
  ASSERT_EQ(l.size(), 1 + 9 + 2);
  EXPECT_EQ(l[0], SweepReport::header);
  EXPECT_EQ(l[10].rfind("# fit,geometric,", 0), 0u);
  EXPECT_EQ(l.back(), "# sandwich_violations,0");
  for (std::size_t i = 1; i <= 9; ++i)
    EXPECT_EQ(std::count(l[i].begin(), l[i].end(), ','), 13) << l[i];
  // oracle rows stop at oracle_max_n
  EXPECT_TRUE(rep.rows[3].oracle.has_value());
  EXPECT_FALSE(rep.rows[4].oracle.has_value());
  for (const auto& r : rep.rows) {
    ASSERT_TRUE(r.lower_qadic.has_value());
    EXPECT_EQ(r.lower_qadic->lo, pow(ratio(1, 2), r.n + 2));
  }
}

TEST(Sweep, OutputIsDeterministic) {
  const SweepSpec s = disk_spec();
  EXPECT_EQ(run_sweep(s).csv(), run_sweep(s).csv());
  EXPECT_EQ(run_sweep(s).json().dump(), run_sweep(s).json().dump());
}

TEST(Sweep, CubeAndBallSweeps) {
  const SweepReport cube = run_sweep(SweepSpec::from_json(nlohmann::json::parse(R"({
    "module": "cube", "lambda": "1/3", "a": "1/4", "b": "1/2", "dim": 2, "n": [0, 5]
  })")));
  EXPECT_EQ(cube.violations, 0u);
  EXPECT_EQ(cube.rows.size(), 6u);
  const SweepReport ball = run_sweep(SweepSpec::from_json(nlohmann::json::parse(R"({
    "module": "ball", "lambda": "1/2", "r": "1", "dim": 1, "p": "1", "n": [1, 10],
    "oracle": true, "oracle_max_n": 3, "fit": "polynomial", "fit_from": 4
  })")));
  EXPECT_EQ(ball.violations, 0u);
  ASSERT_TRUE(ball.fit.has_value());
  EXPECT_EQ(ball.fit->n_min, 4u);
  const auto j = ball.json();
  EXPECT_EQ(j["rows"].size(), 10u);
  EXPECT_EQ(j["rows"][0]["oracle"]["provenance"], "oracle");
  EXPECT_EQ(j["fit"]["provenance"], "fitted");
}

TEST(Sweep, ViolationsAreRecorded) {
  SweepRow row;
  detail::check_below(row, Enclosure(ratio(1, 2), ratio(3, 4)), Enclosure(ratio(2, 3), Rational(1)), "lower");
  EXPECT_EQ(row.violations.size(), 1u);
  detail::check_below(row, Enclosure(ratio(1, 2)), Enclosure(ratio(1, 2), Rational(1)), "lower");
  EXPECT_EQ(row.violations.size(), 1u);
}
