#ifndef INTCHEB_SWEEP_HPP
#define INTCHEB_SWEEP_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intcheb/ball.hpp"
#include "intcheb/bigfloat.hpp"
#include "intcheb/cube.hpp"
#include "intcheb/disk.hpp"
#include "intcheb/oracle.hpp"
#include "intcheb/rate.hpp"

namespace intcheb {

/// One experiment: a problem family, an n range and what to compute per n.
struct SweepSpec {
  /// disk | cube | ball
  std::string module = "disk";
  Gaussian lambda;
  // disk
  Gaussian center;
  Rational radius;
  /// Base for the digit lower bound (0: none).
  unsigned q = 0;
  // cube
  Rational a, b;
  unsigned dim = 1;
  // ball
  Rational r;
  Rational p{1};

  unsigned n_from = 0;
  unsigned n_to = 0;
  bool oracle = false;
  /// Oracle rows stop here even when the module cap is higher.
  unsigned oracle_max_n = 4;
  std::optional<RateModel> fit;
  /// Smallest n used by the fit.
  unsigned fit_from = 1;
  NormRequest req;
  /// Echoed in the JSON output; no sweep currently samples at random.
  unsigned seed = 0;

  void validate() const {
    if (n_from > n_to)
      throw DomainError("sweep needs n_from <= n_to");
    if (module == "disk") {
      if (sgn(radius) <= 0)
        throw DomainError("disk sweep needs a positive radius");
    } else if (module == "cube") {
      CubeProblem{lambda.re, a, b, dim}.validate();
      if (sgn(lambda.im) != 0)
        throw DomainError("cube sweeps take a real lambda");
    } else if (module == "ball") {
      BallProblem{lambda.re, r, dim, p}.validate();
      if (sgn(lambda.im) != 0)
        throw DomainError("ball sweeps take a real lambda");
    } else {
      throw DomainError("unknown sweep module '" + module + "'");
    }
    if (oracle) {
      const unsigned cap = module == "ball" ? 5 : 6;
      if (oracle_max_n > cap)
        throw DomainError("oracle_max_n above the oracle cap of " + std::to_string(cap));
      if (module == "cube" && dim != 1)
        throw DomainError("the oracle runs on one-dimensional cubes only");
    }
  }

  static SweepSpec from_json(const nlohmann::json& j) {
    SweepSpec s;
    auto str = [&](const char* key, const std::string& fallback) {
      return j.contains(key) ? j.at(key).get<std::string>() : fallback;
    };
    s.module = str("module", "disk");
    s.lambda = parse_gaussian(str("lambda", "1/3"));
    s.center = parse_gaussian(str("center", "0"));
    s.radius = parse_rational(str("radius", "0"));
    s.q = j.value("q", 0u);
    s.a = parse_rational(str("a", "0"));
    s.b = parse_rational(str("b", "0"));
    s.dim = j.value("dim", 1u);
    s.r = parse_rational(str("r", "0"));
    s.p = parse_rational(str("p", "1"));
    if (j.contains("n")) {
      s.n_from = j.at("n").at(0).get<unsigned>();
      s.n_to = j.at("n").at(1).get<unsigned>();
    }
    s.oracle = j.value("oracle", false);
    s.oracle_max_n = j.value("oracle_max_n", s.module == "ball" ? 5u : 4u);
    if (j.contains("fit")) {
      const std::string f = j.at("fit").get<std::string>();
      if (f == "geometric")
        s.fit = RateModel::Geometric;
      else if (f == "polynomial")
        s.fit = RateModel::Polynomial;
      else if (f != "none")
        throw DomainError("unknown fit model '" + f + "'");
    }
    s.fit_from = j.value("fit_from", 1u);
    s.req.precision_bits = j.value("precision_bits", 128);
    if (j.contains("tolerance"))
      s.req.tolerance = parse_rational(j.at("tolerance").get<std::string>());
    s.seed = j.value("seed", 0u);
    s.validate();
    return s;
  }
};

struct SweepRow {
  unsigned n = 0;
  Enclosure construct;
  std::optional<Enclosure> upper;
  std::optional<Enclosure> lower_growth;
  std::optional<Enclosure> lower_qadic;
  std::optional<Enclosure> oracle;
  /// Coefficients of the constructed polynomial, and of the oracle's optimum.
  nlohmann::json poly;
  nlohmann::json oracle_poly;
  std::vector<std::string> violations;
};

struct SweepReport {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::optional<RateEstimate> fit;
  std::size_t violations = 0;

  static constexpr const char* header =
      "n,E_construct_lo,E_construct_hi,upper_bound,lower_growth,lower_qadic,oracle,"
      "E_construct_lo_exact,E_construct_hi_exact,upper_bound_exact,lower_growth_exact,lower_qadic_exact,"
      "oracle_exact,provenance";

  std::string csv() const {
    std::ostringstream os;
    os << header << '\n';
    for (const auto& r : rows) {
      auto dec = [](const std::optional<Rational>& v) { return v ? format_decimal(*v) : std::string(); };
      auto lo = [](const std::optional<Enclosure>& e) { return e ? std::optional<Rational>(e->lo) : std::nullopt; };
      auto hi = [](const std::optional<Enclosure>& e) { return e ? std::optional<Rational>(e->hi) : std::nullopt; };
      auto exact = [](const std::optional<Rational>& v, bool is_exact) {
        return v && is_exact ? v->get_str() : std::string();
      };
      auto point = [](const std::optional<Enclosure>& e) { return e && e->lo == e->hi; };
      const std::optional<Enclosure> c = r.construct;
      os << r.n << ',' << dec(c->lo) << ',' << dec(c->hi) << ',' << dec(hi(r.upper)) << ','
         << dec(lo(r.lower_growth)) << ',' << dec(lo(r.lower_qadic)) << ',' << dec(hi(r.oracle)) << ','
         << exact(c->lo, point(c)) << ',' << exact(c->hi, point(c)) << ',' << exact(hi(r.upper), point(r.upper)) << ','
         << exact(lo(r.lower_growth), point(r.lower_growth)) << ',' << exact(lo(r.lower_qadic), point(r.lower_qadic))
         << ',' << exact(hi(r.oracle), point(r.oracle)) << ',' << provenance(r) << '\n';
    }
    if (fit)
      os << "# fit," << to_string(fit->model) << ",estimate=" << format_double(fit->estimate)
         << ",residual=" << format_double(fit->residual) << ",uncertainty=" << format_double(fit->uncertainty)
         << ",n=" << fit->n_min << ".." << fit->n_max << ",provenance=fitted\n";
    os << "# sandwich_violations," << violations << '\n';
    return os.str();
  }

  nlohmann::json json() const {
    nlohmann::json out;
    out["module"] = spec.module;
    out["lambda"] = to_string(spec.lambda);
    out["seed"] = spec.seed;
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row;
      row["n"] = r.n;
      auto enc = [](const Enclosure& e, const char* source) {
        return nlohmann::json{{"lo", format_decimal(e.lo)},
                              {"hi", format_decimal(e.hi)},
                              {"lo_exact", e.lo.get_str()},
                              {"hi_exact", e.hi.get_str()},
                              {"provenance", source}};
      };
      row["E_construct"] = enc(r.construct, "constructed");
      if (r.upper)
        row["upper_bound"] = enc(*r.upper, "bound-formula");
      if (r.lower_growth)
        row["lower_growth"] = enc(*r.lower_growth, "bound-formula");
      if (r.lower_qadic)
        row["lower_qadic"] = enc(*r.lower_qadic, "bound-formula");
      if (r.oracle) {
        row["oracle"] = enc(*r.oracle, "oracle");
        row["oracle_poly"] = r.oracle_poly;
      }
      row["poly"] = r.poly;
      row["violations"] = r.violations;
      out["rows"].push_back(row);
    }
    if (fit)
      out["fit"] = {{"model", to_string(fit->model)},  {"estimate", fit->estimate},
                    {"residual", fit->residual},       {"uncertainty", fit->uncertainty},
                    {"n_min", fit->n_min},             {"n_max", fit->n_max},
                    {"provenance", "fitted"}};
    out["sandwich_violations"] = violations;
    return out;
  }

  static std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }

private:
  static std::string provenance(const SweepRow& r) {
    std::string s = "E_construct:constructed";
    if (r.upper)
      s += " upper_bound:bound-formula";
    if (r.lower_growth)
      s += " lower_growth:bound-formula";
    if (r.lower_qadic)
      s += " lower_qadic:bound-formula";
    if (r.oracle)
      s += " oracle:oracle";
    return s;
  }
};

namespace detail {

/// Certified lower <= value; a failure is recorded with its row.
inline void check_below(SweepRow& row, const std::optional<Enclosure>& lower, const Enclosure& value,
                        const std::string& what) {
  if (lower && lower->hi > value.lo)
    row.violations.push_back(what);
}

inline nlohmann::json coeff_json(const std::vector<std::string>& c) { return nlohmann::json(c); }

inline nlohmann::json coeff_json(const MultiPoly& q) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [idx, c] : q.terms())
    out.push_back({{"exponents", idx}, {"coeff", c.get_str()}});
  return out;
}

} // namespace detail

/// Runs one sweep; rows come out in n order.
inline SweepReport run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepReport rep;
  rep.spec = spec;
  OracleOptions oopt;
  oopt.req = spec.req;
  oopt.p = spec.p;
  for (unsigned n = spec.n_from; n <= spec.n_to; ++n) {
    SweepRow row;
    row.n = n;
    const bool want_oracle = spec.oracle && n <= spec.oracle_max_n;
    try {
      if (spec.module == "disk") {
        const DiskProblem prob{spec.lambda, spec.center, spec.radius};
        const CPoly q = disk_construct_any(prob, n);
        row.construct = disk_error(prob, q, spec.req);
        row.poly = detail::coeff_json(q.to_strings());
        row.upper = disk_upper_bound(canonicalize(prob).problem, n);
        row.lower_growth = disk_lower_growth(canonicalize(prob).problem, n);
        if (spec.q)
          if (auto b = qadic_lower_bound(prob, spec.q, n))
            row.lower_qadic = Enclosure(*b);
        if (want_oracle && sgn(spec.lambda.im) == 0) {
          const OracleResult o = oracle_best_int(spec.lambda.re, prob.disk(), n, oopt);
          row.oracle = o.value;
          row.oracle_poly = detail::coeff_json(o.qc.to_strings());
        }
      } else if (spec.module == "cube") {
        const CubeProblem prob{spec.lambda.re, spec.a, spec.b, spec.dim};
        const MultiPoly q = cube_construct(prob, n);
        row.construct = cube_error(prob, q, spec.req);
        row.poly = detail::coeff_json(q);
        row.upper = cube_upper_bound(prob, n);
        row.lower_growth = cube_lower_bernstein(prob, n);
        if (auto b = cube_lower_qadic(prob, n))
          row.lower_qadic = Enclosure(*b);
        if (want_oracle) {
          const OracleResult o = oracle_best_int(prob.lambda, prob.cube(), n, oopt);
          row.oracle = o.value;
          row.oracle_poly = detail::coeff_json(o.q.to_strings());
        }
      } else {
        const BallProblem prob{spec.lambda.re, spec.r, spec.dim, spec.p};
        const BallConstruction c = ball_construct(prob, n, spec.req);
        row.construct = c.error.norm;
        row.poly = detail::coeff_json(c.q.to_strings());
        row.lower_growth = ball_lower(prob, n, spec.req);
        if (want_oracle) {
          const OracleResult o = oracle_best_int(prob.lambda, prob.ball(), n, oopt);
          row.oracle = o.value;
          row.oracle_poly = detail::coeff_json(o.q.to_strings());
        }
      }
    } catch (const Error& e) {
      throw Error(spec.module + " sweep, n = " + std::to_string(n) + ": " + e.what());
    }
    detail::check_below(row, row.lower_growth, row.construct, "lower_growth > E_construct");
    detail::check_below(row, row.lower_qadic, row.construct, "lower_qadic > E_construct");
    if (row.upper)
      detail::check_below(row, row.construct, *row.upper, "E_construct > upper_bound");
    if (row.oracle) {
      detail::check_below(row, row.lower_growth, *row.oracle, "lower_growth > oracle");
      detail::check_below(row, row.lower_qadic, *row.oracle, "lower_qadic > oracle");
      // the optimum can coincide with the construction, so only a contradiction counts here
      if (row.oracle->lo > row.construct.hi)
        row.violations.push_back("oracle > E_construct");
    }
    rep.violations += row.violations.size();
    rep.rows.push_back(std::move(row));
  }
  if (spec.fit) {
    std::vector<std::pair<unsigned, Enclosure>> series;
    for (const auto& r : rep.rows)
      if (r.n >= spec.fit_from && sgn(r.construct.lo) > 0)
        series.emplace_back(r.n, r.construct);
    if (series.size() >= 5)
      rep.fit = rate_fit(series, *spec.fit);
  }
  return rep;
}

} // namespace intcheb

#endif // INTCHEB_SWEEP_HPP
