// Command-line front end: constructions, bounds, the exact oracle, rate fits and sweeps.
//
// Exit status: 0 when every sandwich check passed, 1 on a sandwich violation,
// 2 on bad input or a library error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "intcheb/ball.hpp"
#include "intcheb/remez.hpp"
#include "intcheb/sweep.hpp"

using namespace intcheb;
using nlohmann::json;

namespace {

struct Common {
  int precision_bits = 128;
  std::string tolerance = "1/1000000000";
  std::string out = "csv";

  NormRequest request() const {
    NormRequest req;
    req.precision_bits = precision_bits;
    req.tolerance = parse_rational(tolerance);
    req.validate();
    return req;
  }
};

/// "k" or "a:b".
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const unsigned v = static_cast<unsigned>(std::stoul(s));
    return {v, v};
  }
  return {static_cast<unsigned>(std::stoul(s.substr(0, colon))),
          static_cast<unsigned>(std::stoul(s.substr(colon + 1)))};
}

int emit_report(const SweepReport& rep, const Common& c) {
  if (c.out == "json")
    std::cout << rep.json().dump(2) << '\n';
  else
    std::cout << rep.csv();
  return rep.violations == 0 ? 0 : 1;
}

/// Plain tables for the subcommands without a sandwich.
void emit_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                const Common& c) {
  if (c.out == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t k = 0; k < header.size(); ++k)
        o[header[k]] = r[k];
      arr.push_back(o);
    }
    std::cout << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t k = 0; k < header.size(); ++k)
    std::cout << header[k] << (k + 1 < header.size() ? "," : "\n");
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k)
      std::cout << r[k] << (k + 1 < r.size() ? "," : "\n");
}

std::string dec(const Rational& v) { return format_decimal(v); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer-coefficient polynomial approximation of constants"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--precision-bits", common.precision_bits, "Working precision of floating enclosures")
      ->check(CLI::Range(53, 65536));
  app.add_option("--tolerance", common.tolerance, "Relative width of sup and integral enclosures");
  app.add_option("--out", common.out, "Output format")->check(CLI::IsMember({"csv", "json"}));

  // sweeps over one module
  SweepSpec spec;
  std::string lambda = "1/3", center = "1/2", radius = "1/4", a = "1/4", b = "1/2", r = "1", p = "1";
  std::string range = "0:10", fit = "none";
  int oracle_max_n = -1;
  auto add_sweep_options = [&](CLI::App* sub) {
    sub->add_option("--lambda", lambda, "Constant to approximate");
    sub->add_option("--n", range, "Degree or range a:b");
    sub->add_option("--oracle-max-n", oracle_max_n, "Run the exact oracle up to this degree");
    sub->add_option("--fit", fit, "Rate model")->check(CLI::IsMember({"none", "geometric", "polynomial"}));
    sub->add_option("--fit-from", spec.fit_from, "Smallest n in the fit");
  };
  auto* disk = app.add_subcommand("disk", "Disk construction with growth and digit bounds");
  add_sweep_options(disk);
  disk->add_option("--center", center, "Centre re,im");
  disk->add_option("--radius", radius, "Radius");
  disk->add_option("--q", spec.q, "Base of the digit lower bound");
  auto* cube = app.add_subcommand("cube", "Cube construction on [a,b]^d");
  add_sweep_options(cube);
  cube->add_option("--a", a);
  cube->add_option("--b", b);
  cube->add_option("--dim", spec.dim);
  auto* ball = app.add_subcommand("ball", "Weighted L_p construction on the ball of radius r");
  add_sweep_options(ball);
  ball->add_option("--r", r);
  ball->add_option("--dim", spec.dim);
  ball->add_option("--p", p);

  auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a JSON file");
  std::string spec_file;
  sweep->add_option("--spec", spec_file, "Sweep spec")->required()->check(CLI::ExistingFile);

  auto* lemma3 = app.add_subcommand("lemma3", "Weighted L2 extremal problem with a forced value at 0");
  std::string alpha = "0";
  unsigned m = 1;
  lemma3->add_option("--alpha", alpha);
  lemma3->add_option("--m", m);
  lemma3->add_option("--n", range, "Degree or range a:b");

  auto* lemma5 = app.add_subcommand("lemma5", "Weighted minimax problem on [0,1]");
  bool symmetric = false;
  lemma5->add_option("--alpha", alpha);
  lemma5->add_option("--m", m);
  lemma5->add_option("--n", range, "Degree or range a:b");
  lemma5->add_flag("--symmetric", symmetric, "Weight |t|^alpha on [-1,1]");
  lemma5->add_option("--fit", fit, "Rate model")->check(CLI::IsMember({"none", "polynomial"}));

  auto* oracle = app.add_subcommand("oracle", "Exact best integer polynomial at small degree");
  std::string domain_text, norm = "sup", ring = "integer", upper;
  unsigned n_oracle = 0;
  oracle->add_option("--lambda", lambda)->required();
  oracle->add_option("--domain", domain_text, "disk:re,im:r | interval:a:b | cube:a:b:1 | ball:r:d | winterval:a:b:alpha:p")
      ->required();
  oracle->add_option("--n", n_oracle)->required();
  oracle->add_option("--norm", norm)->check(CLI::IsMember({"sup", "lp"}));
  oracle->add_option("--p", p, "Exponent for ball domains");
  oracle->add_option("--ring", ring)->check(CLI::IsMember({"integer", "gaussian"}));
  oracle->add_option("--upper", upper, "Known upper bound on the optimum");

  auto* ratefit = app.add_subcommand("rate-fit", "Fit E_n ~ C rho^n or C n^-kappa to a CSV of n,lo[,hi]");
  std::string input, model = "polynomial";
  ratefit->add_option("--input", input)->required()->check(CLI::ExistingFile);
  ratefit->add_option("--model", model)->check(CLI::IsMember({"geometric", "polynomial"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version requests exit 0; usage errors share the error code
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const NormRequest req = common.request();
    if (disk->parsed() || cube->parsed() || ball->parsed()) {
      spec.module = disk->parsed() ? "disk" : cube->parsed() ? "cube" : "ball";
      spec.lambda = parse_gaussian(lambda);
      spec.center = parse_gaussian(center);
      spec.radius = parse_rational(radius);
      spec.a = parse_rational(a);
      spec.b = parse_rational(b);
      spec.r = parse_rational(r);
      spec.p = parse_rational(p);
      std::tie(spec.n_from, spec.n_to) = parse_range(range);
      if (oracle_max_n >= 0) {
        spec.oracle = true;
        spec.oracle_max_n = static_cast<unsigned>(oracle_max_n);
      }
      if (fit == "geometric")
        spec.fit = RateModel::Geometric;
      else if (fit == "polynomial")
        spec.fit = RateModel::Polynomial;
      spec.req = req;
      return emit_report(run_sweep(spec), common);
    }

    if (sweep->parsed()) {
      std::ifstream in(spec_file);
      json j = json::parse(in);
      SweepSpec s = SweepSpec::from_json(j);
      if (!j.contains("precision_bits"))
        s.req.precision_bits = req.precision_bits;
      if (!j.contains("tolerance"))
        s.req.tolerance = req.tolerance;
      if (j.contains("format") && !app.get_option("--out")->count())
        common.out = j.at("format").get<std::string>();
      return emit_report(run_sweep(s), common);
    }

    if (lemma3->parsed()) {
      const auto [from, to] = parse_range(range);
      std::vector<std::vector<std::string>> rows;
      for (unsigned n = std::max(from, m); n <= to; ++n) {
        const Lemma3Family f = lemma3_poly_closed(parse_rational(alpha), m, n);
        const Enclosure s = lemma3_sup(f, req);
        rows.push_back({std::to_string(n), f.value.get_str(), dec(f.value), dec(s.lo), dec(s.hi)});
      }
      emit_table({"n", "value_exact", "value", "sup_lo", "sup_hi"}, rows, common);
      return 0;
    }

    if (lemma5->parsed()) {
      const auto [from, to] = parse_range(range);
      const Rational al = parse_rational(alpha);
      std::vector<std::vector<std::string>> rows;
      std::vector<std::pair<unsigned, Enclosure>> series;
      for (unsigned n = from; n <= to; ++n) {
        const Lemma5Result res = symmetric ? lemma5_rate_symmetric(al, m, n, req) : lemma5_rate(al, m, n, req);
        const std::string lower = (!symmetric && n >= 2) ? dec(lemma5_lower(al, m, n).lo) : "";
        rows.push_back({std::to_string(n), dec(res.value.lo), dec(res.value.hi), lower,
                        res.certified ? "certified" : "grid", res.converged ? "yes" : "no"});
        if (n >= 1 && sgn(res.value.lo) > 0)
          series.emplace_back(n, res.value);
      }
      emit_table({"n", "E_lo", "E_hi", "lower", "upper_kind", "converged"}, rows, common);
      if (fit == "polynomial" && series.size() >= 5) {
        const RateEstimate e = rate_fit(series, RateModel::Polynomial);
        std::cerr << "kappa=" << SweepReport::format_double(e.estimate)
                  << " residual=" << SweepReport::format_double(e.residual) << '\n';
      }
      return 0;
    }

    if (oracle->parsed()) {
      OracleOptions opt;
      opt.req = req;
      opt.p = parse_rational(p);
      opt.ring = ring == "gaussian" ? CoeffRing::Gaussian : CoeffRing::Integer;
      if (!upper.empty())
        opt.upper = parse_rational(upper);
      const Domain dom = parse_domain(domain_text);
      const bool lp_domain = std::holds_alternative<Ball>(dom) || std::holds_alternative<WeightedInterval>(dom);
      if ((norm == "lp") != lp_domain)
        throw DomainError("norm " + norm + " does not match the domain");
      const OracleResult res = oracle_best_int(parse_rational(lambda), dom, n_oracle, opt);
      json o;
      o["E_lo"] = dec(res.value.lo);
      o["E_hi"] = dec(res.value.hi);
      o["E_lo_exact"] = res.value.lo.get_str();
      o["E_hi_exact"] = res.value.hi.get_str();
      std::vector<std::string> coeffs;
      for (const auto& c : res.coeffs)
        coeffs.push_back(c.get_str());
      o["coeffs"] = coeffs;
      o["radial"] = res.radial;
      o["nodes"] = res.nodes;
      o["certified_candidates"] = res.certified;
      o["exhaustive"] = res.exhaustive;
      o["box"] = res.box.log;
      if (common.out == "json") {
        std::cout << o.dump(2) << '\n';
      } else {
        std::string joined;
        for (const auto& c : coeffs)
          joined += (joined.empty() ? "" : " ") + c;
        emit_table({"n", "E_lo", "E_hi", "coeffs", "nodes", "exhaustive"},
                   {{std::to_string(n_oracle), dec(res.value.lo), dec(res.value.hi), joined,
                     std::to_string(res.nodes), res.exhaustive ? "yes" : "no"}},
                   common);
      }
      return 0;
    }

    if (ratefit->parsed()) {
      std::ifstream in(input);
      std::string line;
      std::vector<std::pair<unsigned, Enclosure>> series;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || !std::isdigit(static_cast<unsigned char>(line[0])))
          continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
          cells.push_back(cell);
        if (cells.size() < 2)
          throw DomainError("rate-fit rows need n and a value");
        const Rational lo = parse_rational(cells[1]);
        const Rational hi = cells.size() > 2 && !cells[2].empty() ? parse_rational(cells[2]) : lo;
        series.emplace_back(static_cast<unsigned>(std::stoul(cells[0])), Enclosure(lo, hi));
      }
      const RateEstimate e =
          rate_fit(series, model == "geometric" ? RateModel::Geometric : RateModel::Polynomial);
      emit_table({"model", "estimate", "log_constant", "residual", "uncertainty", "n_min", "n_max"},
                 {{to_string(e.model), SweepReport::format_double(e.estimate),
                   SweepReport::format_double(e.log_constant), SweepReport::format_double(e.residual),
                   SweepReport::format_double(e.uncertainty), std::to_string(e.n_min), std::to_string(e.n_max)}},
                 common);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
