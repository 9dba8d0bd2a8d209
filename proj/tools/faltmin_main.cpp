// faltmin: command-line front end for the Faltings-height minima library.
//
// Commands: eval, height, lower, upper, scan, verify.
// Exit codes: 0 success, 2 domain/parse error, 3 non-convergence,
//             4 certificate failure.

#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "faltmin/bounds.hpp"
#include "faltmin/constants.hpp"
#include "faltmin/disk.hpp"
#include "faltmin/distortion.hpp"
#include "faltmin/errors.hpp"
#include "faltmin/heights.hpp"
#include "faltmin/modular.hpp"
#include "faltmin/polynomial.hpp"
#include "faltmin/qseries.hpp"
#include "faltmin/spectrum.hpp"
#include "faltmin/tau.hpp"

namespace {

using faltmin::IntegerPolynomial;
using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

// ---------------------------------------------------------------- utilities

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Accepts "a+bi" with decimal literals: "1+0i", "-2.5", "0.5-0.866i", "3i",
// "i", "-i", "1e-3+2e4i".
cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::domain_error("empty complex literal");
  auto parse_real = [](const std::string& text) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::domain_error("trailing junk in number");
    return v;
  };
  try {
    if (s.back() == 'i') {
      std::string body = s.substr(0, s.size() - 1);
      // Split at the last +/- that is not the leading sign and not part of
      // an exponent ("e+", "E-").
      std::size_t split = std::string::npos;
      for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') &&
            body[i - 1] != 'e' && body[i - 1] != 'E') {
          split = i;
          break;
        }
      }
      if (split == std::string::npos) return cplx(0.0, parse_real(body));
      return cplx(parse_real(body.substr(0, split)), parse_real(body.substr(split)));
    }
    std::size_t used = 0;
    double re = std::stod(s, &used);
    if (used != s.size()) throw std::domain_error("trailing junk in number");
    return cplx(re, 0.0);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("unparseable complex literal: " + raw);
  } catch (const std::out_of_range&) {
    throw std::domain_error("complex literal out of range: " + raw);
  }
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json height_json(const faltmin::HeightResult& h) {
  return json{{"archimedean", h.archimedean},
              {"finite", h.finite},
              {"total", h.total},
              {"error_estimate", h.error_estimate}};
}

json entry_json(const faltmin::SpectrumEntry& e) {
  return json{{"label", e.label},
              {"coefficients", e.poly.coefficients()},
              {"degree", e.poly.degree()},
              {"height", height_json(e.height)}};
}

std::string entries_csv(const std::vector<faltmin::SpectrumEntry>& entries) {
  std::string out = "label,coefficients,degree,height,error_estimate\n";
  for (const auto& e : entries) {
    std::string coeffs;
    for (std::size_t i = 0; i < e.poly.coefficients().size(); ++i) {
      if (i) coeffs += ' ';
      coeffs += std::to_string(e.poly.coefficients()[i]);
    }
    char line[256];
    std::snprintf(line, sizeof line, "\"%s\",\"%s\",%d,%.17g,%.3g\n",
                  e.label.c_str(), coeffs.c_str(), e.poly.degree(),
                  e.height.total, e.height.error_estimate);
    out += line;
  }
  return out;
}

struct OutputSink {
  bool as_json = false;
  std::string out_dir;
  std::string command;
  std::string inputs_hash;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  // Prints the human/JSON view and, with --out, writes results.json (exact
  // payload, deterministic bytes) plus manifest.json (carries timings).
  void finish(const json& results, const std::string& human,
              const std::optional<std::string>& csv = std::nullopt) const {
    if (as_json) {
      std::cout << results.dump(2) << "\n";
    } else {
      std::cout << human;
    }
    if (out_dir.empty()) return;
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> outputs;
    {
      fs::path p = fs::path(out_dir) / "results.json";
      std::ofstream f(p, std::ios::trunc);
      f << results.dump(2) << "\n";
      outputs.push_back(p.string());
    }
    if (csv) {
      fs::path p = fs::path(out_dir) / "results.csv";
      std::ofstream f(p, std::ios::trunc);
      f << *csv;
      outputs.push_back(p.string());
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    json manifest{{"command", command},
                  {"inputs_hash", inputs_hash},
                  {"tool_version", faltmin::kToolVersion},
                  {"timings", json{{"total_ms", ms}}},
                  {"outputs", outputs}};
    fs::path p = fs::path(out_dir) / "manifest.json";
    std::ofstream f(p, std::ios::trunc);
    f << manifest.dump(2) << "\n";
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------- commands

int cmd_eval(const std::string& what, const std::string& point_text,
             const OutputSink& sink) {
  cplx point = parse_complex(point_text);
  json results{{"command", "eval"}, {"function", what}, {"point", complex_json(point)}};
  cplx value;
  double tail = 0.0;
  if (what == "ghyp") {
    value = faltmin::g_hyp(point);
  } else {
    faltmin::TauPoint tau(point.real(), point.imag());
    if (what == "j") {
      value = faltmin::j_invariant(tau);
    } else if (what == "ginf") {
      value = faltmin::g_infinity(tau);
    } else if (what == "delta") {
      faltmin::QSeriesEval e = faltmin::delta_eval(tau);
      value = e.value;
      tail = e.tail_bound;
    } else {
      faltmin::EisensteinKind kind = what == "E2"      ? faltmin::EisensteinKind::E2
                                     : what == "E4"    ? faltmin::EisensteinKind::E4
                                     : what == "E6"    ? faltmin::EisensteinKind::E6
                                                       : faltmin::EisensteinKind::E2Star;
      faltmin::QSeriesEval e = faltmin::eisenstein(kind, tau);
      value = e.value;
      tail = e.tail_bound;
    }
  }
  results["value"] = complex_json(value);
  results["tail_bound"] = tail;
  std::string human = what + "(" + point_text + ") = " + fmt(value.real());
  if (value.imag() != 0.0) human += " + " + fmt(value.imag()) + "i";
  if (tail > 0.0) human += "  (series tail <= " + fmt(tail) + ")";
  human += "\n";
  sink.finish(results, human);
  return 0;
}

int cmd_height(const std::string& spec, const OutputSink& sink) {
  IntegerPolynomial poly = IntegerPolynomial::parse(spec);
  faltmin::HeightResult h = faltmin::faltings_height(poly);
  json results{{"command", "height"},
               {"poly", poly.coeff_string()},
               {"pretty", poly.pretty()},
               {"degree", poly.degree()},
               {"height", height_json(h)}};
  std::string human = poly.pretty() + ":\n  archimedean " + fmt(h.archimedean) +
                      "\n  finite      " + fmt(h.finite) + "\n  total       " +
                      fmt(h.total) + "  (+/- " + fmt(h.error_estimate) + ")\n";
  sink.finish(results, human);
  return 0;
}

json lower_report_json(const std::string& name,
                       const faltmin::LowerBoundReport& rep,
                       std::optional<double> published) {
  json argmin = json::array();
  for (cplx z : rep.argmin) argmin.push_back(complex_json(z));
  json exps = json::array();
  for (const auto& m : rep.family.members()) exps.push_back(m.exponent);
  json out{{"name", name},
           {"exponents", exps},
           {"infimum", rep.infimum},
           {"argmin", argmin},
           {"grid_resolution", rep.grid_resolution},
           {"refinement_iterations", rep.refinement_iterations}};
  if (published) out["published"] = *published;
  return out;
}

int cmd_lower(const std::string& replay_path, const std::string& config_path,
              int grid, int workers, const OutputSink& sink) {
  json results{{"command", "lower"}, {"families", json::array()}};
  std::string human;
  auto run_replay = [&](const json& family) {
    std::string name = family.value("name", std::string("family"));
    std::vector<faltmin::SectionMember> members;
    const json& polys = family.at("polys");
    const json& exps = family.at("exponents");
    if (polys.size() != exps.size()) {
      throw std::domain_error("family needs one exponent per polynomial");
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
      members.push_back(faltmin::SectionMember{
          IntegerPolynomial::parse(polys[i].get<std::string>()),
          exps[i].get<double>()});
    }
    faltmin::SectionFamily section(std::move(members));
    faltmin::LowerBoundReport rep = faltmin::global_infimum(section, grid, workers);
    std::optional<double> published;
    if (family.contains("published_infimum")) {
      published = family["published_infimum"].get<double>();
    }
    results["families"].push_back(lower_report_json(name, rep, published));
    human += name + ": infimum " + fmt(rep.infimum);
    if (published) human += "  (published " + fmt(*published) + ")";
    human += "\n";
  };

  if (!replay_path.empty()) {
    std::ifstream in(replay_path);
    if (!in) throw std::domain_error("cannot open replay file: " + replay_path);
    json doc = json::parse(in);
    for (const json& family : doc.at("families")) run_replay(family);
  } else {
    std::ifstream in(config_path);
    if (!in) throw std::domain_error("cannot open config file: " + config_path);
    json doc = json::parse(in);
    int used_grid = doc.value("grid", grid);
    std::vector<IntegerPolynomial> polys;
    for (const json& p : doc.at("polys")) {
      polys.push_back(IntegerPolynomial::parse(p.get<std::string>()));
    }
    if (doc.contains("replay_exponents")) {
      json family{{"name", "config"},
                  {"polys", doc["polys"]},
                  {"exponents", doc["replay_exponents"]}};
      int saved = grid;
      grid = used_grid;
      run_replay(family);
      grid = saved;
    } else {
      std::vector<double> init = doc.at("init_exponents").get<std::vector<double>>();
      faltmin::LowerBoundReport rep =
          faltmin::optimize_exponents(polys, init, used_grid, workers);
      results["families"].push_back(lower_report_json("config", rep, std::nullopt));
      human += "config: optimized infimum " + fmt(rep.infimum) + "\n";
    }
  }
  sink.finish(results, human);
  return 0;
}

int cmd_upper(std::optional<double> center, std::vector<double> sweep, int nodes,
              double tol, int workers, const OutputSink& sink) {
  json results{{"command", "upper"}};
  std::string human;
  faltmin::UpperBoundReport rep{};
  if (center) {
    rep = faltmin::circle_integral(*center, nodes, workers);
  } else {
    rep = faltmin::optimize_center(sweep[0], sweep[1], workers);
    results["sweep"] = json{{"lo", sweep[0]}, {"hi", sweep[1]}};
    human += "best center " + fmt(rep.center) + "\n";
  }
  results["center"] = rep.center;
  results["value"] = rep.value;
  results["nodes"] = rep.nodes;
  results["node_doubling_delta"] = rep.node_doubling_delta;
  human += "circle integral at " + fmt(rep.center) + " = " + fmt(rep.value) +
           "  (" + std::to_string(rep.nodes) + " nodes, doubling delta " +
           fmt(rep.node_doubling_delta) + ")\n";

  if (rep.center > 0.0 && rep.center < 2.0) {
    double hhat = faltmin::circle_integral_hhat(rep.center);
    double gap = std::abs(hhat - rep.value);
    results["hhat_value"] = hhat;
    results["hhat_gap"] = gap;
    human += "hhat identity value = " + fmt(hhat) + "  (gap " + fmt(gap) + ")\n";
    if (gap > std::max(tol, 1e-9)) {
      throw faltmin::CertificateFailure(
          "direct quadrature and hhat identity disagree beyond tolerance");
    }
    if (rep.center != 1.0) {
      faltmin::UpperBoundReport cert = faltmin::certified_upper_bound(rep.center);
      results["certified_value"] = cert.value;
      human += "certified majorant   = " + fmt(cert.value) + "\n";
    }
  }
  sink.finish(results, human);
  return 0;
}

int cmd_scan(int cyclotomic_max, int max_degree, int max_coeff, double threshold,
             const std::string& checkpoint, bool want_report, double report_lower,
             double report_upper, int workers, bool as_csv, const OutputSink& sink) {
  std::vector<faltmin::SpectrumEntry> entries;
  json results{{"command", "scan"}};
  if (cyclotomic_max > 0) {
    entries = faltmin::scan_cyclotomics(cyclotomic_max);
    results["cyclotomic_max"] = cyclotomic_max;
  } else {
    faltmin::ScanOptions opts;
    opts.workers = workers;
    opts.checkpoint_path = checkpoint;
    entries = faltmin::scan_polynomials(max_degree, max_coeff, threshold, opts);
    results["max_degree"] = max_degree;
    results["max_coeff"] = max_coeff;
    results["threshold"] = threshold;
  }
  json list = json::array();
  for (const auto& e : entries) list.push_back(entry_json(e));
  results["entries"] = list;

  std::string csv = entries_csv(entries);
  std::string human = csv;
  if (want_report) {
    faltmin::SpectrumReport report =
        faltmin::spectrum_report(entries, report_lower, report_upper);
    json iso = json::array();
    for (const auto& e : report.isolated) iso.push_back(entry_json(e));
    json unc = json::array();
    for (const auto& e : report.uncertain) unc.push_back(entry_json(e));
    results["report"] = json{{"isolated", iso},
                             {"uncertain", unc},
                             {"lower_bound", report.lower_bound},
                             {"upper_bound", report.upper_bound},
                             {"density_interval_start", report.density_interval_start}};
    human += "\nisolated heights below bounds:\n";
    for (const auto& e : report.isolated) {
      human += "  " + fmt(e.height.total) + "  " + e.label + "\n";
    }
    human += "uncertain (between bounds):\n";
    for (const auto& e : report.uncertain) {
      human += "  " + fmt(e.height.total) + "  " + e.label + "\n";
    }
    human += "heights dense from " + fmt(report.density_interval_start) + " on\n";
  }
  if (as_csv) {
    sink.finish(results, csv, csv);
  } else {
    sink.finish(results, human, csv);
  }
  return 0;
}

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double limit = 0.0;
};

void add_certificate(std::vector<Check>& checks, const faltmin::CertificateReport& r) {
  checks.push_back(Check{r.name, r.pass, r.max_violation, 1e-9});
}

int cmd_verify(const std::string& suite, int samples, const OutputSink& sink) {
  std::vector<Check> checks;
  bool want_all = suite == "all";

  if (want_all || suite == "constants") {
    faltmin::CertificateConstants c = faltmin::constants();
    auto closed_vs = [&](const std::string& name, double got, double want,
                         double tol) {
      checks.push_back(Check{name, std::abs(got - want) <= tol,
                             std::abs(got - want), tol});
    };
    checks.push_back(Check{"chart_derivative_range",
                           c.f_prime_0 >= 237698.0 && c.f_prime_0 <= 237699.0,
                           c.f_prime_0, 237699.0});
    double quad = faltmin::chart_derivative_at_zero_quadrature();
    closed_vs("chart_derivative_quadrature", quad / c.f_prime_0, 1.0, 1e-8);
    closed_vs("gamma0_ninth_power", std::pow(c.gamma0, 9) / c.f_prime_0, 1.0, 1e-12);
    checks.push_back(Check{"eps1_range",
                           c.eps1 >= 1.0 / 4573.0 && c.eps1 <= 1.0 / 4572.0,
                           c.eps1, 1.0 / 4572.0});
    closed_vs("r0_closed_form", c.r0, 2.0 - faltmin::sqrt3(), 1e-15);
    closed_vs("kappa_at_one", faltmin::kappa(1.0), c.kappa1, 1e-12);
    closed_vs("zhang_constant", faltmin::zhang_bound(), -1.2425268622, 1e-9);
    double gamma = faltmin::kGammaOneThird;
    double closed = -0.5 * std::log(3.0 / std::pow(2.0 * faltmin::kPi, 3) *
                                    std::pow(gamma, 6));
    closed_vs("height_at_zero_closed_form", closed,
              faltmin::g_hyp(cplx(0.0, 0.0)) / 12.0, 1e-10);
  }
  if (want_all || suite == "distortion") {
    add_certificate(checks, faltmin::verify_koebe(samples));
    add_certificate(checks, faltmin::verify_approximation(samples));
    add_certificate(checks, faltmin::verify_j_log_derivative(samples / 2 + 1));
    add_certificate(checks, faltmin::verify_unit_circle_cube_law(samples));
  }
  if (want_all || suite == "propB") {
    add_certificate(checks, faltmin::verify_linear_model(std::max(samples, 10000)));
  }
  if (want_all || suite == "special_values") {
    auto near = [&](const std::string& name, double got, double want, double tol) {
      checks.push_back(Check{name, std::abs(got - want) <= tol,
                             std::abs(got - want), tol});
    };
    faltmin::TauPoint i_point(0.0, 1.0);
    near("j_at_i", std::abs(faltmin::j_invariant(i_point) - 1728.0), 0.0, 1e-8);
    faltmin::TauPoint rho_point(-0.5, faltmin::sqrt3() / 2.0);
    near("j_at_rho", std::abs(faltmin::j_invariant(rho_point)), 0.0, 1e-8);
    near("eisenstein_star_at_i",
         std::abs(faltmin::eisenstein(faltmin::EisensteinKind::E2Star, i_point).value),
         0.0, 1e-12);
    near("height_of_zero", faltmin::g_hyp(cplx(0.0, 0.0)) / 12.0,
         -0.748752485503338, 1e-12);
    near("height_of_one",
         faltmin::faltings_height(IntegerPolynomial({-1, 1})).total, -0.74862817,
         1e-7);
    near("height_of_sixth_root",
         faltmin::faltings_height(faltmin::cyclotomic(6)).total, -0.74862517, 1e-7);
    near("height_of_tenth_root",
         faltmin::faltings_height(faltmin::cyclotomic(10)).total, -0.74862366, 1e-7);
    near("height_of_degree8_minimum",
         faltmin::faltings_height(IntegerPolynomial({1, -1, 1, -1, 1, -1, 2, -2, 1}))
             .total,
         -0.74862330, 1e-7);
    double dx = faltmin::dx_g_hyp_at_1();
    checks.push_back(Check{"radial_height_derivative_range",
                           dx >= 1.0 / 1032.0 && dx <= 1.0 / 1025.0, dx,
                           1.0 / 1025.0});
  }

  bool all_pass = true;
  std::string human;
  json jchecks = json::array();
  for (const Check& c : checks) {
    all_pass = all_pass && c.pass;
    human += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name + "  (measured " +
             fmt(c.measured) + ", limit " + fmt(c.limit) + ")\n";
    jchecks.push_back(json{{"name", c.name},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"limit", c.limit}});
  }
  human += all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n";
  json results{{"command", "verify"},
               {"suite", suite},
               {"checks", jchecks},
               {"pass", all_pass}};
  sink.finish(results, human);
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faltings height minima and essential-minimum bounds"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_csv = false;
  int workers = 0;
  double tol = 1e-9;
  int grid = 400;
  int nodes = 4096;
  std::string out_dir;
  app.add_flag("--json", as_json, "print machine-readable JSON to stdout");
  app.add_flag("--csv", as_csv, "print CSV where applicable");
  app.add_option("--workers", workers, "worker threads (0 = machine parallelism)");
  app.add_option("--tol", tol, "consistency tolerance");
  app.add_option("--grid", grid, "grid resolution for lower bounds");
  app.add_option("--nodes", nodes, "minimum quadrature nodes");
  app.add_option("--out", out_dir, "directory for results.json + manifest.json");

  auto* eval = app.add_subcommand("eval", "evaluate a modular quantity at a point");
  std::string eval_what, eval_point;
  eval->add_option("function", eval_what, "one of j, ginf, ghyp, E2, E4, E6, E2star, delta")
      ->required()
      ->check(CLI::IsMember({"j", "ginf", "ghyp", "E2", "E4", "E6", "E2star", "delta"}));
  eval->add_option("point", eval_point, "complex point a+bi")->required();

  auto* height = app.add_subcommand("height", "Faltings height of a polynomial's roots");
  std::string height_spec;
  height->add_option("poly", height_spec, "c0,c1,...,cd (constant first) or cyclotomic:n")
      ->required();

  auto* lower = app.add_subcommand("lower", "lower bounds via section Green functions");
  std::string replay_path, config_path;
  lower->add_option("--replay", replay_path, "replay families JSON (frozen exponents)");
  lower->add_option("--config", config_path, "config JSON (optimize or replay)");

  auto* upper = app.add_subcommand("upper", "upper bounds via circle integrals");
  double upper_center = 0.0;
  std::vector<double> upper_sweep;
  auto* center_opt = upper->add_option("--center", upper_center, "circle center");
  upper->add_option("--sweep", upper_sweep, "golden-section search in [lo, hi]")
      ->expected(2);

  auto* scan = app.add_subcommand("scan", "enumerate small-height algebraic numbers");
  int scan_cyc = 0, scan_deg = 0, scan_coeff = 1;
  double scan_threshold = 0.0, report_lower = 0.0, report_upper = 0.0;
  std::string checkpoint;
  bool want_report = false;
  scan->add_option("--cyclotomic", scan_cyc, "tabulate roots of unity up to this order");
  scan->add_option("--max-degree", scan_deg, "polynomial box: max degree");
  scan->add_option("--max-coeff", scan_coeff, "polynomial box: max |coefficient|");
  scan->add_option("--threshold", scan_threshold, "keep heights <= threshold");
  scan->add_option("--checkpoint", checkpoint, "checkpoint file for resumable scans");
  scan->add_flag("--report", want_report, "split entries against two-sided bounds");
  scan->add_option("--lower", report_lower, "lower bound for --report");
  scan->add_option("--upper", report_upper, "upper bound for --report");

  auto* verify = app.add_subcommand("verify", "run certificate suites");
  std::string suite;
  int samples = 4000;
  verify->add_option("suite", suite, "constants|distortion|propB|special_values|all")
      ->required()
      ->check(CLI::IsMember({"constants", "distortion", "propB", "special_values", "all"}));
  verify->add_option("--samples", samples, "sample count for certificate sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Hash the invocation minus the output destination, so identical
  // computations written to different directories share a hash.
  std::string joined;
  for (int i = 1; i < argc; ++i) {
    std::string_view arg = argv[i];
    if (arg == "--out") {
      ++i;
      continue;
    }
    if (arg.rfind("--out=", 0) == 0) continue;
    joined += arg;
    joined += '\x1f';
  }
  OutputSink sink;
  sink.as_json = as_json;
  sink.out_dir = out_dir;
  sink.inputs_hash = fnv1a_hex(joined);
  for (const auto* sub : app.get_subcommands()) sink.command = sub->get_name();

  try {
    if (app.got_subcommand(eval)) return cmd_eval(eval_what, eval_point, sink);
    if (app.got_subcommand(height)) return cmd_height(height_spec, sink);
    if (app.got_subcommand(lower)) {
      if (replay_path.empty() == config_path.empty()) {
        throw std::domain_error("lower needs exactly one of --replay / --config");
      }
      return cmd_lower(replay_path, config_path, grid, workers, sink);
    }
    if (app.got_subcommand(upper)) {
      std::optional<double> center;
      if (center_opt->count() > 0) center = upper_center;
      if (center.has_value() == (upper_sweep.size() == 2)) {
        throw std::domain_error("upper needs exactly one of --center / --sweep");
      }
      return cmd_upper(center, upper_sweep, nodes, tol, workers, sink);
    }
    if (app.got_subcommand(scan)) {
      if ((scan_cyc > 0) == (scan_deg > 0)) {
        throw std::domain_error(
            "scan needs exactly one of --cyclotomic / --max-degree (+ --max-coeff, --threshold)");
      }
      if (want_report && (report_lower == 0.0 || report_upper == 0.0)) {
        throw std::domain_error("--report needs --lower and --upper");
      }
      return cmd_scan(scan_cyc, scan_deg, scan_coeff, scan_threshold, checkpoint,
                      want_report, report_lower, report_upper, workers, as_csv, sink);
    }
    if (app.got_subcommand(verify)) return cmd_verify(suite, samples, sink);
    throw std::domain_error("no subcommand");
  } catch (const faltmin::CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 4;
  } catch (const faltmin::NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const faltmin::RepeatedRoots& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const faltmin::BudgetViolation& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
