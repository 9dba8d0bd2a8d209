// Acceptance gate for the faltmin library: nine independent criteria, one
// PASS/FAIL line each with the measured values and elapsed time.  The exit
// code is the number of failed criteria, so 0 means the gate is green.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "faltmin/bounds.hpp"
#include "faltmin/constants.hpp"
#include "faltmin/disk.hpp"
#include "faltmin/distortion.hpp"
#include "faltmin/heights.hpp"
#include "faltmin/modular.hpp"
#include "faltmin/polynomial.hpp"
#include "faltmin/qseries.hpp"
#include "faltmin/tau.hpp"

namespace {

using cplx = std::complex<double>;
using faltmin::IntegerPolynomial;
using faltmin::TauPoint;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int g_failures = 0;

template <typename Body>
void criterion(int number, const char* name, double limit_seconds,
               Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  bool in_time = limit_seconds <= 0.0 || seconds < limit_seconds;
  bool pass = out.pass && in_time;
  if (!pass) ++g_failures;
  std::string timing = fmt(seconds) + "s";
  if (limit_seconds > 0.0) {
    timing += " / limit " + fmt(limit_seconds) + "s";
    if (!in_time) timing += " EXCEEDED";
  }
  std::printf("[%s] %d. %s: %s  (%s)\n", pass ? "PASS" : "FAIL", number, name,
              out.detail.c_str(), timing.c_str());
  std::fflush(stdout);
}

double height_of(const std::string& text) {
  return faltmin::faltings_height(IntegerPolynomial::parse(text)).total;
}

faltmin::SectionFamily make_family(
    const std::vector<std::pair<std::string, double>>& spec) {
  std::vector<faltmin::SectionMember> members;
  for (const auto& [text, exponent] : spec) {
    members.push_back({IntegerPolynomial::parse(text), exponent});
  }
  return faltmin::SectionFamily(std::move(members));
}

// The five frozen-exponent section families with their published infima.
const std::vector<
    std::pair<std::vector<std::pair<std::string, double>>, double>>
    kFrozenFamilies = {
        {{}, -0.74875248},
        {{{"0,1", 8.089047470825761e-5}}, -0.74862817},
        {{{"0,1", 8.08846e-5}, {"-1,1", 6.017184e-6}}, -0.74862517},
        {{{"0,1", 7.979626e-5},
          {"-1,1", 4.433084e-6},
          {"1,-1,1", 2.454098e-6}},
         -0.74862386},
        {{{"0,1", 7.8055985e-5},
          {"-1,1", 3.803298e-6},
          {"1,-1,1", 2.385096e-6},
          {"1,-1,1,-1,1", 8.65203e-7}},
         -0.74862360},
};

// ---------------------------------------------------------------------------

Outcome height_of_zero() {
  double closed = -0.5 * std::log(3.0 *
                                  std::pow(faltmin::kGammaOneThird, 6) /
                                  std::pow(2.0 * faltmin::kPi, 3));
  double via_green = faltmin::g_hyp(cplx(0.0, 0.0)) / 12.0;
  double computed = height_of("0,1");
  bool pass = std::abs(closed - via_green) <= 1e-10 &&
              std::abs(computed - closed) <= 1e-10 &&
              std::abs(closed - (-0.748752485503338)) <= 1e-12;
  return {pass, "closed form " + fmt(closed) + ", green " + fmt(via_green) +
                    ", height " + fmt(computed)};
}

Outcome first_four_minima() {
  const std::pair<const char*, double> cases[] = {
      {"-1,1", -0.74862817},
      {"cyclotomic:6", -0.74862517},
      {"cyclotomic:10", -0.74862366},
      {"1,-1,1,-1,1,-1,2,-2,1", -0.74862330},
  };
  double worst = 0.0;
  bool pass = true;
  for (const auto& [text, published] : cases) {
    double err = std::abs(height_of(text) - published);
    worst = std::max(worst, err);
    pass = pass && err <= 1e-7;
  }
  return {pass, "max deviation from published minima " + fmt(worst)};
}

Outcome cyclotomic_brackets() {
  bool pass = true;
  double worst_margin = 1.0;
  int worst_n = 0;
  for (long long n = 1; n <= 30; ++n) {
    double c = static_cast<double>(faltmin::mobius(n)) /
               (165888.0 * static_cast<double>(faltmin::euler_phi(n)));
    double lo = -0.7486222078 - c;
    double hi = -0.7486221244 - c;
    double h = faltmin::faltings_height(faltmin::cyclotomic(n)).total;
    double margin = std::min(h - lo, hi - h);
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_n = static_cast<int>(n);
    }
    pass = pass && h >= lo && h <= hi;
  }
  return {pass, "all n <= 30 inside bracket, tightest margin " +
                    fmt(worst_margin) + " at n = " + std::to_string(worst_n)};
}

Outcome upper_bound_certificates() {
  faltmin::UpperBoundReport integral = faltmin::circle_integral(0.205);
  faltmin::UpperBoundReport cert = faltmin::certified_upper_bound(0.205);
  double hhat = faltmin::circle_integral_hhat(0.205);
  faltmin::UpperBoundReport best = faltmin::optimize_center(0.0, 1.0);
  bool pass = integral.value <= -0.7486227509 &&
              std::abs(cert.value - (-0.748622751)) <= 1e-8 &&
              std::abs(hhat - integral.value) <= 1e-9 &&
              std::abs(best.center - 0.205) <= 0.01;
  return {pass, "integral " + fmt(integral.value) + ", certified " +
                    fmt(cert.value) + ", hhat gap " +
                    fmt(std::abs(hhat - integral.value)) + ", best center " +
                    fmt(best.center)};
}

Outcome family_replays() {
  bool pass = true;
  double worst = 0.0;
  for (const auto& [spec, published] : kFrozenFamilies) {
    faltmin::SectionFamily family = make_family(spec);
    double infimum = faltmin::global_infimum(family).infimum;
    double err = std::abs(infimum - published);
    worst = std::max(worst, err);
    pass = pass && err <= 1e-6;
  }
  return {pass, "five replays, max deviation from published " + fmt(worst)};
}

Outcome derivative_at_one() {
  double val = faltmin::dx_g_hyp_at_1();
  double h = 1e-3;
  double fd = (faltmin::g_hyp(cplx(1.0 + h, 0.0)) -
               faltmin::g_hyp(cplx(1.0 - h, 0.0))) /
              (2.0 * h);
  bool pass = val >= 1.0 / 1032.0 && val <= 1.0 / 1025.0 &&
              std::abs(val - fd) <= 1e-6;
  return {pass, "value " + fmt(val) + " in [1/1032, 1/1025], fd gap " +
                    fmt(std::abs(val - fd))};
}

Outcome distortion_certificates() {
  faltmin::CertificateReport linear = faltmin::verify_linear_model(10000);
  faltmin::CertificateReport koebe = faltmin::verify_koebe(600);
  faltmin::CertificateReport approx = faltmin::verify_approximation(600);
  faltmin::CertificateReport cube = faltmin::verify_unit_circle_cube_law(600);
  faltmin::CertificateReport jlog = faltmin::verify_j_log_derivative(200);
  double closed = faltmin::j_disk_leading_coefficient();
  double quadrature = faltmin::chart_derivative_at_zero_quadrature();
  bool pass = linear.samples >= 10000 && linear.max_violation <= 5e-7 &&
              closed >= 237698.0 && closed <= 237699.0 &&
              quadrature >= 237698.0 && quadrature <= 237699.0 &&
              std::abs(closed - quadrature) <= 1e-8 * closed &&
              koebe.max_violation <= 1e-9 &&
              approx.max_violation <= 1e-9 && cube.max_violation <= 1e-9 &&
              jlog.max_violation <= 1e-9;
  return {pass, "linear-model violation " + fmt(linear.max_violation) +
                    ", f'(0) " + fmt(closed) + " vs quadrature gap " +
                    fmt(std::abs(closed - quadrature)) +
                    ", other certificates worst " +
                    fmt(std::max({koebe.max_violation, approx.max_violation,
                                  cube.max_violation, jlog.max_violation}))};
}

Outcome property_suites() {
  std::string failed;

  // Modular invariance of j and g_infinity.
  const faltmin::UnimodularMatrix matrices[] = {
      {1, 1, 0, 1}, {0, -1, 1, 0}, {1, 0, 1, 1}, {2, 1, 1, 1}, {1, -1, 1, 0}};
  const cplx base_points[] = {{0.3, 1.1}, {-0.2, 0.8}, {0.05, 2.4}};
  for (const auto& m : matrices) {
    for (cplx t : base_points) {
      TauPoint tau(t);
      TauPoint image(m.apply(t));
      cplx j0 = faltmin::j_invariant(tau);
      cplx j1 = faltmin::j_invariant(image);
      if (std::abs(j1 - j0) > 1e-9 * (1.0 + std::abs(j0))) {
        failed += " j-invariance";
      }
      double g0 = faltmin::g_infinity(tau);
      double g1 = faltmin::g_infinity(image);
      if (std::abs(g1 - g0) > 1e-9 * (1.0 + std::abs(g0))) {
        failed += " g-invariance";
      }
    }
  }

  // Ramanujan derivative identities against finite differences.
  {
    TauPoint tau0(0.3, 1.1);
    auto value = [](faltmin::EisensteinKind kind, cplx t) {
      return faltmin::eisenstein(kind, TauPoint(t)).value;
    };
    auto q_derivative = [&](faltmin::EisensteinKind kind) {
      const double h = 1e-4;
      cplx t = tau0.value();
      cplx d = (-value(kind, t + 2 * h) + 8.0 * value(kind, t + h) -
                8.0 * value(kind, t - h) + value(kind, t - 2 * h)) /
               (12.0 * h);
      return d / (2.0 * faltmin::kPi * cplx(0.0, 1.0));
    };
    cplx e2 = value(faltmin::EisensteinKind::E2, tau0.value());
    cplx e4 = value(faltmin::EisensteinKind::E4, tau0.value());
    cplx e6 = value(faltmin::EisensteinKind::E6, tau0.value());
    const std::pair<cplx, cplx> identities[] = {
        {q_derivative(faltmin::EisensteinKind::E2), (e2 * e2 - e4) / 12.0},
        {q_derivative(faltmin::EisensteinKind::E4), (e2 * e4 - e6) / 3.0},
        {q_derivative(faltmin::EisensteinKind::E6), (e2 * e6 - e4 * e4) / 2.0},
    };
    for (const auto& [got, want] : identities) {
      if (std::abs(got - want) > 1e-6 * (1.0 + std::abs(want))) {
        failed += " ramanujan";
      }
    }
  }

  // Round trip j(invert_j(zeta)) over 1000 pseudo-random targets.
  {
    std::mt19937 rng(20260816u);
    std::uniform_real_distribution<double> log_radius(-3.0, 6.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * faltmin::kPi);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      cplx zeta = std::polar(std::pow(10.0, log_radius(rng)), angle(rng));
      faltmin::InversionResult inv = faltmin::invert_j(zeta);
      double err = std::abs(faltmin::j_invariant(inv.tau) - zeta);
      if (err > 1e-10 * std::max(1.0, std::abs(zeta))) ++bad;
    }
    if (bad > 0) failed += " inversion-round-trip(" + std::to_string(bad) + ")";
  }

  // Conjugation symmetry of g_hyp.
  for (cplx zeta : {cplx(0.7, 0.4), cplx(-5.0, 2.0), cplx(1000.0, -300.0),
                    cplx(0.3, -1.1), cplx(12.0, 7.0)}) {
    double a = faltmin::g_hyp(zeta);
    double b = faltmin::g_hyp(std::conj(zeta));
    if (std::abs(a - b) > 1e-10 * (1.0 + std::abs(a))) failed += " conjugation";
  }

  // Strict growth of g_infinity along the boundary ray re = 1/2.
  {
    double prev = -1e300;
    bool monotone = true;
    for (int k = 0; k < 200; ++k) {
      double t = std::sqrt(3.0) / 2.0 + (10.0 - std::sqrt(3.0) / 2.0) * k / 199.0;
      double g = faltmin::g_infinity(TauPoint(0.5, t));
      monotone = monotone && g > prev;
      prev = g;
    }
    if (!monotone) failed += " monotonicity";
  }

  if (std::abs(faltmin::zhang_bound() - (-1.2425268622)) > 1e-9) {
    failed += " zhang";
  }

  // Strict ordering of the first minima below the certified upper bound.
  {
    double h0 = height_of("0,1");
    double h1 = height_of("-1,1");
    double h6 = height_of("cyclotomic:6");
    double h10 = height_of("cyclotomic:10");
    double upper = faltmin::certified_upper_bound(0.205).value;
    if (!(h0 < h1 && h1 < h6 && h6 < h10 && h10 < upper)) failed += " chain";
  }

  if (failed.empty()) {
    return {true,
            "invariance, ramanujan, inversion, conjugation, monotonicity, "
            "zhang, ordering all hold"};
  }
  return {false, "failing:" + failed};
}

Outcome root_of_unity_classification() {
  faltmin::SectionFamily family = make_family(kFrozenFamilies.back().first);
  double mu_lower = faltmin::global_infimum(family).infimum;
  double mu_upper = faltmin::certified_upper_bound(0.205).value;
  std::string wrong;
  for (long long n = 2; n <= 100; ++n) {
    faltmin::RootOfUnityClass expected = faltmin::RootOfUnityClass::kAbove;
    if (n == 6 || n == 10) {
      expected = faltmin::RootOfUnityClass::kBelow;
    } else if (n == 14 || n == 15 || n == 22) {
      expected = faltmin::RootOfUnityClass::kUndecided;
    }
    if (faltmin::classify_root_of_unity(n, mu_lower, mu_upper) != expected) {
      wrong += " " + std::to_string(n);
    }
  }
  if (wrong.empty()) {
    return {true, "orders 2..100 classified, bounds [" + fmt(mu_lower) + ", " +
                      fmt(mu_upper) + "]"};
  }
  return {false, "misclassified orders:" + wrong};
}

}  // namespace

int main() {
  std::printf("faltmin acceptance gate\n");
  criterion(1, "height of zero matches its closed form", 1.0, height_of_zero);
  criterion(2, "first four height minima", 10.0, first_four_minima);
  criterion(3, "cyclotomic heights sit in the Mobius bracket", 30.0,
            cyclotomic_brackets);
  criterion(4, "circle-integral upper bound is certified", 60.0,
            upper_bound_certificates);
  criterion(5, "frozen-exponent family replays", 600.0, family_replays);
  criterion(6, "derivative of g_hyp along (0,2) at 1", 0.0, derivative_at_one);
  criterion(7, "distortion certificates", 120.0, distortion_certificates);
  criterion(8, "property suites", 0.0, property_suites);
  criterion(9, "root-of-unity classification", 0.0,
            root_of_unity_classification);
  std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failures);
  return g_failures;
}
