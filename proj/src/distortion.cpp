#include "faltmin/distortion.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "faltmin/constants.hpp"
#include "faltmin/disk.hpp"

namespace faltmin {

namespace {

using cplx = std::complex<double>;

constexpr double kGoldenAngle = 0.6180339887498949;  // fractional part of the golden ratio
constexpr double kCertTolerance = 1e-9;

// Deterministic, roughly area-uniform sample of the annulus r_lo <= |w| <= r_hi.
std::vector<cplx> spiral_sample(int n, double r_lo, double r_hi) {
  std::vector<cplx> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    double frac = (k + 0.5) / n;
    double r = std::sqrt(r_lo * r_lo + (r_hi * r_hi - r_lo * r_lo) * frac);
    double theta = 2.0 * kPi * (kGoldenAngle * k + 0.1);
    pts.push_back(std::polar(r, theta));
  }
  return pts;
}

struct ViolationTracker {
  double max_violation = -std::numeric_limits<double>::infinity();
  cplx worst{0.0, 0.0};

  void check(double lhs, double rhs, cplx where) {
    double v = lhs - rhs;
    if (v > max_violation) {
      max_violation = v;
      worst = where;
    }
  }

  CertificateReport report(std::string name, int samples) const {
    CertificateReport r;
    r.name = std::move(name);
    r.samples = samples;
    r.max_violation = max_violation;
    r.worst_point = worst;
    r.pass = max_violation <= kCertTolerance;
    return r;
  }
};

// Stable evaluation of the smaller root ratio: the naive
// (1 - s)^... form cancels catastrophically for small alpha*eps1.
double kappa_given(double alpha, double eps1) {
  if (!(alpha > 0.0) || !(alpha < 1.0 / (4.0 * eps1))) {
    throw std::domain_error("kappa: alpha must lie in (0, 1/(4*eps1))");
  }
  double s = std::sqrt(1.0 - 4.0 * alpha * eps1);
  return 4.0 * alpha / ((1.0 + s) * (1.0 + s)) - 1.0;
}

CertificateConstants compute_constants() {
  CertificateConstants c;
  c.r0 = r0();
  c.gamma0 = sqrt3() * kGammaOneThird * kGammaOneThird / kPi;
  c.f_prime_0 = j_disk_leading_coefficient();
  c.eps1 = 1.0 / (c.r0 * c.r0 * c.r0 * c.f_prime_0);
  c.kappa1 = kappa_given(1.0, c.eps1);
  double g3 = c.gamma0 * c.gamma0 * c.gamma0;
  c.gamma1 = 3.0 * std::log(192.0) - 6.0 * std::log(g3 - 1.0 / g3);
  return c;
}

}  // namespace

CertificateConstants constants() {
  static const CertificateConstants cached = compute_constants();
  return cached;
}

double kappa(double alpha) { return kappa_given(alpha, constants().eps1); }

RadiusBracket radius_bracket(double alpha) {
  CertificateConstants c = constants();
  RadiusBracket b;
  b.alpha = alpha;
  b.kappa_alpha = kappa(alpha);  // validates the domain
  b.r_plus = std::cbrt((1.0 + b.kappa_alpha) / c.f_prime_0);
  b.r_minus = std::cbrt(1.0 - 4.0 * alpha * c.eps1) * b.r_plus;
  return b;
}

double linear_model_g_hyp(std::complex<double> zeta) {
  return constants().gamma1 - zeta.real() / 13824.0;
}

KoebeBounds koebe_bounds(double modulus) {
  if (!(modulus >= 0.0) || !(modulus < 1.0)) {
    throw std::domain_error("koebe_bounds: modulus must lie in [0, 1)");
  }
  double m = modulus;
  double om = 1.0 - m;
  double op = 1.0 + m;
  KoebeBounds k;
  k.value_lower = m / (op * op);
  k.value_upper = m / (om * om);
  k.deriv_lower = om / (op * op * op);
  k.deriv_upper = op / (om * om * om);
  k.log_deriv_bound = op / om;
  k.curvature_center = 2.0 * m * m / (om * op);
  k.curvature_radius = 4.0 * m / (om * op);
  return k;
}

std::complex<double> chart(std::complex<double> u) {
  if (u == 0.0) return 0.0;
  return j_disk(cbrt_canonical(u));
}

std::complex<double> chart_derivative(std::complex<double> u) {
  cplx w = cbrt_canonical(u);
  return j_disk_derivative(w) / (3.0 * w * w);
}

double chart_derivative_at_zero_quadrature() {
  double radius = 0.5 * std::pow(r0(), 3);
  const int n = 256;
  cplx acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double theta = 2.0 * kPi * k / n;
    cplx node = std::polar(radius, theta);
    acc += chart(node) * std::polar(1.0, -theta);
  }
  return (acc / (static_cast<double>(n) * radius)).real();
}

std::complex<double> log_h_hat_derivative_higher(std::complex<double> w, int order,
                                                 double radius, int nodes) {
  if (order <= 0) return log_h_hat_derivative(w);
  // m-th derivative of F at w: m!/(N*r^m) * sum F(w + r*e^{i*t_k}) e^{-i*m*t_k}.
  double factorial = 1.0;
  for (int i = 2; i <= order; ++i) factorial *= i;
  cplx acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    double theta = 2.0 * kPi * k / nodes;
    acc += log_h_hat_derivative(w + std::polar(radius, theta)) *
           std::polar(1.0, -order * theta);
  }
  return acc * (factorial / (nodes * std::pow(radius, order)));
}

CertificateReport verify_approximation(int sample_count) {
  if (sample_count < 1) throw std::domain_error("verify_approximation: sample_count >= 1");
  const double R = approximation_radius();
  const double C = j_disk_leading_coefficient();
  const double g0 = g_disk(cplx(0.0, 0.0));
  ViolationTracker t;
  std::vector<cplx> pts = spiral_sample(sample_count, 0.0, R);
  pts.push_back(cplx(0.0, 0.0));
  for (cplx w : pts) {
    double mod6 = std::pow(std::abs(w), 6);
    cplx w3 = w * w * w;
    double model = g0 - 6.0 * std::log1p(-std::norm(w)) - (C / 13824.0) * w3.real();
    t.check(std::abs(g_disk(w) - model), 216.0 * mod6, w);
    t.check(std::abs(log_h_hat_derivative(w) * w - (3.0 * C / 13824.0) * w3),
            1296.0 * mod6, w);
    cplx second = log_h_hat_derivative_higher(w, 1);
    t.check(std::abs(second * w * w - (6.0 * C / 13824.0) * w3), 5.0 * 1296.0 * mod6, w);
    cplx sixth = log_h_hat_derivative_higher(w, 5);
    t.check(std::abs(sixth) / 720.0, 216.0, w);
  }
  return t.report("local_cubic_model", static_cast<int>(pts.size()));
}

CertificateReport verify_koebe(int sample_count) {
  if (sample_count < 1) throw std::domain_error("verify_koebe: sample_count >= 1");
  CertificateConstants c = constants();
  double scale = c.r0 * c.r0 * c.r0;
  ViolationTracker t;
  std::vector<cplx> pts = spiral_sample(sample_count, 0.02, 0.95);
  for (cplx z : pts) {
    double m = std::abs(z);
    KoebeBounds kb = koebe_bounds(m);
    cplx f0 = c.eps1 * chart(scale * z);
    cplx f0p = c.eps1 * scale * chart_derivative(scale * z);
    // f0''(z) by Cauchy differentiation of f0' on a circle inside the disk.
    double radius = 0.45 * (1.0 - m);
    const int n = 128;
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) {
      double theta = 2.0 * kPi * k / n;
      acc += c.eps1 * scale * chart_derivative(scale * (z + std::polar(radius, theta))) *
             std::polar(1.0, -theta);
    }
    cplx f0pp = acc / (static_cast<double>(n) * radius);

    t.check(kb.value_lower, std::abs(f0), z);
    t.check(std::abs(f0), kb.value_upper, z);
    t.check(kb.deriv_lower, std::abs(f0p), z);
    t.check(std::abs(f0p), kb.deriv_upper, z);
    t.check(std::abs(z * f0p / f0), kb.log_deriv_bound, z);
    t.check(std::abs(z * f0pp / f0p - kb.curvature_center), kb.curvature_radius, z);
  }
  return t.report("univalent_distortion", sample_count);
}

CertificateReport verify_unit_circle_cube_law(int sample_count) {
  if (sample_count < 1) throw std::domain_error("verify_unit_circle_cube_law: sample_count >= 1");
  const double C = j_disk_leading_coefficient();
  const double base = std::log1p(-std::pow(C, -2.0 / 3.0));
  ViolationTracker t;
  for (int k = 0; k < sample_count; ++k) {
    cplx zeta = std::polar(1.0, 2.0 * kPi * (k + 0.37) / sample_count);
    InversionResult inv = invert_j(zeta);
    cplx w = *inv.w;
    t.check(std::abs(zeta - C * w * w * w), 1.0 / 2283.0, zeta);
    t.check(std::abs(std::log1p(-std::norm(w)) - base), 7.7e-8, zeta);
  }
  return t.report("unit_circle_cube_law", sample_count);
}

CertificateReport verify_linear_model(int sample_count) {
  if (sample_count < 1) throw std::domain_error("verify_linear_model: sample_count >= 1");
  ViolationTracker t;
  for (int k = 0; k < sample_count; ++k) {
    cplx zeta = std::polar(1.0, 2.0 * kPi * k / sample_count);
    t.check(std::abs(g_hyp(zeta) - linear_model_g_hyp(zeta)), 5e-7, zeta);
  }
  return t.report("unit_circle_affine_model", sample_count);
}

CertificateReport verify_j_log_derivative(int sample_count) {
  if (sample_count < 1) throw std::domain_error("verify_j_log_derivative: sample_count >= 1");
  const double R = approximation_radius();
  ViolationTracker t;
  auto J = [](cplx w) { return w * j_disk_derivative(w) / j_disk(w); };
  for (cplx w : spiral_sample(sample_count, 0.02, R)) {
    double radius = std::min(0.008, 0.45 * std::abs(w));
    const int n = 128;
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) {
      double theta = 2.0 * kPi * k / n;
      acc += J(w + std::polar(radius, theta)) * std::polar(1.0, -theta);
    }
    cplx jprime = acc / (static_cast<double>(n) * radius);
    t.check(std::abs(jprime), 4000.0 * std::norm(w), w);
  }
  return t.report("log_j_ratio_growth", sample_count);
}

}  // namespace faltmin
