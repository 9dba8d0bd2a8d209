#pragma once

// Certificate constants and distortion estimates for the cube-coordinate
// chart u -> j(psi(u^{1/3})): univalent-function (Koebe) brackets, the
// radius brackets r-(alpha) <= |w| <= r+(alpha) for preimages of |zeta| =
// alpha, the linear model of g_hyp near the unit circle, and numerical
// verification of the local approximation inequalities.

#include <complex>
#include <string>

namespace faltmin {

struct CertificateConstants {
  double r0;         // 2 - sqrt(3), the chart radius |w(1728)|
  double eps1;       // 1/(r0^3 * f'(0)); normalizes the chart to unit scale
  double kappa1;     // kappa(1): relative bracket width at |zeta| = 1
  double gamma0;     // (sqrt(3)/pi) * Gamma(1/3)^2 = f'(0)^{1/9}
  double gamma1;     // 3*log(192) - 6*log(gamma0^3 - gamma0^{-3})
  double f_prime_0;  // derivative at 0 of the cube-coordinate chart
};

struct RadiusBracket {
  double alpha;        // modulus |zeta| being bracketed
  double r_minus;      // certified lower bound for |w|
  double r_plus;       // certified upper bound for |w|
  double kappa_alpha;  // smaller root x of 1 + x = alpha*(1 + (1+x)*eps1)^2
};

// The six closed-form distortion bounds for a normalized univalent function
// f0 on the unit disk, evaluated at modulus m = |z|.
struct KoebeBounds {
  double value_lower;       // m/(1+m)^2 <= |f0(z)|
  double value_upper;       // |f0(z)| <= m/(1-m)^2
  double deriv_lower;       // (1-m)/(1+m)^3 <= |f0'(z)|
  double deriv_upper;       // |f0'(z)| <= (1+m)/(1-m)^3
  double log_deriv_bound;   // |z*f0'(z)/f0(z)| <= (1+m)/(1-m)
  double curvature_center;  // |z*f0''(z)/f0'(z) - center| <= radius
  double curvature_radius;
};

struct CertificateReport {
  std::string name;
  int samples = 0;
  double max_violation = 0.0;           // max over samples of (LHS - RHS); <= 0 is clean
  std::complex<double> worst_point{0.0, 0.0};
  bool pass = false;                    // max_violation <= 1e-9
};

CertificateConstants constants();

// Smaller root of 1 + x = alpha*(1 + (1+x)*eps1)^2, in the cancellation-free
// form 4*alpha/(1+s)^2 - 1 with s = sqrt(1 - 4*alpha*eps1).
// Requires 0 < alpha < 1/(4*eps1).
double kappa(double alpha);

// Certified bracket r_minus <= |w| <= r_plus for the disk coordinate of any
// zeta with |zeta| = alpha.  Requires 0 < alpha < 1/(4*eps1).
RadiusBracket radius_bracket(double alpha);

// gamma1 - Re(zeta)/13824: the affine model of g_hyp near the unit circle
// (accurate to 5e-7 on |zeta| = 1).
double linear_model_g_hyp(std::complex<double> zeta);

// Closed-form bounds for 0 <= modulus < 1.
KoebeBounds koebe_bounds(double modulus);

// The chart f(u) = j(psi(w)) with w the canonical cube root of u, and its
// u-derivative.  f is univalent for |u| < r0^3 with f(0) = 0.
std::complex<double> chart(std::complex<double> u);
std::complex<double> chart_derivative(std::complex<double> u);

// f'(0) recovered by quadrature of the Cauchy integral on |u| = r0^3/2;
// cross-checks the Gamma closed form.
double chart_derivative_at_zero_quadrature();

// (d/dw)^{order} of (log h_hat)' at w, by trapezoid quadrature of the Cauchy
// integral on a circle of the given radius (geometric convergence in nodes).
std::complex<double> log_h_hat_derivative_higher(std::complex<double> w, int order,
                                                 double radius = 0.05, int nodes = 256);

// Checks, on a deterministic sample of the disk |w| <= 1 - pi/(2*sqrt(3)):
// the cubic local model of g_disk (error <= 216*|w|^6), the matching bounds
// for w*(log h_hat)' and w^2*(log h_hat)'', and the sixth-derivative bound
// |(log h_hat)^{(6)}|/6! <= 216.
CertificateReport verify_approximation(int sample_count);

// Checks the six KoebeBounds inequalities against the actual chart on a
// deterministic sample of the unit z-disk (f0(z) = eps1 * f(r0^3 * z)).
CertificateReport verify_koebe(int sample_count);

// Checks, for equispaced zeta on the unit circle with canonical w:
// |zeta - f'(0)*w^3| <= 1/2283 and the near-constancy of log(1 - |w|^2)
// (deviation from log(1 - f'(0)^{-2/3}) at most 7.7e-8).
CertificateReport verify_unit_circle_cube_law(int sample_count);

// Checks |g_hyp(zeta) - linear_model_g_hyp(zeta)| <= 5e-7 on equispaced
// zeta on the unit circle.
CertificateReport verify_linear_model(int sample_count);

// Checks |J'(w)| <= 4000*|w|^2 for J(w) = w * j_disk'(w)/j_disk(w), with J'
// taken by Cauchy-integral differentiation, on a deterministic annulus
// sample 0.02 <= |w| <= 1 - pi/(2*sqrt(3)).
CertificateReport verify_j_log_derivative(int sample_count);

}  // namespace faltmin
