#pragma once

// Conformal disk chart centered at the order-3 elliptic point, inversion of
// the j-function, and the hyperbolic Green's function g_hyp on the j-line.

#include <complex>
#include <optional>

#include "faltmin/tau.hpp"

namespace faltmin {

// Moebius map from the open unit disk onto the upper half-plane sending
// 0 -> rho = exp(i*pi/3), the order-3 corner of the fundamental domain.
// psi(w) = (conj(rho)*w + rho) / (w + 1).
std::complex<double> psi(std::complex<double> w);

// Inverse chart: psi_inverse(tau) = -(tau - rho)/(tau - conj(rho)).
std::complex<double> psi_inverse(std::complex<double> tau);

// psi'(w) = -i*sqrt(3)/(1+w)^2.
std::complex<double> psi_derivative(std::complex<double> w);

// Imaginary part of psi(w) in a cancellation-free form:
// (sqrt(3)/2) * (1-|w|^2) / |1+w|^2.
double psi_im(std::complex<double> w);

// Cube root with argument in the sector [pi, 5*pi/3).  The composite
// j(psi(w)) depends on w only through w^3; this branch selects one disk
// coordinate per value and maps the cube onto the full disk exactly once.
std::complex<double> cbrt_canonical(std::complex<double> u);

// j(psi(w)): the j-invariant in the disk coordinate.
std::complex<double> j_disk(std::complex<double> w);

// d/dw of j(psi(w)).
std::complex<double> j_disk_derivative(std::complex<double> w);

// Leading coefficient of j(psi(w)) = C*w^3 + O(w^6) at the chart center:
// C = (sqrt(3)*Gamma(1/3)^2/pi)^9.
double j_disk_leading_coefficient();

// Unit-free weight-12 transport of the discriminant to the disk:
// h_hat(w) = Delta(psi(w)) / (1+w)^12.  Holomorphic and zero-free.
std::complex<double> h_hat(std::complex<double> w);

// Logarithmic derivative (log h_hat)'(w) =
//   2*pi*i * E2(psi(w)) * psi'(w) - 12/(1+w).
std::complex<double> log_h_hat_derivative(std::complex<double> w);

// log|h_hat(w)| evaluated through logarithms only (no overflow/underflow of
// the discriminant factor).
double log_abs_h_hat(std::complex<double> w);

// The hyperbolic Green's function at the cusp, written in the disk chart:
// g_disk(w) = -log(1728*pi^6) - 6*log(1-|w|^2) - log|h_hat(w)|.
// Identical to g_infinity(psi(w)).
double g_disk(std::complex<double> w);

enum class InversionMethod {
  kCuspNewton,  // Newton in the nome q, seeded by q ~ 1/zeta (large |zeta|)
  kDiskNewton,  // damped Newton in u = w^3 on the disk chart (moderate |zeta|)
  kGridSeeded,  // fundamental-domain grid search + Newton in tau (fallback)
};

struct InversionResult {
  TauPoint tau;                          // fundamental-domain representative
  std::optional<std::complex<double>> w; // canonical disk coordinate, when
                                         // the disk chart applies
  double residual = 0.0;                 // |j(tau) - zeta|
  InversionMethod method = InversionMethod::kDiskNewton;
  int iterations = 0;
};

// Solve j(tau) = zeta.  Guarantees residual <= 1e-10 * max(1, |zeta|) or
// throws NonConvergence.  zeta = 0 returns the chart center exactly.
InversionResult invert_j(std::complex<double> zeta);

// g_hyp(zeta) = g_infinity(tau) where j(tau) = zeta.
double g_hyp(std::complex<double> zeta);

// Radial coordinate r1 = |w| of the point where j = 1 (cached).
double r_one();

// g_hyp(1) (cached).
double g_one();

// Derivative of x -> g_hyp(x) along the real axis at x = 1:
//   [12*r1/(1-r1^2) - Re((log h_hat)'(r1))] / Re(j_disk'(r1)),
// where r1 = |w(1)| lies on the real-w geodesic carrying real j-values
// (cached).
double dx_g_hyp_at_1();

}  // namespace faltmin
