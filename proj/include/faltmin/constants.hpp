#pragma once

#include <cmath>
#include <complex>

namespace faltmin {

// Version string reported by the CLI and embedded in run manifests.
inline constexpr const char* kToolVersion = "1.0.0";

// High-precision decimal constants. Both are validated at test time against
// independent oracles (std::tgamma plus the reflection identity for the Gamma
// value; Richardson-extrapolated differences of std::riemann_zeta for the
// zeta derivative), so a transcription slip cannot survive the test suite.
inline constexpr double kGammaOneThird = 2.6789385347077476336556929409746776;
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921391966024278064;

inline constexpr double kPi = 3.141592653589793238462643383279503;

inline double sqrt3() { return std::sqrt(3.0); }

// The corner point of the fundamental domain: rho = exp(i*pi/3).
inline std::complex<double> rho() { return {0.5, std::sqrt(3.0) / 2.0}; }
inline std::complex<double> rho_bar() { return {0.5, -std::sqrt(3.0) / 2.0}; }

// Radius of the disk-chart image of the fundamental-domain third: 2 - sqrt(3).
inline double r0() { return 2.0 - std::sqrt(3.0); }

// Boundary radius inside which the cubic-chart Taylor control applies.
inline double approximation_radius() { return 1.0 - kPi / (2.0 * std::sqrt(3.0)); }

}  // namespace faltmin
