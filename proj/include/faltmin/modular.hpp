#pragma once

#include <complex>

#include "faltmin/qseries.hpp"
#include "faltmin/tau.hpp"

namespace faltmin {

// Klein's j-invariant E4^3/Delta, evaluated on the reduced representative
// (so the series run at |q| <= e^{-pi*sqrt(3)} and the result is invariant
// under the implicit reduction).
std::complex<double> j_invariant(const TauPoint& tau);

// d j/d tau. The closed form -2*pi*i*E4^2*E6/Delta is evaluated at the
// reduced representative and transported back through the reduction map with
// the weight-2 automorphy factor (j' transforms with weight 2).
std::complex<double> j_derivative(const TauPoint& tau);

// Hyperbolic Green function at the cusp:
//   g_inf(tau) = -log((4*pi*Im tau)^6 |Delta(tau)|)
//             = 2*pi*Im(tau) - 6*log(Im tau) - 6*log(4*pi) - 24*sum log|1-q^r|.
// SL2(Z)-invariant; always evaluated on the reduced representative.
double g_infinity(const TauPoint& tau);

// Complex derivative of g_inf: -pi*i*E2*(tau). Real part is half d/dx,
// imaginary part minus half d/dy. Computed at the reduced point and
// transported back with the weight-2 factor.
std::complex<double> dg_infinity(const TauPoint& tau);

}  // namespace faltmin
