#include "faltmin/modular.hpp"

#include <cmath>
#include <complex>

#include "faltmin/constants.hpp"
#include "faltmin/qseries.hpp"

namespace faltmin {

namespace {

std::complex<double> nome_of(const TauPoint& tau) {
  double scale = std::exp(-2.0 * kPi * tau.im());
  double phase = 2.0 * kPi * tau.re();
  return {scale * std::cos(phase), scale * std::sin(phase)};
}

}  // namespace

std::complex<double> j_invariant(const TauPoint& tau) {
  ReductionResult red = reduce_to_fundamental_domain(tau);
  std::complex<double> q = nome_of(red.reduced);
  int order = qdomain::auto_order(std::abs(q));
  return qdomain::j_of_q(q, order);
}

std::complex<double> j_derivative(const TauPoint& tau) {
  // d j / d tau.  At the reduced representative:
  //   dj/dtau = (dj/dq)(dq/dtau) = -2*pi*i * E4^2 * E6 / Delta.
  // j is invariant while dtau transforms with weight -2, so the derivative
  // at the input point is (c*tau_red + d)^2 times the reduced-point value.
  ReductionResult red = reduce_to_fundamental_domain(tau);
  std::complex<double> q = nome_of(red.reduced);
  int order = qdomain::auto_order(std::abs(q));
  std::complex<double> a4 = qdomain::e4(q, order);
  std::complex<double> a6 = qdomain::e6(q, order);
  std::complex<double> delta = qdomain::delta_product(q, order);
  std::complex<double> at_reduced =
      std::complex<double>(0.0, -2.0 * kPi) * a4 * a4 * a6 / delta;
  return red.map.automorphy({red.reduced.re(), red.reduced.im()}) * at_reduced;
}

double g_infinity(const TauPoint& tau) {
  // -log((4*pi*Im tau)^6 |Delta(tau)|), evaluated via the expanded form
  //   2*pi*Im(tau) - 6*log(Im tau) - 6*log(4*pi) - 24*sum_{r>=1} log|1-q^r|.
  // The function is invariant under the modular group, so evaluate at the
  // reduced representative where |q| <= e^{-pi*sqrt(3)} and the sum is tiny.
  ReductionResult red = reduce_to_fundamental_domain(tau);
  double y = red.reduced.im();
  std::complex<double> q = nome_of(red.reduced);
  int order = qdomain::auto_order(std::abs(q));
  double log_sum = 0.0;
  std::complex<double> qp = 1.0;
  for (int r = 1; r <= order; ++r) {
    qp *= q;
    log_sum += std::log(std::abs(1.0 - qp));
  }
  return 2.0 * kPi * y - 6.0 * std::log(y) - 6.0 * std::log(4.0 * kPi) - 24.0 * log_sum;
}

std::complex<double> dg_infinity(const TauPoint& tau) {
  // Holomorphic part of the gradient: 2 * d/dtau of g_infinity equals
  // -pi*i*E2*(tau).  E2* has weight 2, so transport from the reduced point
  // by the same (c*tau_red + d)^2 factor as any weight-2 form.
  ReductionResult red = reduce_to_fundamental_domain(tau);
  QSeriesEval e2s = eisenstein(EisensteinKind::E2Star, red.reduced);
  return std::complex<double>(0.0, -kPi) * e2s.value * red.map.automorphy({red.reduced.re(), red.reduced.im()});
}

}  // namespace faltmin
