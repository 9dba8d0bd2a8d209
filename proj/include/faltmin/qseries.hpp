#pragma once

#include <complex>

#include "faltmin/tau.hpp"

namespace faltmin {

enum class EisensteinKind { E2, E4, E6, E2Star };

// Result of a truncated q-expansion evaluation. tail_bound is an absolute
// bound on the dropped terms (for delta_eval it is derived from a relative
// product-tail bound, so it scales with |value|).
struct QSeriesEval {
  std::complex<double> value;
  int truncation_order = 0;
  double tail_bound = 0.0;
};

// Weight-2/4/6 Eisenstein series and the non-holomorphic completion
// E2*(tau) = E2(tau) - 3/(pi*Im tau), evaluated at the given point (no
// internal reduction: E2 is not modular, and the weight-k series transform
// with automorphy factors, so callers reduce first when they need the
// fundamental-domain value). order = 0 selects the default (40 terms) with
// automatic escalation until the tail bound is below 1e-14.
QSeriesEval eisenstein(EisensteinKind kind, const TauPoint& tau, int order = 0);

// Modular discriminant q * prod (1-q^n)^24 via the product form, which gives
// a relative tail bound (reported in tail_bound as absolute). Accepts any
// im > 0; points far from the fundamental domain simply escalate the order.
QSeriesEval delta_eval(const TauPoint& tau, int order = 0);

// Internals shared with the cusp-chart Newton inversion: evaluate the series
// directly in the nome q (|q| < 1).
namespace qdomain {
std::complex<double> e2(std::complex<double> q, int order);
std::complex<double> e4(std::complex<double> q, int order);
std::complex<double> e6(std::complex<double> q, int order);
std::complex<double> delta_product(std::complex<double> q, int order);
// j and dj/dq in the nome variable, for cusp-seeded Newton iterations.
std::complex<double> j_of_q(std::complex<double> q, int order);
std::complex<double> dj_dq(std::complex<double> q, int order);
// Smallest truncation order whose tail bound at |q| meets the target; the
// default order is 40 and the escalation cap is 65536.
int auto_order(double q_abs, double target = 1e-14);
}  // namespace qdomain

}  // namespace faltmin
