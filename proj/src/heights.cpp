#include "faltmin/heights.hpp"

#include <cmath>
#include <complex>

#include "faltmin/disk.hpp"
#include "faltmin/parallel.hpp"

namespace faltmin {

namespace {

// Bracket ends for the height of a primitive n-th root of unity before the
// mobius/totient correction term is subtracted.
constexpr double kUnityBracketLow = -0.7486222078;
constexpr double kUnityBracketHigh = -0.7486221244;

double height_of_one() {
  static const double value = faltings_height(IntegerPolynomial({-1, 1})).total;
  return value;
}

}  // namespace

HeightResult faltings_height(const IntegerPolynomial& poly) {
  AlgebraicNumberSpec spec = find_roots(poly);
  int d = poly.degree();

  NeumaierSum arch_sum;
  for (const std::complex<double>& r : spec.roots) {
    if (r.imag() < 0.0) continue;  // conjugate pair: counted via its partner
    double weight = r.imag() > 0.0 ? 2.0 : 1.0;
    arch_sum.add(weight * g_hyp(r));
  }

  HeightResult out;
  out.archimedean = arch_sum.value() / d;
  out.finite = std::log(std::abs(static_cast<double>(poly.leading()))) / d;
  out.total = (out.archimedean + out.finite) / 12.0;

  // Error model: each root carries |p(z)|/|p'(z)| positional error amplified
  // by a gradient bound for g_hyp (|grad| stays below ~0.06 everywhere the
  // roots of a primitive polynomial can lie), plus the g_hyp tolerance.
  std::vector<long long> dcoeffs = poly.derivative_coefficients();
  double err = 0.0;
  for (const std::complex<double>& r : spec.roots) {
    std::complex<double> dpv = 0.0;
    for (size_t i = dcoeffs.size(); i-- > 0;) {
      dpv = dpv * r + static_cast<double>(dcoeffs[i]);
    }
    double root_err = std::abs(poly.evaluate(r)) / std::max(std::abs(dpv), 1e-300);
    err += 0.06 * root_err + 1e-12;
  }
  out.error_estimate = err / (12.0 * d) + 1e-13;
  return out;
}

std::pair<double, double> root_of_unity_bracket(long long n) {
  double c = static_cast<double>(mobius(n)) / (165888.0 * static_cast<double>(euler_phi(n)));
  return {kUnityBracketLow - c, kUnityBracketHigh - c};
}

IntegralityCaps integrality_constraints(double h) {
  double dx = dx_g_hyp_at_1();
  double budget = 12.0 * (h - height_of_one());
  return {budget / (1.0 - dx), budget / dx};
}

RootOfUnityClass classify_root_of_unity(long long n, double mu_lower, double mu_upper) {
  auto [low, high] = root_of_unity_bracket(n);
  if (low > mu_upper) return RootOfUnityClass::kAbove;
  if (high < mu_lower) return RootOfUnityClass::kBelow;
  return RootOfUnityClass::kUndecided;
}

}  // namespace faltmin
