#include "faltmin/tau.hpp"

#include <cmath>
#include <stdexcept>

namespace faltmin {

namespace {
constexpr int kReductionCap = 10000;
constexpr double kBoundaryTol = 1e-15;
}  // namespace

TauPoint::TauPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::domain_error("TauPoint: coordinates must be finite");
  }
  if (!(im > 0.0)) {
    throw std::domain_error("TauPoint: imaginary part must be strictly positive");
  }
}

bool TauPoint::is_reduced(double tol) const {
  if (std::abs(re_) > 0.5 + tol) return false;
  return re_ * re_ + im_ * im_ >= 1.0 - tol;
}

std::complex<double> UnimodularMatrix::apply(std::complex<double> tau) const {
  std::complex<double> num = static_cast<double>(a) * tau + static_cast<double>(b);
  std::complex<double> den = static_cast<double>(c) * tau + static_cast<double>(d);
  return num / den;
}

std::complex<double> UnimodularMatrix::automorphy(std::complex<double> reduced) const {
  std::complex<double> den = static_cast<double>(c) * reduced + static_cast<double>(d);
  return den * den;
}

ReductionResult reduce_to_fundamental_domain(const TauPoint& tau) {
  if (std::abs(tau.re()) > 9e15) {
    throw std::domain_error("reduce_to_fundamental_domain: |Re tau| too large for exact integer translation");
  }
  std::complex<double> t = tau.value();
  // Accumulates the matrix sending the current iterate back to the input.
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  int moves = 0;

  for (int iter = 0; iter < kReductionCap; ++iter) {
    // Translate the real part into (-1/2, 1/2]; ceil(x - 1/2) picks the
    // representative with ties resolved toward +1/2.
    double shift = std::ceil(t.real() - 0.5);
    if (shift != 0.0) {
      auto n = static_cast<std::int64_t>(shift);
      t -= shift;
      // Compose with T^n on the right: the input equals gamma * T^n (new t).
      b += a * n;
      d += c * n;
      ++moves;
    }
    double norm2 = std::norm(t);
    bool invert = norm2 < 1.0 - kBoundaryTol ||
                  (norm2 <= 1.0 + kBoundaryTol && t.real() < -kBoundaryTol);
    if (!invert) break;
    t = -1.0 / t;
    // Compose with S = [[0,-1],[1,0]] on the right.
    std::int64_t na = b, nb = -a, nc = d, nd = -c;
    a = na;
    b = nb;
    c = nc;
    d = nd;
    ++moves;
  }

  ReductionResult out{TauPoint(t.real(), t.imag()), UnimodularMatrix{a, b, c, d}, moves};
  return out;
}

}  // namespace faltmin
