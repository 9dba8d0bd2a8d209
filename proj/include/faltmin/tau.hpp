#pragma once

#include <complex>
#include <cstdint>

namespace faltmin {

// A point of the upper half-plane. Constructing one validates im > 0 and
// finiteness, so downstream evaluators can assume a usable argument.
class TauPoint {
 public:
  TauPoint(double re, double im);
  explicit TauPoint(std::complex<double> tau) : TauPoint(tau.real(), tau.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> value() const { return {re_, im_}; }

  // Membership in the closed fundamental domain |re| <= 1/2, re^2+im^2 >= 1,
  // up to the given tolerance on both boundary comparisons.
  bool is_reduced(double tol = 1e-12) const;

 private:
  double re_;
  double im_;
};

// An integer Moebius transformation with determinant one. apply() acts as
// tau -> (a*tau + b)/(c*tau + d).
struct UnimodularMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::complex<double> apply(std::complex<double> tau) const;
  // Derivative factor of the inverse map at the reduced point: applying the
  // matrix to `reduced` multiplies weight-k covariants by (c*reduced + d)^k.
  std::complex<double> automorphy(std::complex<double> reduced) const;
  std::int64_t det() const { return a * d - b * c; }
};

struct ReductionResult {
  TauPoint reduced;
  // Maps the reduced representative back to the input: map.apply(reduced) = input.
  UnimodularMatrix map;
  int moves = 0;
};

// Translate-then-invert reduction into the fundamental domain. Boundary ties
// are resolved toward re >= 0 (|tau| = 1 inversions) and re = +1/2
// (translations), so the representative is unique. Capped at 10^4 moves.
ReductionResult reduce_to_fundamental_domain(const TauPoint& tau);

}  // namespace faltmin
