#pragma once

// Complex root sets of integer polynomials with a certified residual
// contract, via Aberth–Ehrlich simultaneous iteration plus Newton polish.

#include <complex>
#include <vector>

#include "faltmin/polynomial.hpp"

namespace faltmin {

struct AlgebraicNumberSpec {
  IntegerPolynomial poly;
  std::vector<std::complex<double>> roots;  // sorted by (real, imag); conjugation-closed
  double max_residual = 0.0;                // max |p(root)| over the set
  double residual_bound = 0.0;              // contract: max_residual <= this
};

// All complex roots of poly.  Guarantees, for every returned root z,
// |p(z)| <= 1e-11 * sum_i |c_i| |z|^i, and exact conjugation closure
// (non-real roots are stored as matched conjugate pairs).
// Throws NonConvergence when the contract cannot be met.
AlgebraicNumberSpec find_roots(const IntegerPolynomial& poly);

}  // namespace faltmin
