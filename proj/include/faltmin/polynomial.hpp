#pragma once

// Primitive squarefree integer polynomials (constant term first) and the
// classical arithmetic functions used alongside them.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace faltmin {

class IntegerPolynomial {
 public:
  // Validates: degree >= 1, nonzero leading coefficient, content 1,
  // squarefree over the rationals (throws RepeatedRoots otherwise;
  // std::domain_error for the structural failures).
  explicit IntegerPolynomial(std::vector<long long> coeffs);

  // Accepts "c0,c1,...,cd" (constant term first) or "cyclotomic:n".
  static IntegerPolynomial parse(const std::string& text);

  const std::vector<long long>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long leading() const { return coeffs_.back(); }
  long long constant() const { return coeffs_.front(); }

  // Horner evaluation in extended precision.
  std::complex<double> evaluate(std::complex<double> z) const;
  // sum_i |c_i| |z|^i — a majorant for |p| used in residual contracts.
  double evaluate_majorant(double abs_z) const;

  std::vector<long long> derivative_coefficients() const;

  std::string coeff_string() const;  // "1,-1,1"
  std::string pretty() const;        // "z^2 - z + 1"

  bool operator==(const IntegerPolynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<long long> coeffs_;
};

// gcd of the absolute coefficient values (0 for the zero vector).
long long content_of(const std::vector<long long>& coeffs);

// True when gcd(p, p') is constant over the rationals (no repeated complex
// roots); exact integer arithmetic throughout.
bool is_squarefree(const std::vector<long long>& coeffs);

// Moebius function; 0 on non-squarefree n.  Requires n >= 1.
int mobius(long long n);

// Euler totient.  Requires n >= 1.
long long euler_phi(long long n);

// n-th cyclotomic polynomial by exact division of z^n - 1 by the lower
// cyclotomic factors (memoized).  Requires 1 <= n <= 10^6.
IntegerPolynomial cyclotomic(long long n);

// Exact polynomial division over the integers: returns num/den when den
// divides num with integer quotient coefficients, nullopt otherwise.
// Vectors are constant-term-first; den must have nonzero leading entry.
std::optional<std::vector<long long>> exact_divide(const std::vector<long long>& num,
                                                   const std::vector<long long>& den);

}  // namespace faltmin
