#pragma once

// Stable Faltings heights of algebraic numbers from integer polynomials,
// closed-form brackets for roots of unity, and the degree/unit constraints
// that follow from a height budget.

#include <utility>

#include "faltmin/polynomial.hpp"
#include "faltmin/roots.hpp"

namespace faltmin {

struct HeightResult {
  double archimedean = 0.0;     // (1/d) * sum over roots of g_hyp
  double finite = 0.0;          // (1/d) * log|leading coefficient|
  double total = 0.0;           // (archimedean + finite) / 12
  double error_estimate = 0.0;  // conservative numerical error bound
};

// Height of the root multiset of poly (the Faltings height of alpha when
// poly is its minimal polynomial).  Conjugate roots are evaluated once.
HeightResult faltings_height(const IntegerPolynomial& poly);

// Closed-form bracket [low, high] containing the height of any primitive
// n-th root of unity: ends -0.7486222078 - c and -0.7486221244 - c with
// c = mobius(n) / (165888 * euler_phi(n)).
std::pair<double, double> root_of_unity_bracket(long long n);

struct IntegralityCaps {
  double max_log_lead_per_degree;   // (1/d) log|a| <= 12(h - h_F(1)) / (1 - dx)
  double max_log_const_per_degree;  // (1/d) log|b| <= 12(h - h_F(1)) / dx
};

// The two per-degree coefficient caps implied by a height budget h, using
// the computed h_F(1) and the computed derivative dx = d/dx g_hyp(1).
// Negative caps (h < h_F(1)) mean no algebraic number fits the budget.
IntegralityCaps integrality_constraints(double h);

enum class RootOfUnityClass { kBelow, kAbove, kUndecided };

// Position of h_F(zeta_n) relative to the essential minimum, decided purely
// from the closed-form bracket and computed two-sided bounds mu_lower <=
// mu <= mu_upper: "above" when the whole bracket exceeds mu_upper, "below"
// when it sits under mu_lower, otherwise undecided.
RootOfUnityClass classify_root_of_unity(long long n, double mu_lower, double mu_upper);

}  // namespace faltmin
