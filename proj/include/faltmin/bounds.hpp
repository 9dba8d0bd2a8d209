#pragma once

// Lower bounds for the essential minimum of the Faltings height via
// real-section Green functions (grid + simplex refinement + cusp cutoff),
// and upper bounds via equilibrium-measure circle integrals with a
// closed-form certified majorant.

#include <complex>
#include <vector>

#include "faltmin/polynomial.hpp"

namespace faltmin {

struct SectionMember {
  IntegerPolynomial poly;
  double exponent;  // >= 0
};

// A weight-one real section: Green function
//   G(zeta) = (1/12) g_hyp(zeta) - sum_k exponent_k * log|P_k(zeta)|.
// delta_exponent = 1/12 - sum exponent_k * degree_k must be >= 0 (the
// weight budget); > 0 is required for G to diverge at infinity.
class SectionFamily {
 public:
  explicit SectionFamily(std::vector<SectionMember> members);

  const std::vector<SectionMember>& members() const { return members_; }
  double delta_exponent() const { return delta_exponent_; }

  // Cached per-member data for log-safe evaluation and the cusp bound.
  const std::vector<std::vector<std::complex<double>>>& member_roots() const {
    return member_roots_;
  }
  const std::vector<double>& member_log_lead() const { return member_log_lead_; }
  const std::vector<double>& member_log_coeff_sum() const { return member_log_coeff_sum_; }

 private:
  std::vector<SectionMember> members_;
  double delta_exponent_ = 1.0 / 12.0;
  std::vector<std::vector<std::complex<double>>> member_roots_;
  std::vector<double> member_log_lead_;
  std::vector<double> member_log_coeff_sum_;
};

// G(zeta); +infinity at the roots of member polynomials.
double section_green(const SectionFamily& family, std::complex<double> zeta);

struct LowerBoundReport {
  SectionFamily family;
  double infimum = 0.0;
  std::vector<std::complex<double>> argmin;  // best refined minima, best first
  double grid_resolution = 0.0;
  int refinement_iterations = 0;
};

// Infimum of G over the plane: fundamental-domain grid (grid_n x grid_n)
// plus a polar patch near the conic point, simplex refinement from the best
// cells, and an analytic cusp cutoff certifying that the search region
// contains the minimum.  Requires delta_exponent > 0 (BudgetViolation).
LowerBoundReport global_infimum(const SectionFamily& family, int grid_n = 400,
                                int workers = 0);

// Maximize global_infimum over the exponent vector (coordinate ascent plus
// simplex polish) within the box [0, 1e-3] and the weight budget, starting
// from init.  Returns the full report at the optimum.
LowerBoundReport optimize_exponents(const std::vector<IntegerPolynomial>& polys,
                                    std::vector<double> init, int grid_n = 400,
                                    int workers = 0);

struct UpperBoundReport {
  double center = 0.0;
  double value = 0.0;  // (1/12) * integral of g_hyp over the unit circle at center
  int nodes = 0;
  double node_doubling_delta = 0.0;  // |change| under the last node doubling
};

// (1/12) * int_0^1 g_hyp(center + e^{2*pi*i*t}) dt by the periodic trapezoid
// rule with node doubling until the change is below 1e-10 (cap 2^16).
UpperBoundReport circle_integral(double center, int min_nodes = 4096, int workers = 0);

// The same integral through the exact identity
//   int g_hyp = -log(1728*pi^6) - log|h_hat(s_a)| - 6 * int log(1-|w_a(t)|^2) dt
// valid for center in (0, 2); cross-validates circle_integral to 1e-9.
double circle_integral_hhat(double center);

// Closed-form certified majorant of circle_integral(center): replaces the
// integrand by its cubic local model plus bracketed radii, so the value is
// an upper bound for the essential minimum by construction.
UpperBoundReport certified_upper_bound(double center);

// Golden-section minimization of the circle integral over [lo, hi].
UpperBoundReport optimize_center(double lo, double hi, int workers = 0);

// 6 * (zeta(-1)/2 + zeta'(-1)): the height lower bound for the full modular
// curve coming from its degree and self-intersection data.
double zhang_bound();

}  // namespace faltmin
