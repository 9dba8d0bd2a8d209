#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "faltmin/constants.hpp"
#include "faltmin/disk.hpp"
#include "faltmin/distortion.hpp"
#include "oracles.hpp"

using faltmin::CertificateConstants;
using faltmin::CertificateReport;
using faltmin::KoebeBounds;
using faltmin::RadiusBracket;
using cplx = std::complex<double>;

namespace {

void check_close(cplx got, cplx want, double tol) {
  CHECK(std::abs(got - want) <= tol * (1.0 + std::abs(want)));
}

}  // namespace

TEST_CASE("certificate constants match their closed forms") {
  CertificateConstants c = faltmin::constants();
  CHECK(c.r0 == doctest::Approx(2.0 - faltmin::sqrt3()).epsilon(1e-15));
  CHECK(c.f_prime_0 == doctest::Approx(oracles::kFPrime0).epsilon(1e-13));
  CHECK(c.f_prime_0 ==
        doctest::Approx(faltmin::j_disk_leading_coefficient()).epsilon(1e-15));
  CHECK(c.eps1 == doctest::Approx(oracles::kEps1).epsilon(1e-13));
  CHECK(c.eps1 ==
        doctest::Approx(1.0 / (std::pow(c.r0, 3) * c.f_prime_0)).epsilon(1e-13));
  CHECK(c.kappa1 == doctest::Approx(oracles::kKappa1).epsilon(1e-12));
  double g0 = faltmin::sqrt3() * faltmin::kGammaOneThird *
              faltmin::kGammaOneThird / faltmin::kPi;
  CHECK(c.gamma0 == doctest::Approx(g0).epsilon(1e-14));
  CHECK(std::pow(c.gamma0, 9) == doctest::Approx(c.f_prime_0).epsilon(1e-13));
  double g1 = 3.0 * std::log(192.0) -
              6.0 * std::log(std::pow(g0, 3) - std::pow(g0, -3));
  CHECK(c.gamma1 == doctest::Approx(g1).epsilon(1e-13));
  // eps1 is pinned to the published integer bracket.
  CHECK(c.eps1 > 1.0 / 4573.0);
  CHECK(c.eps1 < 1.0 / 4572.0);
}

TEST_CASE("bracket root solves its defining quadratic") {
  double eps1 = faltmin::constants().eps1;
  for (double alpha : {1e-12, 1e-4, 0.1, 0.205, 1.0, 10.0, 100.0, 1000.0}) {
    double x = faltmin::kappa(alpha);
    // 1 + x = alpha * (1 + (1+x)*eps1)^2, rearranged to relative form.
    double lhs = 1.0 + x;
    double rhs = alpha * std::pow(1.0 + (1.0 + x) * eps1, 2);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(rhs)));
    // The smaller root stays near alpha - 1 for small alpha*eps1.
    CHECK(x >= alpha - 1.0 - 1e-12);
  }
  CHECK(faltmin::kappa(1.0) == doctest::Approx(oracles::kKappa1).epsilon(1e-12));
}

TEST_CASE("bracket domain is enforced") {
  CHECK_THROWS_AS(faltmin::kappa(0.0), std::domain_error);
  CHECK_THROWS_AS(faltmin::kappa(-2.0), std::domain_error);
  CHECK_THROWS_AS(faltmin::kappa(1144.0), std::domain_error);
  CHECK_THROWS_AS(faltmin::radius_bracket(0.0), std::domain_error);
  CHECK_THROWS_AS(faltmin::radius_bracket(1728.0), std::domain_error);
  // Just inside the admissible interval both calls succeed.
  CHECK_NOTHROW(faltmin::kappa(1143.0));
  CHECK_NOTHROW(faltmin::radius_bracket(1143.0));
}

TEST_CASE("radius bracket pins the unit-circle preimage radii") {
  RadiusBracket b = faltmin::radius_bracket(0.205);
  CHECK(b.alpha == 0.205);
  CHECK(b.r_minus == doctest::Approx(oracles::kRMinus0205).epsilon(1e-13));
  CHECK(b.r_plus == doctest::Approx(oracles::kRPlus0205).epsilon(1e-13));
  CHECK(b.r_minus < b.r_plus);
  CHECK(b.kappa_alpha == doctest::Approx(faltmin::kappa(0.205)).epsilon(1e-15));

  // The actual preimages of |zeta| = alpha land inside the bracket, for
  // several alpha and several phases.
  for (double alpha : {0.205, 1.0, 10.0, 500.0}) {
    RadiusBracket rb = faltmin::radius_bracket(alpha);
    for (double th : {0.0, 1.0, 2.5, 4.4}) {
      auto res = faltmin::invert_j(std::polar(alpha, th));
      REQUIRE(res.w.has_value());
      double r = std::abs(*res.w);
      CHECK(r >= rb.r_minus * (1.0 - 1e-9));
      CHECK(r <= rb.r_plus * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("distortion bound formulas at a sample modulus") {
  double m = 0.3;
  KoebeBounds kb = faltmin::koebe_bounds(m);
  CHECK(kb.value_lower == doctest::Approx(m / std::pow(1.0 + m, 2)).epsilon(1e-15));
  CHECK(kb.value_upper == doctest::Approx(m / std::pow(1.0 - m, 2)).epsilon(1e-15));
  CHECK(kb.deriv_lower ==
        doctest::Approx((1.0 - m) / std::pow(1.0 + m, 3)).epsilon(1e-15));
  CHECK(kb.deriv_upper ==
        doctest::Approx((1.0 + m) / std::pow(1.0 - m, 3)).epsilon(1e-15));
  CHECK(kb.log_deriv_bound ==
        doctest::Approx((1.0 + m) / (1.0 - m)).epsilon(1e-15));
  // Curvature disk: center 2m^2/(1-m^2) shifted by the growth term 4m/(1-m^2).
  CHECK(kb.curvature_radius > 0.0);
  CHECK(kb.curvature_center - kb.curvature_radius <= 0.0);
}

TEST_CASE("all five certificates verify cleanly") {
  CertificateReport koebe = faltmin::verify_koebe(600);
  CertificateReport approx = faltmin::verify_approximation(600);
  CertificateReport cube = faltmin::verify_unit_circle_cube_law(600);
  CertificateReport linear = faltmin::verify_linear_model(10000);
  CertificateReport jlog = faltmin::verify_j_log_derivative(200);

  for (const CertificateReport* rep : {&koebe, &approx, &cube, &linear, &jlog}) {
    CAPTURE(rep->name);
    CHECK(rep->pass);
    CHECK(rep->max_violation <= 1e-9);
    CHECK(rep->samples > 0);
    CHECK_FALSE(rep->name.empty());
  }
  // The affine-model certificate carries the documented 5e-7 margin.
  CHECK(linear.samples >= 10000);
}

TEST_CASE("cube-coordinate chart agrees with the disk chart") {
  for (cplx u : {cplx(1e-3, 2e-3), cplx(-4e-3, 1e-3), cplx(6e-3, -6e-3)}) {
    check_close(faltmin::chart(u), faltmin::j_disk(faltmin::cbrt_canonical(u)),
                1e-12);
  }
  // Derivative against a central difference (real step in u).
  cplx u0(3e-3, 1.5e-3);
  double h = 1e-7;
  cplx fd = (faltmin::chart(u0 + h) - faltmin::chart(u0 - h)) / (2.0 * h);
  check_close(faltmin::chart_derivative(u0), fd, 1e-6);
}

TEST_CASE("Cauchy-integral recovery of the chart derivative at zero") {
  double quad = faltmin::chart_derivative_at_zero_quadrature();
  CHECK(std::abs(quad - oracles::kFPrime0) <= 1e-8 * oracles::kFPrime0);
}

TEST_CASE("higher logarithmic derivatives extend the direct one") {
  cplx w(0.07, 0.04);
  // Order 0 passes through to the analytic first derivative.
  check_close(faltmin::log_h_hat_derivative_higher(w, 0),
              faltmin::log_h_hat_derivative(w), 1e-14);
  // Order 1 of the quadrature is d/dw of (log h_hat)'; compare with a
  // central stencil of the analytic derivative.
  cplx first = faltmin::log_h_hat_derivative_higher(w, 1);
  double h = 1e-6;
  cplx fd = (faltmin::log_h_hat_derivative(w + h) -
             faltmin::log_h_hat_derivative(w - h)) /
            (2.0 * h);
  check_close(first, fd, 1e-6);
  // Doubling the node count must not move the quadrature (geometric
  // convergence well past double precision at 256 nodes).
  check_close(faltmin::log_h_hat_derivative_higher(w, 3, 0.05, 512),
              faltmin::log_h_hat_derivative_higher(w, 3), 1e-11);
}
