#include "faltmin/disk.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "faltmin/constants.hpp"
#include "faltmin/errors.hpp"
#include "faltmin/modular.hpp"
#include "faltmin/qseries.hpp"

namespace faltmin {

namespace {

using cplx = std::complex<double>;

constexpr double kDiskChartCutoff = 3000.0;  // |zeta| above this -> cusp Newton

cplx pow12(cplx z) {
  cplx z2 = z * z;
  cplx z4 = z2 * z2;
  cplx z8 = z4 * z4;
  return z8 * z4;
}

double residual_target(double zeta_abs) { return 1e-10 * std::max(1.0, zeta_abs); }

/// log|Delta(tau)| without evaluating Delta: -2*pi*Im(tau) is the dominant
// term and the product factors contribute 24*sum log|1-q^n|.
double log_abs_delta(const TauPoint& tau) {
  double y = tau.im();
  double scale = std::exp(-2.0 * kPi * y);
  cplx q{scale * std::cos(2.0 * kPi * tau.re()), scale * std::sin(2.0 * kPi * tau.re())};
  int order = qdomain::auto_order(std::abs(q));
  double acc = 0.0;
  cplx qp = 1.0;
  for (int n = 1; n <= order; ++n) {
    qp *= q;
    acc += std::log(std::abs(1.0 - qp));
  }
  return -2.0 * kPi * y + 24.0 * acc;
}

struct Attempt {
  TauPoint tau;
  std::optional<cplx> w;
  int iterations = 0;
};

// Newton in the nome q on j(q) = zeta, seeded by the leading behaviour
// j ~ 1/q near the cusp.  Intended for |zeta| > kDiskChartCutoff, where the
// solution has |q| << 1 and lies safely inside the fundamental domain.
std::optional<Attempt> cusp_newton(cplx zeta) {
  cplx q = 1.0 / zeta;
  int it = 0;
  for (; it < 40; ++it) {
    double qa = std::abs(q);
    if (!(qa > 0.0) || qa > 0.05) return std::nullopt;  // wandered off the cusp region
    int order = qdomain::auto_order(qa);
    cplx f = qdomain::j_of_q(q, order) - zeta;
    cplx step = f / qdomain::dj_dq(q, order);
    q -= step;
    if (std::abs(step) <= 1e-16 * std::abs(q)) break;
  }
  double qa = std::abs(q);
  if (!(qa > 0.0) || qa > 0.05) return std::nullopt;
  double re = std::atan2(q.imag(), q.real()) / (2.0 * kPi);
  double im = -std::log(qa) / (2.0 * kPi);
  return Attempt{TauPoint(re, im), std::nullopt, it + 1};
}

// Damped Newton in u = w^3.  j(psi(w)) is a function of u alone with a
// simple zero at u = 0, so u is the right variable near the chart center.
std::optional<Attempt> disk_newton(cplx zeta) {
  const double C = j_disk_leading_coefficient();
  cplx u = zeta / C;
  cplx w = cbrt_canonical(u);
  double res = std::abs(j_disk(w) - zeta);
  const double target = 0.25 * residual_target(std::abs(zeta));
  int it = 0;
  for (; it < 60 && res > target; ++it) {
    cplx fprime = j_disk_derivative(w) / (3.0 * w * w);
    if (!(std::abs(fprime) > 0.0)) return std::nullopt;
    cplx step = (j_disk(w) - zeta) / fprime;
    bool accepted = false;
    double t = 1.0;
    for (int halving = 0; halving < 25; ++halving, t *= 0.5) {
      cplx u_next = u - t * step;
      if (std::abs(u_next) > 0.5) continue;  // keep psi(w) well inside the half-plane
      cplx w_next = cbrt_canonical(u_next);
      double res_next = std::abs(j_disk(w_next) - zeta);
      if (res_next < res * (1.0 - 0.25 * t)) {
        u = u_next;
        w = w_next;
        res = res_next;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (!(std::abs(w) < 1.0)) return std::nullopt;
  ReductionResult red = reduce_to_fundamental_domain(TauPoint(psi(w).real(), psi_im(w)));
  return Attempt{red.reduced, w, it};
}

// Rotate a disk coordinate by cube roots of unity into the canonical sector
// arg(w) in [pi, 5*pi/3); the composite j(psi(w)) is unchanged.
cplx to_canonical_sector(cplx w) {
  return cbrt_canonical(w * w * w);
}

// Coarse search over a fundamental-domain grid followed by Newton in tau.
// Robust last resort for values the specialized seeds fail to reach.
std::optional<Attempt> grid_seeded(cplx zeta) {
  const int kGrid = 64;
  double best = std::numeric_limits<double>::infinity();
  TauPoint seed(0.0, 1.0);
  for (int i = 0; i < kGrid; ++i) {
    double re = -0.5 + (i + 0.5) / kGrid;
    for (int k = 0; k < kGrid; ++k) {
      double im = 0.87 + (3.0 - 0.87) * (k + 0.5) / kGrid;
      TauPoint t(re, im);
      if (!t.is_reduced(1e-12)) continue;  // skip seeds below the unit arc
      double d = std::abs(j_invariant(t) - zeta);
      if (d < best) {
        best = d;
        seed = t;
      }
    }
  }
  cplx tau = seed.value();
  int it = 0;
  for (; it < 80; ++it) {
    TauPoint tp(tau.real(), tau.imag());
    cplx f = j_invariant(tp) - zeta;
    if (std::abs(f) <= 0.25 * residual_target(std::abs(zeta))) break;
    cplx deriv = j_derivative(tp);
    if (!(std::abs(deriv) > 0.0)) return std::nullopt;
    cplx step = f / deriv;
    double t = 1.0;
    cplx tau_next = tau - step;
    for (int halving = 0; halving < 30 && tau_next.imag() < 0.05; ++halving) {
      t *= 0.5;
      tau_next = tau - t * step;
    }
    if (tau_next.imag() < 0.05) return std::nullopt;
    if (std::abs(tau_next - tau) <= 1e-16 * (1.0 + std::abs(tau))) {
      tau = tau_next;
      break;
    }
    tau = tau_next;
  }
  ReductionResult red = reduce_to_fundamental_domain(TauPoint(tau.real(), tau.imag()));
  std::optional<cplx> w;
  if (std::abs(zeta) <= kDiskChartCutoff) {
    w = to_canonical_sector(psi_inverse(red.reduced.value()));
  }
  return Attempt{red.reduced, w, it};
}

std::optional<InversionResult> finish(const std::optional<Attempt>& attempt, cplx zeta,
                                      InversionMethod method) {
  if (!attempt) return std::nullopt;
  InversionResult out{attempt->tau, attempt->w, 0.0, method, attempt->iterations};
  out.residual = std::abs(j_invariant(attempt->tau) - zeta);
  if (out.residual > residual_target(std::abs(zeta))) return std::nullopt;
  return out;
}

}  // namespace

std::complex<double> psi(std::complex<double> w) {
  return (rho_bar() * w + rho()) / (w + 1.0);
}

std::complex<double> psi_inverse(std::complex<double> tau) {
  return -(tau - rho()) / (tau - rho_bar());
}

std::complex<double> psi_derivative(std::complex<double> w) {
  cplx d = w + 1.0;
  return cplx(0.0, -sqrt3()) / (d * d);
}

double psi_im(std::complex<double> w) {
  return 0.5 * sqrt3() * (1.0 - std::norm(w)) / std::norm(w + 1.0);
}

std::complex<double> cbrt_canonical(std::complex<double> u) {
  double r = std::cbrt(std::abs(u));
  double a = (std::arg(u) + 4.0 * kPi) / 3.0;
  if (a >= 5.0 * kPi / 3.0) a -= 2.0 * kPi / 3.0;
  return std::polar(r, a);
}

std::complex<double> j_disk(std::complex<double> w) {
  TauPoint t(psi(w).real(), psi_im(w));
  return j_invariant(t);
}

std::complex<double> j_disk_derivative(std::complex<double> w) {
  TauPoint t(psi(w).real(), psi_im(w));
  return j_derivative(t) * psi_derivative(w);
}

double j_disk_leading_coefficient() {
  double g = sqrt3() * kGammaOneThird * kGammaOneThird / kPi;
  double g3 = g * g * g;
  return g3 * g3 * g3;
}

std::complex<double> h_hat(std::complex<double> w) {
  TauPoint t(psi(w).real(), psi_im(w));
  QSeriesEval d = delta_eval(t);
  return d.value / pow12(w + 1.0);
}

std::complex<double> log_h_hat_derivative(std::complex<double> w) {
  TauPoint t(psi(w).real(), psi_im(w));
  QSeriesEval e2 = eisenstein(EisensteinKind::E2, t);
  return cplx(0.0, 2.0 * kPi) * e2.value * psi_derivative(w) - 12.0 / (w + 1.0);
}

double log_abs_h_hat(std::complex<double> w) {
  TauPoint t(psi(w).real(), psi_im(w));
  return log_abs_delta(t) - 12.0 * std::log(std::abs(w + 1.0));
}

double g_disk(std::complex<double> w) {
  return -std::log(1728.0 * std::pow(kPi, 6)) - 6.0 * std::log1p(-std::norm(w)) -
         log_abs_h_hat(w);
}

InversionResult invert_j(std::complex<double> zeta) {
  if (zeta == 0.0) {
    TauPoint center(rho().real(), rho().imag());
    InversionResult out{center, cplx(0.0, 0.0), 0.0, InversionMethod::kDiskNewton, 0};
    out.residual = std::abs(j_invariant(center));
    return out;
  }
  double za = std::abs(zeta);
  if (!std::isfinite(za)) throw std::domain_error("invert_j: non-finite input");
  if (za > kDiskChartCutoff) {
    if (auto r = finish(cusp_newton(zeta), zeta, InversionMethod::kCuspNewton)) return *r;
  } else {
    if (auto r = finish(disk_newton(zeta), zeta, InversionMethod::kDiskNewton)) return *r;
  }
  if (auto r = finish(grid_seeded(zeta), zeta, InversionMethod::kGridSeeded)) return *r;
  throw NonConvergence("invert_j: residual target not reached for zeta");
}

double g_hyp(std::complex<double> zeta) {
  InversionResult inv = invert_j(zeta);
  if (inv.w) return g_disk(*inv.w);
  return g_infinity(inv.tau);
}

double r_one() {
  static const double value = std::abs(*invert_j(cplx(1.0, 0.0)).w);
  return value;
}

double g_one() {
  static const double value = g_hyp(cplx(1.0, 0.0));
  return value;
}

double dx_g_hyp_at_1() {
  static const double value = [] {
    double r1 = r_one();
    double numer = 12.0 * r1 / (1.0 - r1 * r1) - log_h_hat_derivative(cplx(r1, 0.0)).real();
    double denom = j_disk_derivative(cplx(r1, 0.0)).real();
    return numer / denom;
  }();
  return value;
}

}  // namespace faltmin
