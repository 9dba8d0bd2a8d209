#include "faltmin/qseries.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "faltmin/constants.hpp"

namespace faltmin {

namespace {

constexpr int kDefaultOrder = 40;
constexpr int kMaxOrder = 65536;

// Divisor power sums sigma_1, sigma_3, sigma_5 up to the escalation cap,
// built once on first use (about a millisecond) and read-only afterwards.
// Values are doubles: the largest entries (~n^6 at n = 65536) exceed 2^63,
// but a relative 1e-16 representation error is far below the tail bounds.
struct SigmaTables {
  std::vector<double> s1, s3, s5;  // index 0 unused

  SigmaTables() : s1(kMaxOrder + 1, 0.0), s3(kMaxOrder + 1, 0.0), s5(kMaxOrder + 1, 0.0) {
    for (int d = 1; d <= kMaxOrder; ++d) {
      double d1 = d;
      double d3 = d1 * d1 * d1;
      double d5 = d3 * d1 * d1;
      for (int m = d; m <= kMaxOrder; m += d) {
        s1[m] += d1;
        s3[m] += d3;
        s5[m] += d5;
      }
    }
  }
};

const SigmaTables& sigma_tables() {
  static const SigmaTables tables;  // thread-safe magic static
  return tables;
}

// Upper bound for sum_{n > N} n^m x^n via the term-ratio r = x*(1+1/(N+1))^m:
// tail <= (N+1)^m x^{N+1} / (1 - r) when r < 1.
double power_series_tail(double x, int order, int m) {
  if (x <= 0.0) return 0.0;
  double ratio = x * std::pow(1.0 + 1.0 / (order + 1), m);
  if (ratio >= 0.999) return std::numeric_limits<double>::infinity();
  double lead = std::pow(static_cast<double>(order + 1), m) * std::pow(x, order + 1);
  return lead / (1.0 - ratio);
}

// Absolute tail bound of the Eisenstein q-sums (coefficient sigma_k(n) <= n^{k+1}).
double eisenstein_tail(EisensteinKind kind, double q_abs, int order) {
  switch (kind) {
    case EisensteinKind::E2:
    case EisensteinKind::E2Star:
      return 24.0 * power_series_tail(q_abs, order, 2);
    case EisensteinKind::E4:
      return 240.0 * power_series_tail(q_abs, order, 4);
    case EisensteinKind::E6:
      return 504.0 * power_series_tail(q_abs, order, 6);
  }
  return std::numeric_limits<double>::infinity();
}

std::complex<double> weighted_q_sum(const std::vector<double>& table, std::complex<double> q,
                                    int order) {
  std::complex<double> acc = 0.0;
  std::complex<double> qp = 1.0;
  for (int n = 1; n <= order; ++n) {
    qp *= q;
    acc += table[n] * qp;
  }
  return acc;
}

std::complex<double> nome(const TauPoint& tau) {
  // q = exp(2*pi*i*tau)
  double scale = std::exp(-2.0 * kPi * tau.im());
  double phase = 2.0 * kPi * tau.re();
  return {scale * std::cos(phase), scale * std::sin(phase)};
}

int resolve_order(double q_abs, int requested, double target) {
  if (requested > 0) return requested;
  return qdomain::auto_order(q_abs, target);
}

}  // namespace

namespace qdomain {

int auto_order(double q_abs, double target) {
  if (q_abs >= 0.995) {
    throw std::domain_error("q-series: |q| too close to 1 (point too deep below the fundamental domain)");
  }
  int order = kDefaultOrder;
  while (order < kMaxOrder) {
    // The weight-6 series has the slowest-decaying majorant; use it to pick
    // one shared order for everything evaluated at this point.
    if (504.0 * power_series_tail(q_abs, order, 6) <= target) return order;
    order *= 2;
  }
  return kMaxOrder;
}

std::complex<double> e2(std::complex<double> q, int order) {
  return 1.0 - 24.0 * weighted_q_sum(sigma_tables().s1, q, order);
}

std::complex<double> e4(std::complex<double> q, int order) {
  return 1.0 + 240.0 * weighted_q_sum(sigma_tables().s3, q, order);
}

std::complex<double> e6(std::complex<double> q, int order) {
  return 1.0 - 504.0 * weighted_q_sum(sigma_tables().s5, q, order);
}

std::complex<double> delta_product(std::complex<double> q, int order) {
  // q * prod_{n<=N} (1-q^n)^24; the dropped factors give a relative error
  // bounded by 24*|q|^{N+1}/(1-|q|) (for |q| < 1/2, comfortably small).
  std::complex<double> prod = 1.0;
  std::complex<double> qp = 1.0;
  for (int n = 1; n <= order; ++n) {
    qp *= q;
    std::complex<double> factor = 1.0 - qp;
    std::complex<double> f2 = factor * factor;
    std::complex<double> f4 = f2 * f2;
    std::complex<double> f8 = f4 * f4;
    prod *= f8 * f8 * f8;  // factor^24
  }
  return q * prod;
}

std::complex<double> j_of_q(std::complex<double> q, int order) {
  std::complex<double> num = e4(q, order);
  return num * num * num / delta_product(q, order);
}

std::complex<double> dj_dq(std::complex<double> q, int order) {
  // dj/dq = -E4^2 * E6 / (Delta * q).
  std::complex<double> a4 = e4(q, order);
  std::complex<double> a6 = e6(q, order);
  return -a4 * a4 * a6 / (delta_product(q, order) * q);
}

}  // namespace qdomain

QSeriesEval eisenstein(EisensteinKind kind, const TauPoint& tau, int order) {
  std::complex<double> q = nome(tau);
  double q_abs = std::abs(q);
  int n = resolve_order(q_abs, order, 1e-14);
  QSeriesEval out;
  out.truncation_order = n;
  out.tail_bound = eisenstein_tail(kind, q_abs, n);
  switch (kind) {
    case EisensteinKind::E2:
      out.value = qdomain::e2(q, n);
      break;
    case EisensteinKind::E4:
      out.value = qdomain::e4(q, n);
      break;
    case EisensteinKind::E6:
      out.value = qdomain::e6(q, n);
      break;
    case EisensteinKind::E2Star:
      out.value = qdomain::e2(q, n) - 3.0 / (kPi * tau.im());
      break;
  }
  return out;
}

QSeriesEval delta_eval(const TauPoint& tau, int order) {
  std::complex<double> q = nome(tau);
  double q_abs = std::abs(q);
  int n = resolve_order(q_abs, order, 1e-14);
  QSeriesEval out;
  out.truncation_order = n;
  out.value = qdomain::delta_product(q, n);
  double rel_tail = q_abs < 1.0 ? 24.0 * std::pow(q_abs, n + 1) / (1.0 - q_abs) : 1.0;
  // exp(x)-1 <= 2x for the tiny relative tails we produce.
  out.tail_bound = 2.0 * rel_tail * std::abs(out.value);
  return out;
}

}  // namespace faltmin
