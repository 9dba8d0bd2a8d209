#include "faltmin/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "faltmin/constants.hpp"
#include "faltmin/errors.hpp"

namespace faltmin {

namespace {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

// p and p' at z in extended precision, one Horner pass.
std::pair<cplx, cplx> eval_with_derivative(const std::vector<long long>& c, cplx z) {
  lcplx zl(z.real(), z.imag());
  lcplx p = 0.0L, dp = 0.0L;
  for (size_t i = c.size(); i-- > 0;) {
    dp = dp * zl + p;
    p = p * zl + static_cast<long double>(c[i]);
  }
  return {cplx(static_cast<double>(p.real()), static_cast<double>(p.imag())),
          cplx(static_cast<double>(dp.real()), static_cast<double>(dp.imag()))};
}

// Aberth–Ehrlich simultaneous iteration on a squarefree coefficient vector
// of degree >= 2 with nonzero constant term.
std::vector<cplx> aberth(const std::vector<long long>& c) {
  int d = static_cast<int>(c.size()) - 1;
  double radius = std::max(0.5, std::pow(std::abs(static_cast<double>(c[0]) / c[d]), 1.0 / d));
  std::vector<cplx> z(d);
  for (int k = 0; k < d; ++k) {
    // Perturbed angles so no starting point is real or conjugate-symmetric.
    double angle = 2.0 * kPi * k / d + 0.4 / d + 0.7;
    z[k] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (p == 0.0) continue;
      cplx w = dp == 0.0 ? cplx(0.0, 0.0) : p / dp;
      cplx repel = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) repel += 1.0 / (z[i] - z[j]);
      }
      cplx denom = 1.0 - w * repel;
      cplx step = denom == 0.0 ? w : w / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (worst <= 1e-14) break;
  }
  // Newton polish sharpens each root to full double accuracy.
  for (int i = 0; i < d; ++i) {
    for (int polish = 0; polish < 3; ++polish) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (dp == 0.0) break;
      z[i] -= p / dp;
    }
  }
  return z;
}

bool lex_less(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Snap near-real roots to the axis and rebuild non-real roots as exact
// conjugate pairs (integer coefficients force conjugation symmetry).
// Partners are matched by proximity: sort-order matching is unsafe because
// different pairs can agree in either coordinate up to rounding noise.
void enforce_conjugation(std::vector<cplx>& z) {
  std::vector<cplx> reals, upper, mirror;
  for (cplx r : z) {
    if (std::abs(r.imag()) <= 1e-12 * (1.0 + std::abs(r.real()))) {
      reals.emplace_back(r.real(), 0.0);
    } else if (r.imag() > 0.0) {
      upper.push_back(r);
    } else {
      mirror.push_back(std::conj(r));
    }
  }
  if (upper.size() != mirror.size()) return;  // leave as computed; contract check decides
  std::sort(upper.begin(), upper.end(), lex_less);
  std::vector<cplx> paired = reals;
  std::vector<char> used(mirror.size(), 0);
  for (cplx u : upper) {
    std::size_t best = mirror.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < mirror.size(); ++m) {
      if (used[m]) continue;
      double dist = std::abs(u - mirror[m]);
      if (dist < best_dist) {
        best_dist = dist;
        best = m;
      }
    }
    // A genuine partner agrees to near machine precision; otherwise leave
    // the computed roots alone and let the residual contract judge them.
    if (best_dist > 1e-9 * (1.0 + std::abs(u))) return;
    used[best] = 1;
    cplx avg = 0.5 * (u + mirror[best]);
    paired.push_back(avg);
    paired.push_back(std::conj(avg));
  }
  z = std::move(paired);
}

}  // namespace

AlgebraicNumberSpec find_roots(const IntegerPolynomial& poly) {
  std::vector<long long> c = poly.coefficients();
  std::vector<cplx> roots;

  if (c.front() == 0) {
    // Squarefree with p(0) = 0: factor the simple root at the origin.
    roots.emplace_back(0.0, 0.0);
    c.erase(c.begin());
  }
  int d = static_cast<int>(c.size()) - 1;
  if (d == 1) {
    roots.emplace_back(-static_cast<double>(c[0]) / static_cast<double>(c[1]), 0.0);
  } else if (d >= 2) {
    std::vector<cplx> z = aberth(c);
    enforce_conjugation(z);
    roots.insert(roots.end(), z.begin(), z.end());
  }

  std::sort(roots.begin(), roots.end(), lex_less);

  AlgebraicNumberSpec spec{poly, std::move(roots), 0.0, 0.0};
  for (cplx r : spec.roots) {
    double residual = std::abs(poly.evaluate(r));
    double allowed = 1e-11 * poly.evaluate_majorant(std::abs(r));
    spec.max_residual = std::max(spec.max_residual, residual);
    spec.residual_bound = std::max(spec.residual_bound, allowed);
    if (residual > allowed) {
      throw NonConvergence("find_roots: residual contract violated for " + poly.pretty());
    }
  }
  return spec;
}

}  // namespace faltmin
