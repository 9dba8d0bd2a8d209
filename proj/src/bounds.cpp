#include "faltmin/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "faltmin/constants.hpp"
#include "faltmin/disk.hpp"
#include "faltmin/distortion.hpp"
#include "faltmin/errors.hpp"
#include "faltmin/modular.hpp"
#include "faltmin/parallel.hpp"
#include "faltmin/roots.hpp"
#include "faltmin/tau.hpp"

namespace faltmin {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// log|P_k(zeta)| through the cached roots: log|lead| + sum log|zeta - r_i|.
// Evaluating through the roots keeps the value finite-and-correct even when
// |P| itself would overflow, and makes the pole set explicit (-inf at roots).
double log_abs_member(const SectionFamily& fam, std::size_t k, cplx zeta) {
  double acc = fam.member_log_lead()[k];
  for (cplx r : fam.member_roots()[k]) {
    double d = std::abs(zeta - r);
    if (d == 0.0) return -kInf;
    acc += std::log(d);
  }
  return acc;
}

// G(zeta) given a precomputed g_hyp(zeta): the grid caches the expensive
// hyperbolic part so exponent changes only re-run the polynomial part.
double green_from_ghyp(const SectionFamily& fam, cplx zeta, double ghyp_value) {
  double g = ghyp_value / 12.0;
  const auto& members = fam.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    double a = members[k].exponent;
    if (a == 0.0) continue;
    double lp = log_abs_member(fam, k, zeta);
    if (lp == -kInf) return kInf;
    g -= a * lp;
  }
  return g;
}

struct EvalNode {
  cplx zeta;
  double ghyp;
};

struct SearchGrid {
  double resolution = 0.0;  // max tau-spacing of the rectangular part
  double im_top = 3.0;
  std::vector<EvalNode> nodes;
};

// Rectangular grid over the strip Re in [-1/2, 1/2], Im in [sqrt(3)/2, top]
// (points under the unit arc skipped: their classes are covered elsewhere),
// plus a polar patch of direct zeta samples around the origin, where the
// j-image of the tau-grid is sparse.
SearchGrid build_search_grid(int grid_n, double im_top, int workers) {
  if (grid_n < 8) throw std::domain_error("grid resolution must be at least 8");
  SearchGrid grid;
  grid.im_top = im_top;
  double y0 = sqrt3() / 2.0;
  double dx = 1.0 / (grid_n - 1);
  double dy = (im_top - y0) / (grid_n - 1);
  grid.resolution = std::max(dx, dy);

  std::vector<TauPoint> taus;
  taus.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  for (int iy = 0; iy < grid_n; ++iy) {
    double y = y0 + iy * dy;
    for (int ix = 0; ix < grid_n; ++ix) {
      double x = -0.5 + ix * dx;
      if (x * x + y * y < 1.0 - 1e-12) continue;
      taus.emplace_back(x, y);
    }
  }

  constexpr int kPatchRadii = 28;
  constexpr int kPatchAngles = 96;
  std::vector<cplx> patch;
  patch.reserve(kPatchRadii * kPatchAngles);
  for (int j = 0; j < kPatchRadii; ++j) {
    double r = 1e-6 * std::pow(2e6, j / double(kPatchRadii - 1));
    for (int m = 0; m < kPatchAngles; ++m) {
      patch.push_back(std::polar(r, kTwoPi * (m + 0.5) / kPatchAngles));
    }
  }

  grid.nodes.resize(taus.size() + patch.size());
  EvalNode* out = grid.nodes.data();
  parallel_for(taus.size(), workers, [&](std::size_t i) {
    out[i] = EvalNode{j_invariant(taus[i]), g_infinity(taus[i])};
  });
  parallel_for(patch.size(), workers, [&](std::size_t i) {
    out[taus.size() + i] = EvalNode{patch[i], g_hyp(patch[i])};
  });
  return grid;
}

struct SimplexResult {
  cplx point;
  double value;
  int iterations;
};

// Nelder-Mead in the zeta-plane. Tolerates +inf values (poles of G): an
// infinite vertex is simply the worst and gets reflected away.
template <class F>
SimplexResult nelder_mead_2d(F&& f, cplx seed, double scale, int budget) {
  std::array<cplx, 3> p{seed, seed + cplx(scale, 0.0), seed + cplx(0.0, scale)};
  std::array<double, 3> v{f(p[0]), f(p[1]), f(p[2])};
  auto order = [&] {
    if (v[0] > v[1]) { std::swap(v[0], v[1]); std::swap(p[0], p[1]); }
    if (v[1] > v[2]) { std::swap(v[1], v[2]); std::swap(p[1], p[2]); }
    if (v[0] > v[1]) { std::swap(v[0], v[1]); std::swap(p[0], p[1]); }
  };
  int it = 0;
  for (; it < budget; ++it) {
    order();
    double spread = v[2] - v[0];
    double diam = std::abs(p[1] - p[0]) + std::abs(p[2] - p[0]);
    if (spread <= 1e-13 * (1.0 + std::abs(v[0])) &&
        diam <= 1e-9 * (1.0 + std::abs(p[0]))) {
      break;
    }
    cplx c = 0.5 * (p[0] + p[1]);
    cplx xr = c + (c - p[2]);
    double fr = f(xr);
    if (fr < v[0]) {
      cplx xe = c + 2.0 * (c - p[2]);
      double fe = f(xe);
      if (fe < fr) { p[2] = xe; v[2] = fe; } else { p[2] = xr; v[2] = fr; }
    } else if (fr < v[1]) {
      p[2] = xr;
      v[2] = fr;
    } else {
      bool outside = fr < v[2];
      cplx xc = c + 0.5 * ((outside ? xr : p[2]) - c);
      double fc = f(xc);
      if (fc < std::min(fr, v[2])) {
        p[2] = xc;
        v[2] = fc;
      } else {
        p[1] = p[0] + 0.5 * (p[1] - p[0]);
        v[1] = f(p[1]);
        p[2] = p[0] + 0.5 * (p[2] - p[0]);
        v[2] = f(p[2]);
      }
    }
  }
  order();
  return SimplexResult{p[0], v[0], it};
}

// Grid sweep + simplex refinement, no cusp certification (the caller adds
// it). Deterministic for any worker count: node values land in fixed slots
// and all selection runs serially with lexicographic tie-breaks.
LowerBoundReport infimum_on(const SectionFamily& fam, const SearchGrid& grid,
                            int seeds, int simplex_budget, int workers) {
  const auto& nodes = grid.nodes;
  std::vector<double> values(nodes.size());
  parallel_for(nodes.size(), workers, [&](std::size_t i) {
    values[i] = green_from_ghyp(fam, nodes[i].zeta, nodes[i].ghyp);
  });

  auto better = [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] < values[b];
    if (nodes[a].zeta.real() != nodes[b].zeta.real())
      return nodes[a].zeta.real() < nodes[b].zeta.real();
    return nodes[a].zeta.imag() < nodes[b].zeta.imag();
  };
  std::vector<std::size_t> idx(nodes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::size_t want = std::min<std::size_t>(idx.size(), 3 * std::size_t(seeds) + 1);
  std::partial_sort(idx.begin(), idx.begin() + want, idx.end(), better);

  double node_best = values[idx[0]];
  cplx node_arg = nodes[idx[0]].zeta;

  // Greedy basin dedup: keep the best node of each spatial cluster.
  std::vector<cplx> starts;
  for (std::size_t i = 0; i < want && int(starts.size()) < seeds; ++i) {
    cplx z = nodes[idx[i]].zeta;
    if (!std::isfinite(values[idx[i]])) continue;
    bool close = false;
    for (cplx s : starts) {
      if (std::abs(z - s) <= 0.05 * (1.0 + std::abs(s))) { close = true; break; }
    }
    if (!close) starts.push_back(z);
  }

  auto f = [&](cplx z) { return green_from_ghyp(fam, z, g_hyp(z)); };
  double best = node_best;
  cplx best_arg = node_arg;
  int iterations = 0;
  std::vector<SimplexResult> refined;
  for (cplx s : starts) {
    double scale = std::max(1e-4, 0.02 * (1.0 + std::abs(s)));
    SimplexResult r = nelder_mead_2d(f, s, scale, simplex_budget);
    iterations += r.iterations;
    refined.push_back(r);
    if (r.value < best) {
      best = r.value;
      best_arg = r.point;
    }
  }
  std::sort(refined.begin(), refined.end(), [](const SimplexResult& a, const SimplexResult& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });

  // Re-evaluate the champion through the public entry point so that
  // section_green(argmin[0]) reproduces the reported infimum exactly.
  double champion = f(best_arg);
  std::vector<cplx> argmin{best_arg};
  for (const SimplexResult& r : refined) {
    if (!std::isfinite(r.value)) continue;
    bool dup = false;
    for (cplx z : argmin) {
      if (std::abs(r.point - z) <= 1e-6 * (1.0 + std::abs(z))) { dup = true; break; }
    }
    if (!dup) argmin.push_back(r.point);
    if (argmin.size() >= 8) break;
  }

  return LowerBoundReport{fam, champion, std::move(argmin), grid.resolution, iterations};
}

// Analytic floor for G on the strip above Im = t:
//   B(t) = 2*pi*delta*t - (1/2)*log t - Cc,
// from g_inf >= 2*pi*t - 6*log t - 6*log(4*pi) - eps_c and
// |P_k(j)| <= (sum |c_i|) * (4 e^{2*pi*t})^{deg_k} for t >= 1 (the tail of
// the j-expansion contributes |j| <= e^{2*pi*t} + 1.2e3 <= 4 e^{2*pi*t}).
struct CuspBound {
  double delta;
  double offset;  // Cc
  double at(double t) const { return kTwoPi * delta * t - 0.5 * std::log(t) - offset; }
  // Stationary point of B; B is convex, increasing beyond it.
  double stationary() const { return 1.0 / (2.0 * kTwoPi * delta); }
  double floor_above(double t0) const { return at(std::max(t0, stationary())); }
};

CuspBound cusp_bound(const SectionFamily& fam) {
  double eps_c = 24.0 / (std::exp(kTwoPi) - 2.0);
  double cc = 0.5 * std::log(4.0 * kPi) + eps_c / 12.0;
  const auto& members = fam.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    cc += members[k].exponent *
          (members[k].poly.degree() * std::log(4.0) + fam.member_log_coeff_sum()[k]);
  }
  return CuspBound{fam.delta_exponent(), cc};
}

// Smallest t beyond both t0 and the stationary point with B(t) >= target,
// via the linear-dominant fixed point t = (target + Cc + log(t)/2)/(2 pi d).
double cusp_extension_target(const CuspBound& b, double t0, double target) {
  double t = std::max({2.0 * t0, 1.05 * b.stationary(), 4.0});
  for (int i = 0; i < 6; ++i) {
    double next = (target + b.offset + 0.5 * std::log(t)) / (kTwoPi * b.delta);
    t = std::max(next, 1.05 * b.stationary());
  }
  return std::max(t, t0 + 1.0);
}

template <class F>
double golden_section_max(F&& f, double lo, double hi, int iterations,
                          double* arg_out) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    }
  }
  if (f1 > f2) {
    if (arg_out) *arg_out = x1;
    return f1;
  }
  if (arg_out) *arg_out = x2;
  return f2;
}

struct Quadrature {
  double value = 0.0;
  int nodes = 0;
  double delta = 0.0;
};

// Periodic trapezoid rule for f with the circle symmetry f(1-t) = f(t):
// only t in [0, 1/2] is evaluated, and doubling reuses every old node.
// I(N) = (1/N) * (f(0) + f(1/2) + 2 * sum_{k=1}^{N/2-1} f(k/N)).
template <class F>
Quadrature double_trapezoid(F&& f, int min_nodes, int max_nodes, double tol,
                            int workers) {
  int n = 16;
  while (n < min_nodes) n <<= 1;
  int cap = std::max(n, max_nodes);

  std::vector<double> vals(n / 2 + 1);
  parallel_for(vals.size(), workers,
               [&](std::size_t k) { vals[k] = f(k / double(n)); });
  auto integral = [&](int N) {
    NeumaierSum s;
    s.add(vals[0]);
    s.add(vals[N / 2]);
    for (int k = 1; k < N / 2; ++k) s.add(2.0 * vals[k]);
    return s.value() / N;
  };

  Quadrature q;
  q.value = integral(n);
  q.nodes = n;
  while (n < cap) {
    int n2 = 2 * n;
    std::vector<double> next(n2 / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) next[2 * k] = vals[k];
    parallel_for(std::size_t(n2 / 4), workers, [&](std::size_t i) {
      int j = 2 * int(i) + 1;
      next[j] = f(j / double(n2));
    });
    vals = std::move(next);
    n = n2;
    double refined = integral(n);
    q.delta = std::abs(refined - q.value);
    q.value = refined;
    q.nodes = n;
    if (q.delta <= tol) break;
  }
  return q;
}

}  // namespace

SectionFamily::SectionFamily(std::vector<SectionMember> members)
    : members_(std::move(members)) {
  double weight = 0.0;
  for (const SectionMember& m : members_) {
    if (!(m.exponent >= 0.0)) {
      throw std::domain_error("section exponents must be >= 0");
    }
    weight += m.exponent * m.poly.degree();
  }
  delta_exponent_ = 1.0 / 12.0 - weight;
  if (delta_exponent_ < 0.0) {
    throw BudgetViolation("section weight exceeds the 1/12 budget");
  }
  member_roots_.reserve(members_.size());
  member_log_lead_.reserve(members_.size());
  member_log_coeff_sum_.reserve(members_.size());
  for (const SectionMember& m : members_) {
    member_roots_.push_back(find_roots(m.poly).roots);
    member_log_lead_.push_back(std::log(std::abs(double(m.poly.leading()))));
    double coeff_sum = 0.0;
    for (long long c : m.poly.coefficients()) coeff_sum += std::abs(double(c));
    member_log_coeff_sum_.push_back(std::log(coeff_sum));
  }
}

double section_green(const SectionFamily& family, std::complex<double> zeta) {
  return green_from_ghyp(family, zeta, g_hyp(zeta));
}

LowerBoundReport global_infimum(const SectionFamily& family, int grid_n,
                                int workers) {
  if (family.delta_exponent() <= 0.0) {
    throw BudgetViolation("global infimum requires delta_exponent > 0");
  }
  CuspBound cusp = cusp_bound(family);
  double im_top = 3.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    SearchGrid grid = build_search_grid(grid_n, im_top, workers);
    LowerBoundReport report = infimum_on(family, grid, 24, 300, workers);
    if (cusp.floor_above(im_top) >= report.infimum + 0.01) return report;
    im_top = cusp_extension_target(cusp, im_top, report.infimum + 0.01);
    if (im_top > 64.0) break;
  }
  throw CertificateFailure(
      "cusp cutoff could not certify that the search region contains the minimum");
}

LowerBoundReport optimize_exponents(const std::vector<IntegerPolynomial>& polys,
                                    std::vector<double> init, int grid_n,
                                    int workers) {
  if (polys.empty()) throw std::domain_error("need at least one section member");
  if (polys.size() != init.size()) {
    throw std::domain_error("one initial exponent per polynomial required");
  }
  const std::size_t n = polys.size();
  std::vector<double> degs(n);
  for (std::size_t i = 0; i < n; ++i) degs[i] = polys[i].degree();

  constexpr double kBoxTop = 1e-3;
  constexpr double kBudgetSlack = 1e-4;
  auto project = [&](std::vector<double>& a) {
    double weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = std::clamp(a[i], 0.0, kBoxTop);
      weight += a[i] * degs[i];
    }
    double limit = 1.0 / 12.0 - kBudgetSlack;
    if (weight > limit && weight > 0.0) {
      double shrink = limit / weight;
      for (double& x : a) x *= shrink;
    }
  };
  auto make_family = [&](const std::vector<double>& a) {
    std::vector<SectionMember> ms;
    ms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ms.push_back(SectionMember{polys[i], a[i]});
    return SectionFamily(std::move(ms));
  };

  int coarse_n = std::clamp(grid_n, 60, 120);
  SearchGrid coarse = build_search_grid(coarse_n, 3.0, workers);
  auto objective = [&](const std::vector<double>& a) {
    return infimum_on(make_family(a), coarse, 6, 80, workers).infimum;
  };

  std::vector<double> a = std::move(init);
  project(a);
  double best = objective(a);
  for (int cycle = 0; cycle < 6; ++cycle) {
    double before = best;
    for (std::size_t k = 0; k < n; ++k) {
      double others = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) others += a[j] * degs[j];
      }
      double cap = std::min(kBoxTop, (1.0 / 12.0 - kBudgetSlack - others) / degs[k]);
      if (cap <= 0.0) continue;
      double arg = a[k];
      double value = golden_section_max(
          [&](double x) {
            std::vector<double> trial = a;
            trial[k] = x;
            return objective(trial);
          },
          0.0, cap, 20, &arg);
      if (value > best) {
        best = value;
        a[k] = arg;
      }
    }
    if (best - before < 1e-10) break;
  }

  if (n >= 2) {
    // Simplex polish over the exponent vector (maximize => negate), with
    // box+budget projection applied to every trial point.
    std::vector<std::vector<double>> pts(n + 1, a);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += 2e-5;
    for (auto& p : pts) project(p);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = -objective(pts[i]);
    for (int it = 0; it < 60; ++it) {
      std::vector<std::size_t> ord(n + 1);
      for (std::size_t i = 0; i <= n; ++i) ord[i] = i;
      std::sort(ord.begin(), ord.end(),
                [&](std::size_t x, std::size_t y) { return vals[x] < vals[y]; });
      if (vals[ord[n]] - vals[ord[0]] <= 1e-12) break;
      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[ord[i]][d] / double(n);
      }
      auto blend = [&](double coef) {
        std::vector<double> p(n);
        for (std::size_t d = 0; d < n; ++d) {
          p[d] = centroid[d] + coef * (centroid[d] - pts[ord[n]][d]);
        }
        project(p);
        return p;
      };
      std::vector<double> xr = blend(1.0);
      double fr = -objective(xr);
      if (fr < vals[ord[0]]) {
        std::vector<double> xe = blend(2.0);
        double fe = -objective(xe);
        if (fe < fr) { pts[ord[n]] = xe; vals[ord[n]] = fe; }
        else { pts[ord[n]] = xr; vals[ord[n]] = fr; }
      } else if (fr < vals[ord[n - 1]]) {
        pts[ord[n]] = xr;
        vals[ord[n]] = fr;
      } else {
        std::vector<double> xc = blend(-0.5);
        double fc = -objective(xc);
        if (fc < vals[ord[n]]) {
          pts[ord[n]] = xc;
          vals[ord[n]] = fc;
        } else {
          for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t d = 0; d < n; ++d) {
              pts[ord[i]][d] = pts[ord[0]][d] + 0.5 * (pts[ord[i]][d] - pts[ord[0]][d]);
            }
            project(pts[ord[i]]);
            vals[ord[i]] = -objective(pts[ord[i]]);
          }
        }
      }
    }
    std::size_t winner = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (vals[i] < vals[winner]) winner = i;
    }
    if (-vals[winner] > best) a = pts[winner];
  }

  return global_infimum(make_family(a), grid_n, workers);
}

UpperBoundReport circle_integral(double center, int min_nodes, int workers) {
  auto f = [center](double t) {
    return g_hyp(center + std::polar(1.0, kTwoPi * t)) / 12.0;
  };
  Quadrature q = double_trapezoid(f, min_nodes, 65536, 1e-10, workers);
  return UpperBoundReport{center, q.value, q.nodes, q.delta};
}

double circle_integral_hhat(double center) {
  if (!(center > 0.0 && center < 2.0)) {
    throw std::domain_error("hhat identity requires a center in (0, 2)");
  }
  InversionResult at_center = invert_j(center);
  double s_a = std::abs(at_center.w.value());
  double log_h_sa = log_abs_h_hat(cplx(s_a, 0.0));

  auto wmod = [center](double t) {
    InversionResult r = invert_j(center + std::polar(1.0, kTwoPi * t));
    return std::abs(r.w.value());
  };
  auto check_branch = [](const std::vector<double>& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (std::abs(v[k + 1] - v[k]) > 0.1) {
        throw CertificateFailure(
            "disk coordinate modulus jumped between adjacent quadrature nodes");
      }
    }
  };
  auto integral = [](const std::vector<double>& v, int N) {
    NeumaierSum s;
    s.add(std::log1p(-v[0] * v[0]));
    s.add(std::log1p(-v[N / 2] * v[N / 2]));
    for (int k = 1; k < N / 2; ++k) s.add(2.0 * std::log1p(-v[k] * v[k]));
    return s.value() / N;
  };

  int n = 4096;
  std::vector<double> vals(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) vals[k] = wmod(k / double(n));
  check_branch(vals);
  double iw = integral(vals, n);
  while (n < 65536) {
    int n2 = 2 * n;
    std::vector<double> next(n2 / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) next[2 * k] = vals[k];
    for (int j = 1; j < n2 / 2; j += 2) next[j] = wmod(j / double(n2));
    vals = std::move(next);
    n = n2;
    check_branch(vals);
    double refined = integral(vals, n);
    double delta = std::abs(refined - iw);
    iw = refined;
    if (delta <= 2e-12) break;
  }

  return (-std::log(1728.0 * std::pow(kPi, 6)) - log_h_sa - 6.0 * iw) / 12.0;
}

UpperBoundReport certified_upper_bound(double center) {
  if (!(center > 0.0 && center < 2.0) || center == 1.0) {
    throw std::domain_error(
        "certified majorant requires a center in (0, 2) away from 1");
  }
  RadiusBracket rb = radius_bracket(center);
  double lead = j_disk_leading_coefficient();
  auto f = [center](double t) {
    double alpha = std::abs(center + std::polar(1.0, kTwoPi * t));
    double rp = radius_bracket(alpha).r_plus;
    return std::log1p(-rp * rp);
  };
  Quadrature q = double_trapezoid(f, 4096, 65536, 2e-13, 1);
  double majorant = g_disk(cplx(0.0, 0.0)) -
                    (lead / 13824.0) * std::pow(rb.r_minus, 3) +
                    216.0 * std::pow(rb.r_plus, 6) - 6.0 * q.value;
  return UpperBoundReport{center, majorant / 12.0, q.nodes, 0.5 * q.delta};
}

UpperBoundReport optimize_center(double lo, double hi, int workers) {
  if (!(lo < hi)) throw std::domain_error("need lo < hi");
  auto coarse_value = [&](double a) {
    auto f = [a](double t) {
      return g_hyp(a + std::polar(1.0, kTwoPi * t)) / 12.0;
    };
    return double_trapezoid(f, 2048, 2048, 0.0, workers).value;
  };
  double best_center = 0.5 * (lo + hi);
  golden_section_max([&](double a) { return -coarse_value(a); }, lo, hi, 36,
                     &best_center);
  return circle_integral(best_center, 4096, workers);
}

double zhang_bound() { return 6.0 * (-1.0 / 24.0 + kZetaPrimeMinusOne); }

}  // namespace faltmin
