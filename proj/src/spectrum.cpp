#include "faltmin/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "faltmin/errors.hpp"
#include "faltmin/parallel.hpp"
#include "faltmin/roots.hpp"

namespace faltmin {

namespace {

bool height_order(const SpectrumEntry& a, const SpectrumEntry& b) {
  if (a.height.total != b.height.total) return a.height.total < b.height.total;
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  return a.poly.coefficients() < b.poly.coefficients();
}

// A primitive squarefree polynomial is reducible over the integers exactly
// when some proper subset of its roots, scaled by a divisor of the leading
// coefficient, expands to an integer polynomial.  Degree <= 12 keeps the
// subset enumeration trivial; candidate factors are rounded from the
// numerical roots and certified by exact integer division, so a "reducible"
// verdict is never wrong, and the root finder's residual contract keeps the
// rounding far below the half-integer threshold.
bool is_irreducible(const IntegerPolynomial& poly,
                    const std::vector<std::complex<double>>& roots) {
  int d = poly.degree();
  if (d <= 1) return true;
  long long lead = std::abs(poly.coefficients().back());
  for (unsigned mask = 1; mask < (1u << roots.size()); ++mask) {
    int k = std::popcount(mask);
    if (k < 1 || k > d / 2) continue;
    for (long long ell = 1; ell <= lead; ++ell) {
      if (lead % ell != 0) continue;
      std::vector<std::complex<double>> f{
          std::complex<double>(static_cast<double>(ell), 0.0)};
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!((mask >> i) & 1u)) continue;
        std::size_t m = f.size();
        f.push_back(std::complex<double>(0.0, 0.0));
        for (std::size_t j = m; j >= 1; --j) f[j] = f[j - 1] - roots[i] * f[j];
        f[0] = -roots[i] * f[0];
      }
      std::vector<long long> candidate(f.size());
      bool integral = true;
      for (std::size_t j = 0; j < f.size() && integral; ++j) {
        double re = f[j].real();
        long long rounded = std::llround(re);
        integral = std::abs(f[j].imag()) <= 1e-6 && std::abs(re - rounded) <= 1e-6;
        candidate[j] = rounded;
      }
      if (!integral || candidate.front() == 0 || candidate.back() == 0) continue;
      if (exact_divide(poly.coefficients(), candidate)) return false;
    }
  }
  return true;
}

// The scan enumerates, per degree d, tuples (c0, c1, ..., cd) with
//   c0  in {-cc..-1, 1..cc}   (cc from the constant-coefficient cap),
//   ci  in [-M, M]            for 0 < i < d,
//   cd  in [1, lc]            (lc from the leading-coefficient cap),
// in lexicographic order, c0 most significant.  alpha = 0 escapes both
// caps (its minimal polynomial z is the one valid zero-constant candidate;
// any other vanishing constant term makes the multiset contain 0 and the
// polynomial divisible by z), so z is emitted separately as index 0.
struct DegreePlan {
  int degree = 0;
  long long const_cap = 0;  // cc
  long long lead_cap = 0;   // lc
  long long middle_count = 1;  // (2M+1)^(d-1)
  long long total = 0;      // candidates in this degree
};

std::vector<DegreePlan> plan_degrees(int max_degree, int max_coeff,
                                     double threshold) {
  IntegralityCaps caps = integrality_constraints(threshold);
  auto cap_from = [max_coeff](double per_degree_log, int d) {
    double bound = std::exp(d * per_degree_log);
    if (bound >= double(max_coeff)) return (long long)(max_coeff);
    if (bound < 1.0) return 0ll;
    return (long long)(std::floor(bound + 1e-12));
  };
  std::vector<DegreePlan> plans;
  for (int d = 1; d <= max_degree; ++d) {
    DegreePlan p;
    p.degree = d;
    p.const_cap = cap_from(caps.max_log_const_per_degree, d);
    p.lead_cap = cap_from(caps.max_log_lead_per_degree, d);
    for (int i = 1; i < d; ++i) p.middle_count *= 2ll * max_coeff + 1;
    p.total = 2ll * p.const_cap * p.middle_count * p.lead_cap;
    plans.push_back(p);
  }
  return plans;
}

std::vector<long long> decode_candidate(const DegreePlan& p, long long k,
                                        int max_coeff) {
  std::vector<long long> coeffs(p.degree + 1);
  long long rest = p.middle_count * p.lead_cap;
  long long c0_digit = k / rest;
  coeffs[0] = c0_digit < p.const_cap ? c0_digit - p.const_cap
                                     : c0_digit - p.const_cap + 1;
  k %= rest;
  for (int i = 1; i < p.degree; ++i) {
    rest /= 2ll * max_coeff + 1;
    coeffs[i] = k / rest - max_coeff;
    k %= rest;
  }
  coeffs[p.degree] = k + 1;
  return coeffs;
}

std::optional<SpectrumEntry> evaluate_candidate(std::vector<long long> coeffs,
                                                double threshold) {
  long long g = 0;
  for (long long c : coeffs) g = std::gcd(g, std::abs(c));
  if (g != 1) return std::nullopt;
  try {
    IntegerPolynomial poly(std::move(coeffs));
    HeightResult h = faltings_height(poly);
    if (h.total > threshold) return std::nullopt;
    // Only minimal polynomials name algebraic numbers; a reducible survivor
    // would report the weighted mean of its factors' heights, not a height.
    if (!is_irreducible(poly, find_roots(poly).roots)) return std::nullopt;
    std::string label = poly.pretty();
    return SpectrumEntry{std::move(poly), h, std::move(label)};
  } catch (const RepeatedRoots&) {
    return std::nullopt;
  }
}

struct Checkpoint {
  long long next_index = 0;
  std::vector<std::vector<long long>> accepted;
};

std::string scan_signature(int max_degree, int max_coeff, double threshold) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d %d %a", max_degree, max_coeff, threshold);
  return buf;
}

std::optional<Checkpoint> load_checkpoint(const std::string& path,
                                          const std::string& signature) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != "faltmin-scan-checkpoint 1")
    return std::nullopt;
  std::string stored;
  if (!std::getline(in, stored) || stored != signature) return std::nullopt;
  Checkpoint cp;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  {
    std::istringstream s(line);
    std::string tag;
    if (!(s >> tag >> cp.next_index) || tag != "next") return std::nullopt;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream s(line);
    std::string tag;
    if (!(s >> tag) || tag != "entry") return std::nullopt;
    std::vector<long long> coeffs;
    long long c;
    while (s >> c) coeffs.push_back(c);
    if (coeffs.size() < 2) return std::nullopt;
    cp.accepted.push_back(std::move(coeffs));
  }
  return cp;
}

void save_checkpoint(const std::string& path, const std::string& signature,
                     long long next_index,
                     const std::vector<SpectrumEntry>& entries) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "faltmin-scan-checkpoint 1\n" << signature << "\n";
    out << "next " << next_index << "\n";
    for (const SpectrumEntry& e : entries) {
      out << "entry";
      for (long long c : e.poly.coefficients()) out << ' ' << c;
      out << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<SpectrumEntry> scan_cyclotomics(int max_order) {
  if (max_order < 1) throw std::domain_error("max_order must be >= 1");
  std::vector<SpectrumEntry> entries;
  entries.reserve(max_order);
  for (int n = 1; n <= max_order; ++n) {
    IntegerPolynomial poly = cyclotomic(n);
    HeightResult h = faltings_height(poly);
    auto [low, high] = root_of_unity_bracket(n);
    double slack = h.error_estimate + 1e-9;
    if (h.total < low - slack || h.total > high + slack) {
      throw CertificateFailure("cyclotomic height escaped its closed-form bracket");
    }
    entries.push_back(SpectrumEntry{std::move(poly), h, "cyclotomic:" + std::to_string(n)});
  }
  std::sort(entries.begin(), entries.end(), height_order);
  return entries;
}

std::vector<SpectrumEntry> scan_polynomials(int max_degree, int max_coeff,
                                            double threshold,
                                            const ScanOptions& options) {
  if (max_degree < 1 || max_degree > 12) {
    throw std::domain_error("scan degree budget must lie in [1, 12]");
  }
  if (max_coeff < 1 || max_coeff > 3) {
    throw std::domain_error("scan coefficient budget must lie in [1, 3]");
  }

  std::vector<DegreePlan> plans = plan_degrees(max_degree, max_coeff, threshold);
  long long total = 1;  // index 0 is the zero-constant representative z
  for (const DegreePlan& p : plans) total += p.total;

  std::string signature = scan_signature(max_degree, max_coeff, threshold);
  long long start = 0;
  std::vector<SpectrumEntry> accepted;
  if (!options.checkpoint_path.empty()) {
    if (auto cp = load_checkpoint(options.checkpoint_path, signature)) {
      start = std::min(cp->next_index, total);
      for (auto& coeffs : cp->accepted) {
        IntegerPolynomial poly(std::move(coeffs));
        HeightResult h = faltings_height(poly);
        std::string label = poly.pretty();
        accepted.push_back(SpectrumEntry{std::move(poly), h, std::move(label)});
      }
    }
  }

  auto candidate_coeffs = [&](long long index) -> std::vector<long long> {
    if (index == 0) return {0, 1};
    long long k = index - 1;
    for (const DegreePlan& p : plans) {
      if (k < p.total) return decode_candidate(p, k, max_coeff);
      k -= p.total;
    }
    throw std::logic_error("candidate index out of range");
  };

  long long chunk = std::max<long long>(1, options.checkpoint_every);
  for (long long base = start; base < total; base += chunk) {
    long long count = std::min(chunk, total - base);
    std::vector<std::optional<SpectrumEntry>> results(count);
    parallel_for(std::size_t(count), options.workers, [&](std::size_t i) {
      results[i] = evaluate_candidate(candidate_coeffs(base + i), threshold);
    });
    for (long long i = 0; i < count; ++i) {
      if (!results[i]) continue;
      accepted.push_back(std::move(*results[i]));
    }
    if (!options.checkpoint_path.empty()) {
      save_checkpoint(options.checkpoint_path, signature, base + count, accepted);
    }
  }

  std::sort(accepted.begin(), accepted.end(), height_order);
  return accepted;
}

SpectrumReport spectrum_report(const std::vector<SpectrumEntry>& entries,
                               double lower_bound, double upper_bound) {
  // Composite removal: an entry whose polynomial is exactly divisible by a
  // lower-degree entry's polynomial repeats known roots and is not a new
  // point of the height spectrum.
  std::vector<const SpectrumEntry*> by_degree;
  by_degree.reserve(entries.size());
  for (const SpectrumEntry& e : entries) by_degree.push_back(&e);
  std::sort(by_degree.begin(), by_degree.end(),
            [](const SpectrumEntry* a, const SpectrumEntry* b) {
              if (a->poly.degree() != b->poly.degree())
                return a->poly.degree() < b->poly.degree();
              return a->poly.coefficients() < b->poly.coefficients();
            });
  std::vector<const SpectrumEntry*> primitive;
  for (const SpectrumEntry* e : by_degree) {
    bool composite = false;
    for (const SpectrumEntry* k : primitive) {
      if (k->poly.degree() >= e->poly.degree()) break;
      if (exact_divide(e->poly.coefficients(), k->poly.coefficients())) {
        composite = true;
        break;
      }
    }
    if (!composite) primitive.push_back(e);
  }

  SpectrumReport report;
  report.lower_bound = lower_bound;
  report.upper_bound = upper_bound;
  report.density_interval_start = upper_bound;
  double isolation_cut = std::min(lower_bound, upper_bound);
  for (const SpectrumEntry* e : primitive) {
    double h = e->height.total;
    if (h < isolation_cut) {
      report.isolated.push_back(*e);
    } else if (h <= upper_bound) {
      report.uncertain.push_back(*e);
    }
  }
  std::sort(report.isolated.begin(), report.isolated.end(), height_order);
  std::sort(report.uncertain.begin(), report.uncertain.end(), height_order);
  return report;
}

}  // namespace faltmin
