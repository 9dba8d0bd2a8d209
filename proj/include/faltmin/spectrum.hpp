#pragma once

// Enumeration of small-height algebraic numbers: the cyclotomic height
// table, exhaustive polynomial box scans with height-budget coefficient
// pruning, and the two-tier minima report.

#include <string>
#include <vector>

#include "faltmin/heights.hpp"
#include "faltmin/polynomial.hpp"

namespace faltmin {

struct SpectrumEntry {
  IntegerPolynomial poly;
  HeightResult height;
  std::string label;
};

// Heights of the primitive n-th roots of unity for n = 1..max_order, sorted
// ascending by height.  Every entry is cross-checked against its closed-form
// bracket (CertificateFailure on escape).
std::vector<SpectrumEntry> scan_cyclotomics(int max_order);

struct ScanOptions {
  int workers = 0;
  std::string checkpoint_path;       // empty: no checkpointing
  long long checkpoint_every = 100000;  // candidates per chunk
};

// Every irreducible primitive integer polynomial with degree <= max_degree,
// coefficients in [-max_coeff, max_coeff], positive leading coefficient and
// nonzero constant term whose height is <= threshold, plus the single
// zero-constant representative z (the height of 0); sorted ascending by
// height.  Irreducibility means each entry is the minimal polynomial of an
// algebraic number, so entries are unique by construction.
//
// Scan order is increasing degree, then lexicographic coefficient tuples
// (constant term first).  Leading/constant coefficients are pre-pruned by
// the per-degree caps of integrality_constraints(threshold).  Progress is
// checkpointed to checkpoint_path every checkpoint_every candidates; a
// matching checkpoint resumes the scan, a stale one is overwritten.
// Degree/coefficient budgets above 12/3 are rejected (search-space guard).
std::vector<SpectrumEntry> scan_polynomials(int max_degree, int max_coeff,
                                            double threshold,
                                            const ScanOptions& options = {});

struct SpectrumReport {
  std::vector<SpectrumEntry> isolated;   // strictly below both bounds
  std::vector<SpectrumEntry> uncertain;  // between the bounds
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double density_interval_start = 0.0;  // heights are dense from here on
};

// Splits entries against two-sided essential-minimum bounds after dropping
// composites (entries whose polynomial is exactly divisible by a
// lower-degree entry's polynomial): "isolated" collects heights strictly
// below both bounds, "uncertain" the ones between them.  The density
// interval starts at the upper bound.
SpectrumReport spectrum_report(const std::vector<SpectrumEntry>& entries,
                               double lower_bound, double upper_bound);

}  // namespace faltmin
