#pragma once

#include <stdexcept>
#include <string>

namespace faltmin {

// An iterative solver (root finder, Newton inversion, quadrature refinement,
// optimizer) failed to reach its residual or convergence target. The message
// carries the best residual achieved so the failure is auditable.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial failed the squarefree requirement (it shares a nontrivial
// factor with its derivative, i.e. has repeated complex roots).
class RepeatedRoots : public std::domain_error {
 public:
  explicit RepeatedRoots(const std::string& what) : std::domain_error(what) {}
};

// A section family's exponent budget is violated: the weight left for the
// cusp form factor must stay positive (1/12 - sum of exponent*degree > 0).
class BudgetViolation : public std::domain_error {
 public:
  explicit BudgetViolation(const std::string& what) : std::domain_error(what) {}
};

// A numerical certificate (inequality spot-check) found a violation beyond
// tolerance. Never thrown silently: the report carries the worst sample.
class CertificateFailure : public std::runtime_error {
 public:
  explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace faltmin
