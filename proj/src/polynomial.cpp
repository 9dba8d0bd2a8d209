#include "faltmin/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "faltmin/errors.hpp"

namespace faltmin {

namespace {

using bigint = boost::multiprecision::cpp_int;
using BigPoly = std::vector<bigint>;  // constant term first

int deg(const BigPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(BigPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_zero(const BigPoly& p) { return p.size() == 1 && p[0] == 0; }

BigPoly to_big(const std::vector<long long>& c) {
  BigPoly out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i];
  return out;
}

BigPoly primitive_part(BigPoly p) {
  trim(p);
  bigint g = 0;
  for (const bigint& c : p) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
  if (g > 1) {
    for (bigint& c : p) c /= g;
  }
  return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
BigPoly pseudo_remainder(BigPoly a, const BigPoly& b) {
  int db = deg(b);
  const bigint& lb = b.back();
  while (!is_zero(a) && deg(a) >= db) {
    int da = deg(a);
    bigint factor = a.back();
    for (bigint& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] -= factor * b[i];
    }
    trim(a);
    if (deg(a) == da && !is_zero(a)) {
      throw std::logic_error("pseudo_remainder: degree did not drop");
    }
  }
  return a;
}

BigPoly big_derivative(const BigPoly& p) {
  if (p.size() <= 1) return {bigint(0)};
  BigPoly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<int>(i);
  trim(out);
  return out;
}

// Degree of gcd(p, p') via the primitive polynomial remainder sequence.
int gcd_with_derivative_degree(const std::vector<long long>& coeffs) {
  BigPoly a = primitive_part(to_big(coeffs));
  BigPoly b = primitive_part(big_derivative(a));
  if (is_zero(b)) return deg(a);  // constant or degenerate
  while (!is_zero(b)) {
    BigPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return deg(a);
}

long long narrow_checked(const bigint& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::domain_error("polynomial coefficient exceeds 64-bit range");
  }
  return static_cast<long long>(v);
}

// Exact division over cpp_int; nullopt when not divisible.
std::optional<BigPoly> exact_divide_big(BigPoly num, const BigPoly& den) {
  trim(num);
  int dn = deg(num);
  int dd = deg(den);
  if (dd > dn) return std::nullopt;
  BigPoly quot(dn - dd + 1, bigint(0));
  const bigint& lead = den.back();
  for (int k = dn - dd; k >= 0; --k) {
    bigint top = num[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    bigint q = top / lead;
    quot[k] = q;
    for (int i = 0; i <= dd; ++i) num[k + i] -= q * den[i];
  }
  for (const bigint& c : num) {
    if (c != 0) return std::nullopt;
  }
  return quot;
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw std::domain_error("polynomial must have degree >= 1");
  }
  if (coeffs_.back() == 0) {
    throw std::domain_error("leading coefficient must be nonzero");
  }
  if (content_of(coeffs_) != 1) {
    throw std::domain_error("polynomial must be primitive (content 1)");
  }
  if (!is_squarefree(coeffs_)) {
    throw RepeatedRoots("polynomial has repeated complex roots");
  }
}

IntegerPolynomial IntegerPolynomial::parse(const std::string& text) {
  const std::string prefix = "cyclotomic:";
  if (text.rfind(prefix, 0) == 0) {
    long long n = 0;
    try {
      size_t used = 0;
      n = std::stoll(text.substr(prefix.size()), &used);
      if (used != text.size() - prefix.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::domain_error("invalid cyclotomic index in '" + text + "'");
    }
    return cyclotomic(n);
  }
  std::vector<long long> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      // allow surrounding spaces
      size_t begin = item.find_first_not_of(" \t");
      size_t end = item.find_last_not_of(" \t");
      if (begin == std::string::npos) throw std::invalid_argument("empty");
      std::string token = item.substr(begin, end - begin + 1);
      coeffs.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::domain_error("invalid coefficient '" + item + "' in polynomial spec");
    }
  }
  return IntegerPolynomial(std::move(coeffs));
}

std::complex<double> IntegerPolynomial::evaluate(std::complex<double> z) const {
  std::complex<long double> zl(z.real(), z.imag());
  std::complex<long double> acc = 0.0L;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * zl + static_cast<long double>(coeffs_[i]);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double IntegerPolynomial::evaluate_majorant(double abs_z) const {
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * abs_z + std::abs(static_cast<double>(coeffs_[i]));
  }
  return acc;
}

std::vector<long long> IntegerPolynomial::derivative_coefficients() const {
  std::vector<long long> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<long long>(i);
  }
  return out;
}

std::string IntegerPolynomial::coeff_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

std::string IntegerPolynomial::pretty() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    bool first = out.empty();
    std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    unsigned long long mag = c < 0 ? -static_cast<unsigned long long>(c) : c;
    std::string term;
    if (i == 0) {
      term = std::to_string(mag);
    } else {
      if (mag != 1) term = std::to_string(mag);
      term += "z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += sign + term;
  }
  return out.empty() ? "0" : out;
}

long long content_of(const std::vector<long long>& coeffs) {
  long long g = 0;
  for (long long c : coeffs) {
    g = std::gcd(g, c < 0 ? -c : c);
  }
  return g;
}

bool is_squarefree(const std::vector<long long>& coeffs) {
  return gcd_with_derivative_degree(coeffs) == 0;
}

int mobius(long long n) {
  if (n < 1) throw std::domain_error("mobius: n >= 1 required");
  int factors = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

long long euler_phi(long long n) {
  if (n < 1) throw std::domain_error("euler_phi: n >= 1 required");
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntegerPolynomial cyclotomic(long long n) {
  if (n < 1 || n > 1000000) {
    throw std::domain_error("cyclotomic: n must lie in [1, 10^6]");
  }
  static std::map<long long, std::vector<long long>> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);

  // Iterative fill over divisors so recursion depth stays trivial.
  std::function<std::vector<long long>(long long)> compute = [&](long long m) -> std::vector<long long> {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // z^m - 1
    BigPoly num(m + 1, bigint(0));
    num[0] = -1;
    num[m] = 1;
    for (long long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      BigPoly factor = to_big(compute(d));
      auto q = exact_divide_big(num, factor);
      if (!q) throw std::logic_error("cyclotomic: division failed");
      num = std::move(*q);
    }
    std::vector<long long> out(num.size());
    for (size_t i = 0; i < num.size(); ++i) out[i] = narrow_checked(num[i]);
    cache.emplace(m, out);
    return out;
  };
  return IntegerPolynomial(compute(n));
}

std::optional<std::vector<long long>> exact_divide(const std::vector<long long>& num,
                                                   const std::vector<long long>& den) {
  if (den.empty() || den.back() == 0) {
    throw std::domain_error("exact_divide: divisor must have nonzero leading coefficient");
  }
  auto q = exact_divide_big(to_big(num), to_big(den));
  if (!q) return std::nullopt;
  std::vector<long long> out(q->size());
  for (size_t i = 0; i < q->size(); ++i) out[i] = narrow_checked((*q)[i]);
  return out;
}

}  // namespace faltmin
