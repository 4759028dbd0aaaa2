#include "nskernel/special.hpp"

#include <cmath>
#include <limits>

#include "nskernel/errors.hpp"

namespace nskernel {

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (std::isinf(x)) return x;
  return std::lgamma(x);
}

double log_factorial(int k) {
  if (k < 0) throw DomainError("factorial of negative integer");
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_factorial(const MultiIndex& alpha) {
  double s = 0.0;
  for (int e : alpha.entries()) s += log_factorial(e);
  return s;
}

double falling_factorial(int k, int j) {
  if (j > k) return 0.0;
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= static_cast<double>(k - i);
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

double compensated_sum(const std::vector<double>& values) {
  CompensatedSum<double> s;
  for (double v : values) s.add(v);
  return s.value();
}

}  // namespace nskernel
