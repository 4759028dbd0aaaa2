#pragma once

#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include "nskernel/multiindex.hpp"

namespace nskernel {

double log_gamma(double x);
double log_factorial(int k);
// log of prod_i alpha_i!
double log_factorial(const MultiIndex& alpha);
// Falling factorial k (k-1) ... (k-j+1), zero when j > k.
double falling_factorial(int k, int j);
double binomial(int n, int k);

// Neumaier compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    if constexpr (std::is_same_v<T, double>) {
      add_real(sum_, comp_, x);
    } else {
      double sr = sum_.real(), cr = comp_.real();
      double si = sum_.imag(), ci = comp_.imag();
      add_real(sr, cr, x.real());
      add_real(si, ci, x.imag());
      sum_ = T(sr, si);
      comp_ = T(cr, ci);
    }
  }
  T value() const { return sum_ + comp_; }

 private:
  static void add_real(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  T sum_{};
  T comp_{};
};

double compensated_sum(const std::vector<double>& values);

}  // namespace nskernel
