#include <cmath>

#include "nskernel/errors.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/special.hpp"

namespace nskernel {

double ball_constant(int n, int d) {
  return std::exp(log_gamma((d + 1.0) * (n + 1.0)) - log_factorial(n) - log_gamma(d * (n + 1.0) + 1.0));
}

double log_ball_moment(int n, int d, const MultiIndex& alpha) {
  if (n < 1 || d < 0) throw ContractViolation("ball_moment needs n >= 1 and d >= 0");
  if (alpha.size() != n) throw ContractViolation("multi-index length does not match dimension");
  double s = (d + 1.0) * n * std::log(kPi) - d * log_factorial(n) + log_gamma(d * (n + 1.0) + 1.0);
  for (int e : alpha.entries()) s += log_factorial(e);
  s -= log_gamma((d + 1.0) * (n + 1.0) + alpha.degree());
  return s;
}

double ball_moment(int n, int d, const MultiIndex& alpha) {
  return std::exp(log_ball_moment(n, d, alpha));
}

namespace {

Complex ipow(Complex x, int k) {
  if (k < 0) return 1.0 / ipow(x, -k);
  Complex r = 1.0;
  while (k) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

double ball_coeff(int n, int d) {
  return ball_constant(n, d) * std::pow(std::exp(log_factorial(n)) / std::pow(kPi, n), d + 1);
}

ClosedKernel::Factor unit_factor(int n) {
  ClosedKernel::Factor f;
  f.p.assign(n, 0.0);
  f.l.assign(n, 0.0);
  return f;
}

}  // namespace

ClosedKernel::ClosedKernel(int n, int d, std::string label, std::vector<Factor> factors,
                           std::function<bool(const CPoint&)> in_closure)
    : n_(n), d_(d), label_(std::move(label)), factors_(std::move(factors)), in_closure_(std::move(in_closure)) {
  if (n < 1 || d < 0) throw ContractViolation("closed kernel needs n >= 1 and d >= 0");
}

ClosedKernel ClosedKernel::ball(int n, int d) {
  Factor f = unit_factor(n);
  f.coeff = ball_coeff(n, d);
  f.u0 = 1.0;
  f.p.assign(n, -1.0);
  f.power = (d + 1) * (n + 1);
  const DomainSpec dom = DomainSpec::ball(n);
  return ClosedKernel(n, d, "closed " + dom.describe() + " d=" + std::to_string(d), {f},
                      [dom](const CPoint& z) { return dom.contains_closure(z); });
}

ClosedKernel ClosedKernel::polydisc(int n, int d) {
  std::vector<Factor> fs;
  for (int i = 0; i < n; ++i) {
    Factor f = unit_factor(n);
    f.coeff = (2.0 * d + 1.0) / std::pow(kPi, d + 1);
    f.u0 = 1.0;
    f.p[i] = -1.0;
    f.power = 2 * (d + 1);
    fs.push_back(f);
  }
  const DomainSpec dom = DomainSpec::polydisc(n);
  return ClosedKernel(n, d, "closed " + dom.describe() + " d=" + std::to_string(d), fs,
                      [dom](const CPoint& z) { return dom.contains_closure(z); });
}

ClosedKernel ClosedKernel::diagonal_ball(const std::vector<double>& scales, int d) {
  const DomainSpec dom = DomainSpec::diagonal_ball(scales);
  const int n = dom.dimension();
  Factor f = unit_factor(n);
  double prod = 1.0;
  for (int i = 0; i < n; ++i) {
    prod *= scales[i];
    f.p[i] = -scales[i];
  }
  f.coeff = ball_coeff(n, d) * std::pow(prod, d + 1);
  f.u0 = 1.0;
  f.power = (d + 1) * (n + 1);
  return ClosedKernel(n, d, "closed " + dom.describe() + " d=" + std::to_string(d), {f},
                      [dom](const CPoint& z) { return dom.contains_closure(z); });
}

ClosedKernel ClosedKernel::siegel(int n, int d) {
  Factor f = unit_factor(n);
  f.coeff = ball_coeff(n, d);
  f.u0 = 0.0;
  for (int i = 0; i < n - 1; ++i) f.p[i] = -1.0;
  f.l[n - 1] = -1.0;
  f.power = (d + 1) * (n + 1);
  auto closure = [n](const CPoint& z) {
    double r = 2.0 * z[n - 1].real();
    for (int i = 0; i < n - 1; ++i) r += std::norm(z[i]);
    return r <= 1e-12;
  };
  return ClosedKernel(n, d, "closed siegel(" + std::to_string(n) + ") d=" + std::to_string(d), {f},
                      closure);
}

ClosedKernel ClosedKernel::for_domain(const DomainSpec& domain, int d) {
  switch (domain.type()) {
    case DomainType::Ball: return ball(domain.dimension(), d);
    case DomainType::Polydisc: return polydisc(domain.dimension(), d);
    case DomainType::DiagonalBall: return diagonal_ball(domain.scales(), d);
    case DomainType::SmoothReinhardt: break;
  }
  throw Unsupported("no closed-form kernel for " + domain.describe());
}

Complex ClosedKernel::factor_u(const Factor& f, const CPoint& z, const CPoint& w) const {
  Complex u = f.u0;
  for (int i = 0; i < n_; ++i) {
    if (f.p[i] != 0.0) u += f.p[i] * z[i] * std::conj(w[i]);
    if (f.l[i] != 0.0) u += f.l[i] * (z[i] + std::conj(w[i]));
  }
  return u;
}

KernelValue ClosedKernel::evaluate(const CPoint& z, const CPoint& w) const {
  if (z.size() != n_ || w.size() != n_) throw ContractViolation("point dimension mismatch");
  if (!in_closure_(z) || !in_closure_(w)) throw DomainError("point outside the closure of the domain");
  Complex v = 1.0;
  for (const Factor& f : factors_) v *= f.coeff * ipow(factor_u(f, z, w), -f.power);
  return {v, 0.0, true};
}

KernelJet ClosedKernel::jet(const CPoint& z) const {
  if (z.size() != n_) throw ContractViolation("point dimension mismatch");
  if (!in_closure_(z)) throw DomainError("point outside the closure of the domain");
  const JetLayout& layout = JetLayout::get(n_);
  TaylorJet total(n_);
  total.coeffs()(0, 0) = 1.0;
  for (const Factor& f : factors_) {
    const Complex u0 = factor_u(f, z, z);
    // e = (u - u0) / u0 as a polynomial in (x, y) = (z - z0, wbar - conj(z0)).
    TaylorJet e(n_);
    for (int i = 0; i < n_; ++i) {
      const int k = layout.unit(i);
      e.coeffs()(k, 0) = (f.p[i] * std::conj(z[i]) + f.l[i]) / u0;
      e.coeffs()(0, k) = (f.p[i] * z[i] + f.l[i]) / u0;
      e.coeffs()(k, k) = f.p[i] / u0;
    }
    // (1 + e)^(-s) through degree 4 in e.
    TaylorJet series(n_);
    series.coeffs()(0, 0) = 1.0;
    TaylorJet power = e;
    double binom = 1.0;
    for (int k = 1; k <= 4; ++k) {
      binom *= (-f.power - (k - 1.0)) / k;
      series += power * binom;
      if (k < 4) power = power * e;
    }
    total = total * (series * (f.coeff * ipow(u0, -f.power)));
  }
  KernelJet jet;
  jet.z = z;
  jet.values = total.derivatives();
  return jet;
}

Complex closed_kernel(const DomainSpec& domain, int d, const CPoint& z, const CPoint& w) {
  return ClosedKernel::for_domain(domain, d).evaluate(z, w).value;
}

Complex polydisc_kernel_power_form(int n, int d, const CPoint& z, const CPoint& w) {
  const DomainSpec dom = DomainSpec::polydisc(n);
  if (!dom.contains_closure(z) || !dom.contains_closure(w))
    throw DomainError("point outside the closed polydisc");
  Complex k = 1.0 / std::pow(kPi, n);
  for (int i = 0; i < n; ++i) {
    const Complex u = 1.0 - z[i] * std::conj(w[i]);
    k /= u * u;
  }
  return std::pow(2.0 * d + 1.0, n) * ipow(k, d + 1);
}

}  // namespace nskernel
