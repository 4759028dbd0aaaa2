#include <cmath>

#include "nskernel/errors.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/quadrature.hpp"
#include "nskernel/special.hpp"

namespace nskernel {

namespace {

// int_B |K(z,w)|^{2s} / (K(z) K(w))^s K(z) dV(z) for the unweighted ball
// kernel, with w rotated to (r, 0, ..., 0). The integrand depends on z only
// through z_1 and |'z_rest|^2, which leaves three integrals for n >= 2.
double ball_integral(int n, int s, double r, double tol) {
  const ClosedKernel k = ClosedKernel::ball(n, 0);
  CPoint w = CPoint::Zero(n);
  w[0] = r;
  const double kw = k.diagonal(w);
  AdaptiveOptions opt;
  opt.rel_tol = tol;
  opt.points = 20;
  auto integrand = [&](double theta, double t1, double trest) {
    CPoint z = CPoint::Zero(n);
    z[0] = std::polar(std::sqrt(t1), theta);
    if (n > 1) z[1] = std::sqrt(std::max(0.0, trest));
    const double kz = k.diagonal(z);
    const double kzw = std::abs(k.evaluate(z, w).value);
    return std::pow(kzw * kzw / (kz * kw), s) * kz;
  };
  const double two_pi = 2.0 * kPi;
  if (n == 1) {
    auto over_t = [&](double theta) {
      return integrate([&](double t) { return integrand(theta, t, 0.0); }, 0.0, 1.0, opt);
    };
    return 0.5 * integrate(over_t, 0.0, two_pi, opt);
  }
  const double simplex_factor = 1.0 / std::exp(log_factorial(n - 2));
  auto over_theta = [&](double theta) {
    auto over_t1 = [&](double t1) {
      auto over_rest = [&](double tr) {
        return std::pow(tr, n - 2) * simplex_factor * integrand(theta, t1, tr);
      };
      return integrate(over_rest, 0.0, 1.0 - t1, opt);
    };
    return integrate(over_t1, 0.0, 1.0, opt);
  };
  return std::pow(two_pi, n - 1) * std::pow(0.5, n) * integrate(over_theta, 0.0, two_pi, opt);
}

}  // namespace

double selberg_constant(const DomainSpec& domain, int s, const CPoint& w, double tol) {
  if (s < 1) throw ContractViolation("Selberg exponent must be a positive integer");
  domain.check_dimension(w);
  if (!domain.contains(w)) throw DomainError("fixed point must be interior");
  const int n = domain.dimension();
  switch (domain.type()) {
    case DomainType::Ball:
      return 1.0 / ball_integral(n, s, w.norm(), tol);
    case DomainType::Polydisc: {
      double inv = 1.0;
      for (int i = 0; i < n; ++i) inv *= ball_integral(1, s, std::abs(w[i]), tol);
      return 1.0 / inv;
    }
    default:
      throw Unsupported("Selberg constant needs a homogeneous domain (ball or polydisc)");
  }
}

}  // namespace nskernel
