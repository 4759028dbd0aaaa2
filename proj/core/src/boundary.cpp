#include "nskernel/boundary.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "nskernel/defining_function.hpp"
#include "nskernel/errors.hpp"

namespace nskernel {

std::pair<CVector, CVector> BoundaryFrame::of_vector(const CVector& v) const {
  const CVector vn = hermitian_dot(v, normal) * normal;
  return {v - vn, vn};
}

namespace {

void require_smooth(const DomainSpec& domain) {
  if (!domain.has_smooth_boundary())
    throw Unsupported("boundary geometry is not available for the polydisc");
}

std::vector<RVector> simplex_grid(int n, int res) {
  std::vector<RVector> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      RVector w(n);
      for (int i = 0; i < n; ++i) w[i] = static_cast<double>(cur[i]) / res;
      out.push_back(w);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, res);
  return out;
}

// Nearest point on {rho_hat(s^2) = 0} to the radii r, by Newton on the
// Lagrange system (s - r + mu grad F = 0, F = 0) with F(s) = rho_hat(s_i^2).
RVector nearest_radii(const DomainSpec& domain, const RVector& r, double gauge) {
  const int n = domain.dimension();
  const RhoPolynomial& rho = domain.rho();
  RVector s = r / gauge;
  auto grad_f = [&](const RVector& x) {
    const RVector g = rho.gradient(x.cwiseProduct(x));
    return RVector(2.0 * x.cwiseProduct(g));
  };
  RVector gf = grad_f(s);
  double mu = -(s - r).dot(gf) / gf.squaredNorm();
  for (int it = 0; it < 100; ++it) {
    const RVector t = s.cwiseProduct(s);
    const RVector g = rho.gradient(t);
    const RMatrix h = rho.hessian(t);
    gf = 2.0 * s.cwiseProduct(g);
    RVector res(n + 1);
    res.head(n) = s - r + mu * gf;
    res[n] = rho.value(t);
    RMatrix jac = RMatrix::Zero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double fij = 4.0 * s[i] * s[j] * h(i, j) + (i == j ? 2.0 * g[i] : 0.0);
        jac(i, j) = (i == j ? 1.0 : 0.0) + mu * fij;
      }
      jac(i, n) = gf[i];
      jac(n, i) = gf[i];
    }
    const RVector step = jac.fullPivLu().solve(-res);
    s += step.head(n);
    mu += step[n];
    for (int i = 0; i < n; ++i) s[i] = std::max(s[i], 0.0);
    if (step.head(n).norm() <= 1e-12 * std::max(1.0, s.norm()) && std::abs(res[n]) < 1e-12) {
      return s;
    }
  }
  const RVector t = s.cwiseProduct(s);
  if (std::abs(rho.value(t)) > 1e-10)
    throw NumericalError("nearest boundary point iteration did not converge");
  return s;
}

}  // namespace

BoundaryFrame boundary_frame(const DomainSpec& domain, const CPoint& p) {
  require_smooth(domain);
  domain.check_dimension(p);
  if (!domain.contains(p)) throw DomainError("point is not interior to " + domain.describe());
  const int n = domain.dimension();
  BoundaryFrame f;
  f.p = p;
  if (domain.type() == DomainType::Ball) {
    const double r = p.norm();
    if (r == 0.0) throw AmbiguityError("the centre of the ball has no unique nearest boundary point");
    f.foot = p / r;
    f.delta = 1.0 - r;
    f.normal = f.foot;
    return f;
  }
  RVector r(n);
  for (int i = 0; i < n; ++i) r[i] = std::abs(p[i]);
  const double g = domain.gauge(p);
  if (g == 0.0) throw AmbiguityError("the origin has no unique nearest boundary point");
  const RVector s = nearest_radii(domain, r, g);
  f.foot = CPoint(n);
  for (int i = 0; i < n; ++i) {
    if (r[i] == 0.0) {
      if (s[i] > 1e-9) throw AmbiguityError("nearest boundary point has an undetermined phase");
      f.foot[i] = 0.0;
    } else {
      f.foot[i] = s[i] * p[i] / r[i];
    }
  }
  f.delta = (p - f.foot).norm();

  // Reject inputs where the Newton foot is not the global minimiser.
  const int res = n == 1 ? 1 : (n == 2 ? 400 : 60);
  for (const RVector& omega : simplex_grid(n, res)) {
    const double lam = domain.radial_extent(omega);
    CPoint q(n);
    for (int i = 0; i < n; ++i) {
      const double si = std::sqrt(lam * omega[i]);
      q[i] = r[i] == 0.0 ? Complex(si) : si * p[i] / r[i];
    }
    if ((p - q).norm() < f.delta * (1.0 - 1e-9) - 1e-12)
      throw AmbiguityError("point is outside the region where the nearest boundary point is unique");
  }

  const RhoJet jet = DefiningFunction::canonical(domain).jet(f.foot);
  const CVector nu = jet.dz.conjugate();
  f.normal = nu / nu.norm();
  return f;
}

CVector boundary_normal(const DomainSpec& domain, const CPoint& q) {
  require_smooth(domain);
  domain.check_dimension(q);
  const RhoJet jet = DefiningFunction::canonical(domain).jet(q);
  if (std::abs(jet.value) > 1e-8) throw ContractViolation("point is not on the boundary");
  const CVector nu = jet.dz.conjugate();
  return nu / nu.norm();
}

double levi_form(const DomainSpec& domain, const CPoint& q, const CVector& w) {
  require_smooth(domain);
  domain.check_dimension(q);
  domain.check_dimension(w);
  const RhoJet jet = DefiningFunction::canonical(domain).jet(q);
  if (std::abs(jet.value) > 1e-8) throw ContractViolation("point is not on the boundary");
  const CVector nu = jet.dz.conjugate() / jet.dz.norm();
  if (std::abs(hermitian_dot(w, nu)) > 1e-8 * std::max(1.0, w.norm()))
    throw ContractViolation("vector is not complex tangential at the boundary point");
  const Complex v = w.transpose() * jet.dzzbar * w.conjugate();
  return v.real();
}

}  // namespace nskernel
