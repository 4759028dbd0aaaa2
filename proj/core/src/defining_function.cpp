#include "nskernel/defining_function.hpp"

#include "nskernel/biholo.hpp"
#include "nskernel/errors.hpp"

namespace nskernel {

DefiningFunction::DefiningFunction(int n, std::string label, JetFn jet)
    : n_(n), label_(std::move(label)), jet_(std::move(jet)) {}

DefiningFunction DefiningFunction::reinhardt(const RhoPolynomial& rho_hat, const CPoint& center,
                                             std::string label) {
  const int n = rho_hat.dimension();
  if (center.size() != n) throw ContractViolation("center dimension mismatch");
  auto jet = [rho_hat, center, n](const CPoint& z) {
    if (z.size() != n) throw ContractViolation("point dimension mismatch");
    const CVector u = z - center;
    RVector t(n);
    for (int i = 0; i < n; ++i) t[i] = std::norm(u[i]);
    const RVector g = rho_hat.gradient(t);
    const RMatrix h = rho_hat.hessian(t);
    RhoJet r;
    r.value = rho_hat.value(t);
    r.dz.resize(n);
    r.dzz.resize(n, n);
    r.dzzbar.resize(n, n);
    for (int i = 0; i < n; ++i) {
      r.dz[i] = g[i] * std::conj(u[i]);
      for (int j = 0; j < n; ++j) {
        r.dzz(i, j) = h(i, j) * std::conj(u[i]) * std::conj(u[j]);
        r.dzzbar(i, j) = h(i, j) * std::conj(u[i]) * u[j] + (i == j ? g[i] : 0.0);
      }
    }
    return r;
  };
  return DefiningFunction(n, std::move(label), jet);
}

DefiningFunction DefiningFunction::canonical(const DomainSpec& domain) {
  if (!domain.has_smooth_boundary())
    throw Unsupported("polydisc has no smooth defining function");
  std::string label;
  switch (domain.type()) {
    case DomainType::Ball: label = "|z|^2 - 1"; break;
    case DomainType::DiagonalBall: label = "sum a_i |z_i|^2 - 1"; break;
    default: label = "rho_hat(|z_1|^2, ..., |z_n|^2)"; break;
  }
  return reinhardt(domain.rho(), CPoint::Zero(domain.dimension()), label);
}

DefiningFunction DefiningFunction::quadric(int n) {
  CPoint c = CPoint::Zero(n);
  c[n - 1] = -1.0;
  return reinhardt(DomainSpec::ball(n).rho(), c, "2 Re z_n + |z|^2");
}

DefiningFunction DefiningFunction::siegel(int n) {
  auto jet = [n](const CPoint& z) {
    RhoJet r;
    r.value = 2.0 * z[n - 1].real();
    r.dz = CVector::Zero(n);
    for (int i = 0; i < n - 1; ++i) {
      r.value += std::norm(z[i]);
      r.dz[i] = std::conj(z[i]);
    }
    r.dz[n - 1] = 1.0;
    r.dzz = CMatrix::Zero(n, n);
    r.dzzbar = CMatrix::Identity(n, n);
    r.dzzbar(n - 1, n - 1) = 0.0;
    return r;
  };
  return DefiningFunction(n, "2 Re z_n + |'z|^2", jet);
}

DefiningFunction DefiningFunction::scaled(double factor) const {
  auto inner = jet_;
  auto jet = [inner, factor](const CPoint& z) {
    RhoJet r = inner(z);
    r.value *= factor;
    r.dz *= factor;
    r.dzz *= factor;
    r.dzzbar *= factor;
    return r;
  };
  return DefiningFunction(n_, label_, jet);
}

DefiningFunction DefiningFunction::pullback(const Biholo& g) const {
  if (g.dimension() != n_) throw ContractViolation("pullback dimension mismatch");
  auto inner = jet_;
  const int n = n_;
  auto jet = [inner, g, n](const CPoint& z) {
    const CPoint w = g(z);
    const RhoJet s = inner(w);
    const CMatrix j = g.jacobian(z);
    const auto h = g.hessian(z);
    RhoJet r;
    r.value = s.value;
    r.dz = j.transpose() * s.dz;
    r.dzz = j.transpose() * s.dzz * j;
    for (int m = 0; m < n; ++m) r.dzz += s.dz[m] * h[m];
    r.dzzbar = j.transpose() * s.dzzbar * j.conjugate();
    return r;
  };
  return DefiningFunction(n_, label_, jet);
}

}  // namespace nskernel
