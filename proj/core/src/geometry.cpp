#include "nskernel/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "nskernel/boundary.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/metric.hpp"

namespace nskernel {

namespace {

double rel_diff(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

void require_certified(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("uncertified point in ") + what);
}

// Unitary R with R nu = e_n.
CMatrix rotation_to_last_axis(const CVector& nu) {
  const int n = static_cast<int>(nu.size());
  const Complex last = nu[n - 1];
  const Complex phase = std::abs(last) > 0.0 ? last / std::abs(last) : Complex(1.0, 0.0);
  CVector target = CVector::Zero(n);
  target[n - 1] = phase;
  const CVector w = nu - target;
  CMatrix h = CMatrix::Identity(n, n);
  const double ww = w.squaredNorm();
  if (ww > 1e-28) h -= (2.0 / ww) * (w * w.adjoint());
  return std::conj(phase) * h;
}

// (z', z_n + sum_{mu,nu<n} a_{mu nu} z_mu z_nu); the sign flips for the inverse.
Biholo quadratic_shear(const CMatrix& a, double sign) {
  const int n = static_cast<int>(a.rows()) + 1;
  const int m = n - 1;
  auto forward = [a, sign, n, m](const CPoint& z) -> CPoint {
    CPoint w = z;
    if (m > 0) {
      const CVector t = z.head(m);
      w[n - 1] += sign * (t.transpose() * a * t)(0, 0);
    }
    return w;
  };
  auto jac = [a, sign, n, m](const CPoint& z) -> CMatrix {
    CMatrix j = CMatrix::Identity(n, n);
    if (m > 0) j.block(n - 1, 0, 1, m) = (2.0 * sign) * (a * z.head(m)).transpose();
    return j;
  };
  auto hess = [a, sign, n, m](const CPoint&) {
    std::vector<CMatrix> h(n, CMatrix::Zero(n, n));
    if (m > 0) h[n - 1].topLeftCorner(m, m) = (2.0 * sign) * a;
    return h;
  };
  return Biholo(
      sign > 0 ? "phi2" : "phi2^-1", n, forward, jac, hess, [a, sign]() { return quadratic_shear(a, -sign); },
      [](const CPoint&) { return Complex(1.0, 0.0); });
}

// Eigenvectors of the tangential Levi block, eigenvalues descending, with a
// deterministic phase choice.
void diagonalize_levi(const CMatrix& block, RVector& values, CMatrix& vectors) {
  const int m = static_cast<int>(block.rows());
  values.resize(m);
  vectors = CMatrix::Identity(m, m);
  if (m == 0) return;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(block);
  if (es.info() != Eigen::Success) throw NumericalError("Levi block eigendecomposition failed");
  const RVector ev = es.eigenvalues();
  const double top = ev[m - 1];
  if (ev[0] <= 1e-12 * std::max(1.0, std::abs(top)))
    throw NotStronglyPseudoconvex("Levi form is not positive definite at the boundary point (smallest eigenvalue " +
                                  std::to_string(ev[0]) + ")");
  for (int i = 0; i < m; ++i) values[i] = ev[m - 1 - i];
  if (top - ev[0] <= 1e-12 * top) return;
  for (int i = 0; i < m; ++i) {
    CVector col = es.eigenvectors().col(m - 1 - i);
    int pivot = i;
    if (std::abs(col[pivot]) < 1e-12) {
      pivot = 0;
      while (pivot < m && std::abs(col[pivot]) < 1e-12) ++pivot;
    }
    const Complex c = col[pivot];
    col *= std::conj(c) / std::abs(c);
    vectors.col(i) = col;
  }
}

void require_boundary(const DefiningFunction& rho, const CPoint& zeta) {
  const RhoJet j = rho.jet(zeta);
  const double g = j.dz.norm();
  if (g == 0.0) throw DomainError("defining function has a critical point at the boundary point");
  if (std::abs(j.value) > 1e-8 * std::max(1.0, g))
    throw DomainError("point is not on the boundary (rho = " + std::to_string(j.value) + ")");
}

}  // namespace

CPoint cayley(const CPoint& z) { return Biholo::cayley(static_cast<int>(z.size()))(z); }

Biholo cayley_data(int n) { return Biholo::cayley(n); }

double transform_kernel_residual(const Biholo& f, const Kernel& src, const Kernel& dst, const CPoint& z,
                                 const CPoint& w) {
  const int d = src.order();
  if (dst.order() != d) throw ContractViolation("source and destination kernels have different orders");
  const KernelValue ks = src.evaluate(z, w);
  require_certified(ks.certified, "source kernel");
  const KernelValue kd = dst.evaluate(f(z), f(w));
  require_certified(kd.certified, "destination kernel");
  const Complex jz = std::pow(f.det_jacobian(z), d + 1);
  const Complex jw = std::pow(std::conj(f.det_jacobian(w)), d + 1);
  return rel_diff(ks.value, jz * kd.value * jw);
}

double transform_metric_residual(const Biholo& f, const Kernel& src, const Kernel& dst, const CPoint& z,
                                 const CVector& v) {
  const MetricPointData ms = metric_tensor(src, z);
  require_certified(ms.certified, "source metric");
  const MetricPointData md = metric_tensor(dst, f(z));
  require_certified(md.certified, "destination metric");
  const CMatrix j = f.jacobian(z);
  const CMatrix pulled = j.transpose() * md.G * j.conjugate();
  const double scale = std::max(ms.G.norm(), pulled.norm());
  const double gres = scale == 0.0 ? 0.0 : (ms.G - pulled).norm() / scale;
  const double tres = rel_diff(vector_length(ms, v), vector_length(md, j * v));
  return std::max(gres, tres);
}

double transform_min_integral_residual(const Biholo& f, const KernelModel& src, const KernelModel& dst,
                                       const MinIntegralKind& kind, const CPoint& p, const CVector& v) {
  const int d = src.order();
  const double lhs = minimum_integral(src, kind, p, v).value;
  const double det = std::abs(f.det_jacobian(p));
  const double rhs = std::pow(det, -2.0 * d - 2.0) * minimum_integral(dst, kind, f(p), f.jacobian(p) * v).value;
  return rel_diff(lhs, rhs);
}

double PinchukMap::gradient_norm() const { return rho.jet(zeta).dz.norm(); }

PinchukMap pinchuk_normalize(const DefiningFunction& rho_in, const CPoint& zeta, const CPoint& reference) {
  const int n = rho_in.dimension();
  if (zeta.size() != n || reference.size() != n) throw ContractViolation("point dimension mismatch");
  require_boundary(rho_in, zeta);
  require_boundary(rho_in, reference);

  PinchukMap out{zeta, reference, CMatrix(), 1.0, CMatrix(), CMatrix(), CMatrix(), CMatrix(), CMatrix(),
                 Biholo::identity(n), rho_in, rho_in};
  const RhoJet ref = rho_in.jet(reference);
  out.rho_scale = 1.0 / ref.dz.norm();
  out.rho = rho_in.scaled(out.rho_scale);
  const CVector nu = ref.dz.conjugate() / ref.dz.norm();
  out.rotation = rotation_to_last_axis(nu);

  const Biholo rot = Biholo::linear(out.rotation);
  const DefiningFunction rotated = out.rho.pullback(rot.inverse());
  const CPoint zr = out.rotation * zeta;
  const RhoJet j = rotated.jet(zr);
  if (std::abs(j.dz[n - 1]) < 1e-12)
    throw DomainError("d rho / d z_n vanishes at the boundary point after rotation");

  // phi1
  CMatrix P = CMatrix::Zero(n, n);
  for (int k = 0; k < n - 1; ++k) {
    P(k, k) = std::conj(j.dz[n - 1]);
    P(k, n - 1) = -std::conj(j.dz[k]);
  }
  for (int k = 0; k < n; ++k) P(n - 1, k) = j.dz[k];
  out.P = P;
  const CMatrix pinv = P.inverse();
  out.a1 = 0.5 * pinv.transpose() * j.dzz * pinv;
  out.a1 = 0.5 * (out.a1 + out.a1.transpose()).eval();
  out.b1 = pinv.transpose() * j.dzzbar * pinv.conjugate();
  out.b1 = 0.5 * (out.b1 + out.b1.adjoint()).eval();

  // phi3
  RVector lambda;
  CMatrix w;
  diagonalize_levi(out.b1.topLeftCorner(n - 1, n - 1), lambda, w);
  out.Lambda = CMatrix::Identity(n, n);
  out.U = CMatrix::Identity(n, n);
  for (int k = 0; k < n - 1; ++k) out.Lambda(k, k) = std::sqrt(lambda[k]);
  out.U.topLeftCorner(n - 1, n - 1) = w.transpose();

  const Biholo phi1 = Biholo::affine(P, -(P * zr));
  const Biholo phi2 = quadratic_shear(out.a1.topLeftCorner(n - 1, n - 1), 1.0);
  const Biholo phi3 = Biholo::linear(out.Lambda * out.U);
  out.h = compose(phi3, compose(phi2, compose(phi1, rot)));
  out.rho_normalized = out.rho.pullback(out.h.inverse());
  return out;
}

PinchukMap pinchuk_normalize(const DefiningFunction& rho, const CPoint& zeta) {
  return pinchuk_normalize(rho, zeta, zeta);
}

PinchukMap pinchuk_normalize(const DomainSpec& domain, const CPoint& zeta) {
  return pinchuk_normalize(DefiningFunction::canonical(domain), zeta, zeta);
}

PinchukMap pinchuk_normalize(const DomainSpec& domain, const CPoint& zeta, const CPoint& reference) {
  return pinchuk_normalize(DefiningFunction::canonical(domain), zeta, reference);
}

double NormalFormReport::max_jet_residual() const {
  return std::max({origin_residual, value_residual, gradient_residual, q_residual, h_residual});
}

NormalFormReport normal_form_check(const PinchukMap& map, const std::vector<double>& normal_samples) {
  const int n = static_cast<int>(map.zeta.size());
  NormalFormReport r;
  r.origin_residual = map.h(map.zeta).norm();
  const RhoJet j = map.rho_normalized.jet(CPoint::Zero(n));
  r.value_residual = std::abs(j.value);
  CVector en = CVector::Zero(n);
  en[n - 1] = 1.0;
  r.gradient_residual = (j.dz - en).norm();
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) {
      r.q_residual = std::max(r.q_residual, 0.5 * std::abs(j.dzz(a, b)));
      r.h_residual = std::max(r.h_residual, std::abs(j.dzzbar(a, b) - (a == b ? 1.0 : 0.0)));
    }
  const RhoJet at = map.rho.jet(map.zeta);
  const double g = at.dz.norm();
  const CVector nu = at.dz.conjugate() / g;
  for (double t : normal_samples) {
    CPoint expect = CPoint::Zero(n);
    expect[n - 1] = -t * g;
    r.normal_image_residual = std::max(r.normal_image_residual, (map.h(map.zeta - t * nu) - expect).norm());
  }
  return r;
}

Complex ScalingFrame::det_T() const {
  Complex det = 1.0;
  for (Complex t : T) det *= t;
  return det;
}

namespace {

ScalingFrame make_frame(PinchukMap map, const CPoint& p, double delta, int j) {
  const int n = static_cast<int>(p.size());
  ScalingFrame f{j, p, map.zeta, delta, 0.0, map, CVector(), CMatrix(), map.rho_normalized};
  f.eta = delta * map.gradient_norm();
  f.T = CVector::Constant(n, Complex(1.0 / std::sqrt(f.eta), 0.0));
  f.T[n - 1] = 1.0 / f.eta;
  f.S = map.h.jacobian(p);
  const Biholo unscale = Biholo::dilation(f.T.cwiseInverse());
  f.scaled_rho = map.rho_normalized.pullback(unscale).scaled(1.0 / f.eta);
  return f;
}

}  // namespace

ScalingFrame scaling_frame(const DomainSpec& domain, const CPoint& p0, double delta, int j) {
  if (!(delta > 0.0)) throw ContractViolation("delta must be positive");
  const CVector nu = boundary_normal(domain, p0);
  const CPoint p = p0 - delta * nu;
  const BoundaryFrame bf = boundary_frame(domain, p);
  return make_frame(pinchuk_normalize(domain, bf.foot, p0), p, bf.delta, j);
}

ScalingFrame scaling_frame(const DefiningFunction& rho, const CPoint& p0, double delta, int j) {
  if (!(delta > 0.0)) throw ContractViolation("delta must be positive");
  const RhoJet at = rho.jet(p0);
  const CVector nu = at.dz.conjugate() / at.dz.norm();
  return make_frame(pinchuk_normalize(rho, p0, p0), p0 - delta * nu, delta, j);
}

}  // namespace nskernel
