#include "nskernel/biholo.hpp"

#include <cmath>

#include "nskernel/errors.hpp"

namespace nskernel {

Biholo::Biholo(std::string name, int n, MapFn forward, JacobianFn jacobian, HessianFn hessian,
               InverseFn inverse, DetFn det)
    : name_(std::move(name)),
      n_(n),
      forward_(std::move(forward)),
      jacobian_(std::move(jacobian)),
      hessian_(std::move(hessian)),
      inverse_(std::move(inverse)),
      det_(std::move(det)) {}

Complex Biholo::det_jacobian(const CPoint& z) const {
  if (det_) return det_(z);
  return jacobian_(z).determinant();
}

Biholo Biholo::inverse() const {
  if (!inverse_) throw Unsupported("map '" + name_ + "' has no recorded inverse");
  return inverse_();
}

namespace {

std::vector<CMatrix> zero_hessian(int n) { return std::vector<CMatrix>(n, CMatrix::Zero(n, n)); }

}  // namespace

Biholo Biholo::identity(int n) {
  return affine(CMatrix::Identity(n, n), CVector::Zero(n));
}

Biholo Biholo::affine(const CMatrix& a, const CVector& b) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.size() != n) throw ContractViolation("affine map needs square matrix");
  const Complex det = a.determinant();
  if (std::abs(det) == 0.0) throw ContractViolation("affine map is singular");
  return Biholo(
      "affine", n, [a, b](const CPoint& z) -> CPoint { return a * z + b; },
      [a](const CPoint&) -> CMatrix { return a; },
      [n](const CPoint&) { return zero_hessian(n); },
      [a, b]() {
        const CMatrix ai = a.inverse();
        return affine(ai, -ai * b);
      },
      [det](const CPoint&) { return det; });
}

Biholo Biholo::translation(const CVector& b) {
  return affine(CMatrix::Identity(b.size(), b.size()), b);
}

Biholo Biholo::dilation(const CVector& diagonal) {
  return linear(diagonal.asDiagonal().toDenseMatrix());
}

Biholo Biholo::cayley(int n) {
  const double s2 = std::sqrt(2.0);
  auto pole = [](const CPoint& z) {
    const Complex q = z[z.size() - 1] - 1.0;
    if (std::abs(q) == 0.0) throw DomainError("Cayley transform has a pole at z_n = 1");
    return q;
  };
  auto forward = [n, s2, pole](const CPoint& z) -> CPoint {
    const Complex q = pole(z);
    CPoint w(n);
    for (int k = 0; k < n - 1; ++k) w[k] = s2 * z[k] / q;
    w[n - 1] = (z[n - 1] + 1.0) / q;
    return w;
  };
  auto jac = [n, s2, pole](const CPoint& z) -> CMatrix {
    const Complex q = pole(z);
    CMatrix j = CMatrix::Zero(n, n);
    for (int k = 0; k < n - 1; ++k) {
      j(k, k) = s2 / q;
      j(k, n - 1) = -s2 * z[k] / (q * q);
    }
    j(n - 1, n - 1) = -2.0 / (q * q);
    return j;
  };
  auto hess = [n, s2, pole](const CPoint& z) {
    const Complex q = pole(z);
    std::vector<CMatrix> h = zero_hessian(n);
    for (int k = 0; k < n - 1; ++k) {
      h[k](k, n - 1) = h[k](n - 1, k) = -s2 / (q * q);
      h[k](n - 1, n - 1) = 2.0 * s2 * z[k] / (q * q * q);
    }
    h[n - 1](n - 1, n - 1) = 4.0 / (q * q * q);
    return h;
  };
  auto det = [n, pole](const CPoint& z) {
    const Complex q = pole(z);
    return -std::pow(2.0, 0.5 * (n + 1)) * std::pow(q, -(n + 1));
  };
  return Biholo("cayley", n, forward, jac, hess, [n]() { return cayley(n); }, det);
}

Biholo compose(const Biholo& outer, const Biholo& inner) {
  if (outer.dimension() != inner.dimension()) throw ContractViolation("composition dimension mismatch");
  const int n = inner.dimension();
  auto forward = [outer, inner](const CPoint& z) -> CPoint { return outer(inner(z)); };
  auto jac = [outer, inner](const CPoint& z) -> CMatrix {
    return outer.jacobian(inner(z)) * inner.jacobian(z);
  };
  auto hess = [outer, inner, n](const CPoint& z) {
    const CPoint w = inner(z);
    const CMatrix ji = inner.jacobian(z);
    const CMatrix jo = outer.jacobian(w);
    const auto ho = outer.hessian(w);
    const auto hi = inner.hessian(z);
    std::vector<CMatrix> h(n);
    for (int i = 0; i < n; ++i) {
      h[i] = ji.transpose() * ho[i] * ji;
      for (int m = 0; m < n; ++m) h[i] += jo(i, m) * hi[m];
    }
    return h;
  };
  Biholo::InverseFn inv;
  if (outer.has_inverse() && inner.has_inverse())
    inv = [outer, inner]() { return compose(inner.inverse(), outer.inverse()); };
  auto det = [outer, inner](const CPoint& z) {
    return outer.det_jacobian(inner(z)) * inner.det_jacobian(z);
  };
  return Biholo(outer.name() + "*" + inner.name(), n, forward, jac, hess, inv, det);
}

BiholoProbe probe_biholo(const Biholo& f, const std::vector<CPoint>& points, double step) {
  BiholoProbe r;
  const int n = f.dimension();
  for (const CPoint& z : points) {
    const CMatrix j = f.jacobian(z);
    CMatrix fd(n, n);
    for (int k = 0; k < n; ++k) {
      CPoint zp = z, zm = z;
      zp[k] += step;
      zm[k] -= step;
      fd.col(k) = (f(zp) - f(zm)) / (2.0 * step);
    }
    const double scale = std::max(1.0, j.norm());
    r.jacobian_error = std::max(r.jacobian_error, (fd - j).norm() / scale);
    if (f.has_inverse()) {
      const Biholo g = f.inverse();
      r.inverse_error = std::max(r.inverse_error, (g(f(z)) - z).norm());
    }
  }
  return r;
}

}  // namespace nskernel
