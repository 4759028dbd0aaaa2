#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nskernel/types.hpp"

namespace nskernel {

// Holomorphic map with exact first and second derivatives.
class Biholo {
 public:
  using MapFn = std::function<CPoint(const CPoint&)>;
  using JacobianFn = std::function<CMatrix(const CPoint&)>;
  // hessian(z)[i](j, k) = d^2 F_i / dz_j dz_k
  using HessianFn = std::function<std::vector<CMatrix>(const CPoint&)>;
  using DetFn = std::function<Complex(const CPoint&)>;
  using InverseFn = std::function<Biholo()>;

  Biholo(std::string name, int n, MapFn forward, JacobianFn jacobian, HessianFn hessian,
         InverseFn inverse = {}, DetFn det = {});

  static Biholo identity(int n);
  // z -> A z + b
  static Biholo affine(const CMatrix& a, const CVector& b);
  static Biholo linear(const CMatrix& a) { return affine(a, CVector::Zero(a.rows())); }
  static Biholo translation(const CVector& b);
  static Biholo dilation(const CVector& diagonal);
  // Phi(z) = (sqrt2 'z/(z_n - 1), (z_n + 1)/(z_n - 1)); an involution that maps
  // the Siegel domain 2 Re z_n + |'z|^2 < 0 onto the unit ball.
  static Biholo cayley(int n);

  const std::string& name() const { return name_; }
  int dimension() const { return n_; }

  CPoint operator()(const CPoint& z) const { return forward_(z); }
  CMatrix jacobian(const CPoint& z) const { return jacobian_(z); }
  std::vector<CMatrix> hessian(const CPoint& z) const { return hessian_(z); }
  Complex det_jacobian(const CPoint& z) const;
  bool has_inverse() const { return static_cast<bool>(inverse_); }
  Biholo inverse() const;

 private:
  std::string name_;
  int n_;
  MapFn forward_;
  JacobianFn jacobian_;
  HessianFn hessian_;
  InverseFn inverse_;
  DetFn det_;
};

// outer o inner
Biholo compose(const Biholo& outer, const Biholo& inner);

struct BiholoProbe {
  double jacobian_error = 0.0;  // max relative error against central differences
  double inverse_error = 0.0;   // max |F^{-1}(F(z)) - z|
};

BiholoProbe probe_biholo(const Biholo& f, const std::vector<CPoint>& points, double step = 1e-6);

}  // namespace nskernel
