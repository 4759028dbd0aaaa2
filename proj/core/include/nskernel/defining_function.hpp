#pragma once

#include <functional>
#include <memory>
#include <string>

#include "nskernel/domain.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

class Biholo;

// Second-order data of a real defining function at a point, in complex
// coordinates: dz_i = d rho / d z_i, dzz_ij = d^2 rho / dz_i dz_j and
// dzzbar_ij = d^2 rho / dz_i dconj(z_j).
struct RhoJet {
  double value = 0.0;
  CVector dz;
  CMatrix dzz;
  CMatrix dzzbar;
};

class DefiningFunction {
 public:
  using JetFn = std::function<RhoJet(const CPoint&)>;

  DefiningFunction(int n, std::string label, JetFn jet);

  // rho(z) = rho_hat(|z_1 - c_1|^2, ..., |z_n - c_n|^2).
  static DefiningFunction reinhardt(const RhoPolynomial& rho_hat, const CPoint& center,
                                    std::string label);
  // Built-in choice for a smooth variant (Ball, DiagonalBall, SmoothReinhardt).
  static DefiningFunction canonical(const DomainSpec& domain);
  // 2 Re z_n + |z|^2, the ball of radius 1 about (0', -1).
  static DefiningFunction quadric(int n);
  // 2 Re z_n + |'z|^2.
  static DefiningFunction siegel(int n);

  int dimension() const { return n_; }
  const std::string& label() const { return label_; }

  double operator()(const CPoint& z) const { return jet_(z).value; }
  RhoJet jet(const CPoint& z) const { return jet_(z); }

  DefiningFunction scaled(double factor) const;
  // rho o G, derivatives by the chain rule with G's jacobian and hessian.
  DefiningFunction pullback(const Biholo& g) const;

 private:
  int n_;
  std::string label_;
  JetFn jet_;
};

}  // namespace nskernel
