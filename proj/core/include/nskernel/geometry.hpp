#pragma once

#include <functional>
#include <vector>

#include "nskernel/biholo.hpp"
#include "nskernel/defining_function.hpp"
#include "nskernel/domain.hpp"
#include "nskernel/extremal.hpp"
#include "nskernel/kernel.hpp"

namespace nskernel {

CPoint cayley(const CPoint& z);
Biholo cayley_data(int n);

// Relative residual of K_src(z,w) = det F'(z)^(d+1) K_dst(Fz, Fw) conj(det F'(w))^(d+1).
double transform_kernel_residual(const Biholo& f, const Kernel& src, const Kernel& dst, const CPoint& z,
                                 const CPoint& w);
// max of the relative residual of G_src(z) = F'(z)^T G_dst(Fz) conj(F'(z)) and
// of tau_src(z, v) = tau_dst(Fz, F'(z) v).
double transform_metric_residual(const Biholo& f, const Kernel& src, const Kernel& dst, const CPoint& z,
                                 const CVector& v);
// I_src(p, v) against |det F'(p)|^(-2d-2) I_dst(Fp, F'(p) v).
double transform_min_integral_residual(const Biholo& f, const KernelModel& src, const KernelModel& dst,
                                       const MinIntegralKind& kind, const CPoint& p, const CVector& v);

struct PinchukMap {
  CPoint zeta;
  CPoint reference;
  // Unitary pre-map sending the normal at the reference point to e_n, and
  // the factor 1/|d rho(reference)| applied to rho.
  CMatrix rotation;
  double rho_scale = 1.0;
  CMatrix P;
  CMatrix a1;
  CMatrix b1;
  CMatrix Lambda;
  CMatrix U;
  // h = phi3 o phi2 o phi1 o rotation
  Biholo h;
  DefiningFunction rho;             // normalized defining function, ambient coordinates
  DefiningFunction rho_normalized;  // rho o h^{-1}

  // |grad_zbar rho(zeta)| for the normalized rho.
  double gradient_norm() const;
};

PinchukMap pinchuk_normalize(const DefiningFunction& rho, const CPoint& zeta, const CPoint& reference);
PinchukMap pinchuk_normalize(const DefiningFunction& rho, const CPoint& zeta);
PinchukMap pinchuk_normalize(const DomainSpec& domain, const CPoint& zeta);
PinchukMap pinchuk_normalize(const DomainSpec& domain, const CPoint& zeta, const CPoint& reference);

struct NormalFormReport {
  double origin_residual = 0.0;    // |h(zeta)|
  double value_residual = 0.0;     // |rho_zeta(0)|
  double gradient_residual = 0.0;  // |d rho_zeta(0) - e_n|
  double q_residual = 0.0;         // max |a_{mu nu}|, mu, nu < n
  double h_residual = 0.0;         // max |b_{mu nubar} - delta|, mu, nu < n
  double normal_image_residual = 0.0;
  double max_jet_residual() const;
};

// Normal form of rho o h^{-1} at 0 and the image of the inward normal at the
// sample distances.
NormalFormReport normal_form_check(const PinchukMap& map, const std::vector<double>& normal_samples = {
                                                              1e-3, 1e-2, 5e-2});

struct ScalingFrame {
  int j = 0;
  CPoint p;
  CPoint zeta;
  double delta = 0.0;
  double eta = 0.0;
  PinchukMap pinchuk;
  CVector T;  // diagonal of the anisotropic dilation
  CMatrix S;  // h'(p)
  DefiningFunction scaled_rho;

  Biholo dilation() const { return Biholo::dilation(T); }
  Complex det_T() const;
};

ScalingFrame scaling_frame(const DomainSpec& domain, const CPoint& p0, double delta, int j = 0);
// Frame for a defining function whose foot point on the inward normal at p0
// is p0 itself.
ScalingFrame scaling_frame(const DefiningFunction& rho, const CPoint& p0, double delta, int j = 0);

}  // namespace nskernel
