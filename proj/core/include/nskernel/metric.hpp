#pragma once

#include <vector>

#include "nskernel/jet.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

struct MetricPointData {
  CPoint z;
  int order = 0;
  double K = 0.0;
  // G(a, b) = g_{a bbar} = d^2 log K / dz_a dzbar_b
  CMatrix G;
  double det_G = 0.0;
  CMatrix G_inv;
  // first_derivs[c](b, m) = d g_{b mbar} / dz_c
  std::vector<CMatrix> first_derivs;
  // second_mixed[c][e](b, a) = d^2 g_{b abar} / dz_c dzbar_e
  std::vector<std::vector<CMatrix>> second_mixed;
  // Derivative table of log K on the jet layout.
  CMatrix log_jet;
  double relative_tail = 0.0;
  bool certified = true;

  int dimension() const { return static_cast<int>(z.size()); }
};

MetricPointData metric_tensor(const KernelJet& jet, int order);
MetricPointData metric_tensor(const Kernel& kernel, const CPoint& z);

double beta_invariant(const MetricPointData& m);
double beta_invariant(const Kernel& kernel, const CPoint& z);

double vector_length(const MetricPointData& m, const CVector& v);
double vector_length(const Kernel& kernel, const CPoint& z, const CVector& v);

double sectional_curvature(const MetricPointData& m, const CVector& v);
double sectional_curvature(const Kernel& kernel, const CPoint& z, const CVector& v);

// Ric(c, e) = Ric_{c ebar} = -d^2 log det G / dz_c dzbar_e
CMatrix ricci_tensor(const MetricPointData& m);
double ricci_curvature(const MetricPointData& m, const CVector& v);
double ricci_curvature(const Kernel& kernel, const CPoint& z, const CVector& v);

// Length of a piecewise linear curve through the given nodes.
double path_length(const Kernel& kernel, const std::vector<CPoint>& nodes, double rel_tol = 1e-10);

}  // namespace nskernel
