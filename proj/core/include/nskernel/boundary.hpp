#pragma once

#include <utility>

#include "nskernel/domain.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

struct BoundaryFrame {
  CPoint p;
  CPoint foot;
  double delta = 0.0;
  // Unit outward normal at foot.
  CVector normal;

  // (v_H, v_N) with v_N parallel to the normal.
  std::pair<CVector, CVector> of_vector(const CVector& v) const;
};

BoundaryFrame boundary_frame(const DomainSpec& domain, const CPoint& p);

// Unit outward normal at a boundary point q, proportional to conj(d rho/dz).
CVector boundary_normal(const DomainSpec& domain, const CPoint& q);

double levi_form(const DomainSpec& domain, const CPoint& q, const CVector& w);

}  // namespace nskernel
