#pragma once

#include <complex>

#include <Eigen/Dense>

namespace nskernel {

using Complex = std::complex<double>;
using CPoint = Eigen::VectorXcd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Hermitian inner product <a, b> = sum a_i conj(b_i).
inline Complex hermitian_dot(const CVector& a, const CVector& b) {
  return b.dot(a);
}

}  // namespace nskernel
