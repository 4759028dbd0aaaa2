#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/metric.hpp"

using namespace nskernel;
using nskernel::gen::rel_err;

namespace {

double beta_oracle(int n, int d) {
  const double c = ball_constant(n, d);
  return std::pow((d + 1.0) * (n + 1.0), n) * std::pow(c, -1.0 / (d + 1)) * std::pow(kPi, n) / std::tgamma(n + 1.0);
}

}  // namespace

TEST(Metric, Examples) {
  const MetricPointData g21 = metric_tensor(ClosedKernel::ball(2, 1), CPoint::Zero(2));
  EXPECT_NEAR((g21.G - 6.0 * CMatrix::Identity(2, 2)).norm(), 0.0, 1e-13);
  CPoint h(1);
  h << 0.5;
  EXPECT_NEAR(metric_tensor(ClosedKernel::ball(1, 0), h).G(0, 0).real(), 32.0 / 9.0, 1e-13);
  EXPECT_NEAR((metric_tensor(ClosedKernel::polydisc(2, 0), CPoint::Zero(2)).G - 2.0 * CMatrix::Identity(2, 2)).norm(),
              0.0, 1e-13);
  EXPECT_NEAR(beta_invariant(ClosedKernel::ball(1, 0), h), 2 * kPi, 1e-12);
  CVector e2(2);
  e2 << 0.0, 1.0;
  EXPECT_NEAR(vector_length(g21, e2), std::sqrt(6.0), 1e-13);
  EXPECT_EQ(vector_length(g21, CVector::Zero(2)), 0.0);
  CVector three(1);
  three << 3.0;
  EXPECT_NEAR(vector_length(ClosedKernel::ball(1, 0), CPoint::Zero(1), three), 3 * std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(sectional_curvature(ClosedKernel::ball(1, 0), h, three), -1.0, 1e-12);
  EXPECT_NEAR(ricci_curvature(ClosedKernel::ball(2, 0), CPoint::Zero(2), e2), -1.0, 1e-12);
  EXPECT_THROW(sectional_curvature(g21, CVector::Zero(2)), ContractViolation);
  EXPECT_THROW(ricci_curvature(g21, CVector::Zero(2)), ContractViolation);
}

TEST(Metric, BallInvariantsAtRandomPoints) {
  gen::Gen g(3);
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 2; ++d) {
      const ClosedKernel k = ClosedKernel::ball(n, d);
      for (int i = 0; i < 20; ++i) {
        const CPoint z = g.point_in(DomainSpec::ball(n), 0.6);
        CVector v = g.unit_vector(n) * g.uniform(0.1, 3.0);
        const MetricPointData m = metric_tensor(k, z);
        EXPECT_LT((m.G - m.G.adjoint()).norm(), 1e-12 * m.G.norm());
        EXPECT_LT((m.G * m.G_inv - CMatrix::Identity(n, n)).norm(), 1e-10);
        EXPECT_LT(rel_err(beta_invariant(m), beta_oracle(n, d)), 1e-10);
        EXPECT_NEAR(sectional_curvature(m, v), -2.0 / ((d + 1.0) * (n + 1.0)), 1e-9);
        EXPECT_NEAR(sectional_curvature(m, v * std::polar(2.5, 0.7)), sectional_curvature(m, v), 1e-12);
        EXPECT_NEAR(ricci_curvature(m, v), -1.0 / (d + 1.0), 1e-9);
        EXPECT_LT((ricci_tensor(m) + m.G / (d + 1.0)).norm(), 1e-9 * m.G.norm());
      }
    }
}

TEST(Metric, DiagonalBallBetaAtOrigin) {
  for (int d = 0; d <= 1; ++d)
    EXPECT_LT(rel_err(beta_invariant(ClosedKernel::diagonal_ball({4.0, 1.0}, d), CPoint::Zero(2)), beta_oracle(2, d)),
              1e-12);
}

TEST(Metric, FirstDerivativesMatchDifferences) {
  const ClosedKernel k = ClosedKernel::diagonal_ball({3.0, 0.7}, 1);
  CPoint z(2);
  z << Complex(0.2, -0.1), Complex(0.05, 0.3);
  const MetricPointData m = metric_tensor(k, z);
  const double h = 1e-4;
  for (int c = 0; c < 2; ++c) {
    CPoint xp = z, xm = z, yp = z, ym = z;
    xp[c] += h;
    xm[c] -= h;
    yp[c] += Complex(0, h);
    ym[c] -= Complex(0, h);
    const CMatrix gx = (metric_tensor(k, xp).G - metric_tensor(k, xm).G) / (2 * h);
    const CMatrix gy = (metric_tensor(k, yp).G - metric_tensor(k, ym).G) / (2 * h);
    const CMatrix dz = 0.5 * (gx - Complex(0, 1) * gy);
    EXPECT_LT((m.first_derivs[c] - dz).norm() / m.first_derivs[c].norm(), 1e-6);
    // d/dzbar_c g_{b mbar} = conj(d/dz_c g_{m bbar})
    const CMatrix dzbar = 0.5 * (gx + Complex(0, 1) * gy);
    EXPECT_LT((dzbar - m.first_derivs[c].adjoint()).norm() / dzbar.norm(), 1e-6);
  }
}

TEST(Metric, SeriesAgreesWithClosed) {
  const KernelModel s = build_model(DomainSpec::ball(2), 1, 40);
  const ClosedKernel c = ClosedKernel::ball(2, 1);
  gen::Gen g(77);
  for (int i = 0; i < 5; ++i) {
    const CPoint z = g.point_in(DomainSpec::ball(2), 0.3);
    const CVector v = g.unit_vector(2);
    EXPECT_LT(rel_err(sectional_curvature(s, z, v), sectional_curvature(c, z, v)), 1e-8);
    EXPECT_LT(rel_err(ricci_curvature(s, z, v), ricci_curvature(c, z, v)), 1e-8);
  }
}

TEST(Metric, UnitaryInvariance) {
  gen::Gen g(19);
  const ClosedKernel k = ClosedKernel::ball(3, 1);
  for (int i = 0; i < 5; ++i) {
    const CMatrix U = g.unitary(3);
    const CPoint z = g.point_in(DomainSpec::ball(3), 0.7);
    const CVector v = g.unit_vector(3);
    EXPECT_LT(rel_err(vector_length(k, z, v), vector_length(k, U * z, U * v)), 1e-12);
  }
}

TEST(Metric, PathLengths) {
  for (double s : {0.3, 0.9, 0.99}) {
    CPoint a = CPoint::Zero(1), b(1);
    b << s;
    EXPECT_LT(rel_err(path_length(ClosedKernel::ball(1, 0), {a, b}), std::sqrt(2.0) * std::atanh(s)), 1e-9);
    CPoint a2 = CPoint::Zero(2), b2(2);
    b2 << 0.0, s;
    EXPECT_LT(rel_err(path_length(ClosedKernel::ball(2, 1), {a2, b2}), std::sqrt(6.0) * std::atanh(s)), 1e-9);
  }
  CPoint p(2);
  p << 0.1, 0.2;
  EXPECT_EQ(path_length(ClosedKernel::ball(2, 1), {p}), 0.0);
  // Additivity and node spacing.
  const ClosedKernel k = ClosedKernel::ball(2, 0);
  CPoint x(2), y(2), m(2);
  x << Complex(0.1, 0.1), -0.2;
  y << Complex(-0.4, 0.2), 0.5;
  m = 0.3 * x + 0.7 * y;
  const double whole = path_length(k, {x, y});
  EXPECT_LT(rel_err(whole, path_length(k, {x, m}) + path_length(k, {m, y})), 1e-8);
  EXPECT_LT(rel_err(whole, path_length(k, {x, 0.5 * (x + y), y})), 1e-8);
}
