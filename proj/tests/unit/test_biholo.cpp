#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "nskernel/biholo.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/geometry.hpp"

using namespace nskernel;

namespace {

CPoint bstar(int n) {
  CPoint b = CPoint::Zero(n);
  b[n - 1] = -1.0;
  return b;
}

std::vector<CPoint> siegel_points(int n, int count, gen::Gen& g) {
  std::vector<CPoint> pts;
  const auto ball = DomainSpec::ball(n);
  for (int i = 0; i < count; ++i) pts.push_back(cayley(g.point_in(ball, 0.8)));
  return pts;
}

}  // namespace

TEST(Cayley, PaperExamples) {
  for (int n = 1; n <= 3; ++n) {
    const Biholo phi = cayley_data(n);
    EXPECT_NEAR(phi(bstar(n)).norm(), 0.0, 1e-15);
    const Complex det = phi.det_jacobian(bstar(n));
    EXPECT_NEAR(std::abs(det - std::pow(-1.0, n) * std::pow(2.0, -(n + 1) / 2.0)), 0.0, 1e-15);
    CMatrix expect = CMatrix::Zero(n, n);
    for (int k = 0; k < n - 1; ++k) expect(k, k) = -1.0 / std::sqrt(2.0);
    expect(n - 1, n - 1) = -0.5;
    EXPECT_NEAR((phi.jacobian(bstar(n)) - expect).norm(), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(phi.jacobian(bstar(n)).determinant() - det), 0.0, 1e-15);
  }
  CPoint z(2);
  z << Complex(0.1, 0.2), -0.5;
  EXPECT_NEAR((cayley(cayley(z)) - z).norm(), 0.0, 1e-15);
  CPoint pole(2);
  pole << 0.3, 1.0;
  EXPECT_THROW(cayley(pole), DomainError);
}

TEST(Cayley, MapsSiegelDomainIntoBall) {
  gen::Gen g(21);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < 20; ++i) {
      CPoint z = g.unit_vector(n) * g.uniform(0.0, 3.0);
      const double rho = 2.0 * z[n - 1].real() + z.head(n - 1).squaredNorm();
      if (std::abs(z[n - 1] - 1.0) < 1e-3) continue;
      EXPECT_EQ(cayley(z).norm() < 1.0, rho < 0.0);
    }
}

TEST(Biholo, ProbeEveryFactory) {
  gen::Gen g(4);
  for (int n = 1; n <= 3; ++n) {
    std::vector<CPoint> pts = siegel_points(n, 5, g);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = g.complex_normal() + (i == j ? 3.0 : 0.0);
    const CVector b = g.unit_vector(n);
    std::vector<Biholo> maps{Biholo::identity(n), Biholo::affine(a, b), Biholo::translation(b),
                             Biholo::dilation(CVector::Constant(n, Complex(0.5, 0.2))), cayley_data(n),
                             compose(cayley_data(n), Biholo::linear(g.unitary(n))),
                             compose(Biholo::affine(a, b), cayley_data(n))};
    for (const Biholo& f : maps) {
      const BiholoProbe pr = probe_biholo(f, pts);
      EXPECT_LT(pr.jacobian_error, 1e-6) << f.name() << " n=" << n;
      EXPECT_LT(pr.inverse_error, 1e-9) << f.name() << " n=" << n;
    }
  }
}

TEST(Biholo, ComposedHessianMatchesDifferences) {
  gen::Gen g(8);
  const int n = 2;
  const Biholo f = compose(cayley_data(n), Biholo::affine(g.unitary(n), 0.1 * g.unit_vector(n)));
  const CPoint z = siegel_points(n, 1, g)[0];
  const auto h = f.hessian(z);
  const double step = 1e-5;
  for (int k = 0; k < n; ++k) {
    CPoint zp = z, zm = z;
    zp[k] += step;
    zm[k] -= step;
    const CMatrix dj = (f.jacobian(zp) - f.jacobian(zm)) / (2.0 * step);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_NEAR(std::abs(h[i](j, k) - dj(i, j)), 0.0, 1e-7);
  }
  EXPECT_NEAR(std::abs(f.det_jacobian(z) - f.jacobian(z).determinant()), 0.0, 1e-12);
}

TEST(Biholo, SingularAffineRejected) {
  EXPECT_THROW(Biholo::linear(CMatrix::Zero(2, 2)), ContractViolation);
}
