#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "nskernel/biholo.hpp"
#include "nskernel/defining_function.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/geometry.hpp"

using namespace nskernel;

namespace {

// Wirtinger derivatives of a real function by central differences.
CVector d_z(const std::function<double(const CPoint&)>& f, const CPoint& z, double h = 1e-6) {
  CVector out(z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    CPoint a = z, b = z, c = z, d = z;
    a[k] += h;
    b[k] -= h;
    c[k] += Complex(0, h);
    d[k] -= Complex(0, h);
    const double fx = (f(a) - f(b)) / (2 * h), fy = (f(c) - f(d)) / (2 * h);
    out[k] = 0.5 * Complex(fx, -fy);
  }
  return out;
}

void expect_jet_consistent(const DefiningFunction& rho, const CPoint& z) {
  const int n = rho.dimension();
  const RhoJet j = rho.jet(z);
  EXPECT_NEAR((j.dz - d_z([&](const CPoint& x) { return rho(x); }, z)).norm(), 0.0, 1e-7);
  for (int a = 0; a < n; ++a) {
    // d/dz of Re and Im parts of dz_b recombine into the second derivatives.
    auto re = [&](const CPoint& x) { return rho.jet(x).dz[a].real(); };
    auto im = [&](const CPoint& x) { return rho.jet(x).dz[a].imag(); };
    const CVector dre = d_z(re, z, 1e-5), dim = d_z(im, z, 1e-5);
    const double h = 1e-5;
    for (int b = 0; b < n; ++b) {
      EXPECT_NEAR(std::abs(j.dzz(b, a) - (dre[b] + Complex(0, 1) * dim[b])), 0.0, 1e-6);
      // d/dzbar_b of dz_a is conj(d/dz_b of conj(dz_a)).
      const Complex dbar = std::conj(dre[b] - Complex(0, 1) * dim[b]);
      EXPECT_NEAR(std::abs(j.dzzbar(a, b) - dbar), 0.0, 1e-6) << h;
    }
  }
  EXPECT_NEAR((j.dzzbar - j.dzzbar.adjoint()).norm(), 0.0, 1e-13);
  EXPECT_NEAR((j.dzz - j.dzz.transpose()).norm(), 0.0, 1e-13);
}

}  // namespace

TEST(DefiningFunction, ReinhardtJetsMatchDifferences) {
  gen::Gen g(13);
  const auto sr = DomainSpec::smooth_reinhardt(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{2, 0}, 0.1}, {{1, 1}, 0.2}, {{0, 0}, -1.0}});
  for (const DomainSpec& D : {DomainSpec::ball(2), DomainSpec::diagonal_ball({4.0, 1.0}), sr}) {
    const DefiningFunction rho = DefiningFunction::canonical(D);
    for (int i = 0; i < 4; ++i) expect_jet_consistent(rho, g.point_in(D, 1.2));
  }
  EXPECT_THROW(DefiningFunction::canonical(DomainSpec::polydisc(2)), Unsupported);
}

TEST(DefiningFunction, QuadricAndSiegelValues) {
  gen::Gen g(2);
  for (int i = 0; i < 10; ++i) {
    const CPoint z = g.unit_vector(3) * g.uniform(0.0, 2.0);
    const double base = 2.0 * z[2].real();
    EXPECT_NEAR(DefiningFunction::quadric(3)(z), base + z.squaredNorm(), 1e-14);
    EXPECT_NEAR(DefiningFunction::siegel(3)(z), base + z.head(2).squaredNorm(), 1e-14);
    expect_jet_consistent(DefiningFunction::siegel(3), z);
  }
}

TEST(DefiningFunction, PullbackAndScaling) {
  gen::Gen g(17);
  const DefiningFunction rho = DefiningFunction::canonical(DomainSpec::diagonal_ball({2.0, 0.5}));
  const Biholo f = compose(Biholo::affine(g.unitary(2), 0.2 * g.unit_vector(2)), cayley_data(2));
  const DefiningFunction pulled = rho.pullback(f);
  for (int i = 0; i < 4; ++i) {
    const CPoint z = cayley(g.point_in(DomainSpec::ball(2), 0.6));
    EXPECT_NEAR(pulled(z), rho(f(z)), 1e-13);
    expect_jet_consistent(pulled, z);
    EXPECT_NEAR(rho.scaled(3.0)(z), 3.0 * rho(z), 1e-13);
  }
}
