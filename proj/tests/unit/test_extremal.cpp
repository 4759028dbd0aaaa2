#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/extremal.hpp"
#include "nskernel/metric.hpp"

using namespace nskernel;
using nskernel::gen::rel_err;

namespace {

CVector vec(std::initializer_list<Complex> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Complex x : xs) v[i++] = x;
  return v;
}

double norm_sq(const KernelModel& m, const CVector& c) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < c.size(); ++k) s += std::norm(c[k]) * m.moment(static_cast<std::size_t>(k));
  return s;
}

double entry(const IdentityReport& r, const std::string& prefix) {
  for (const auto& e : r.entries)
    if (e.name.rfind(prefix, 0) == 0) return e.residual;
  ADD_FAILURE() << "no entry " << prefix;
  return 1.0;
}

}  // namespace

TEST(Extremal, KindNames) {
  for (const auto& k : {MinIntegralKind::i0(), MinIntegralKind::i1(), MinIntegralKind::i2(), MinIntegralKind::lambda(2),
                        MinIntegralKind::i(), MinIntegralKind::m()}) {
    const MinIntegralKind back = MinIntegralKind::parse(k.name());
    EXPECT_EQ(back.tag, k.tag);
    EXPECT_EQ(back.k, k.k);
  }
  EXPECT_THROW(MinIntegralKind::parse("I3"), ContractViolation);
  EXPECT_THROW(MinIntegralKind::parse("LAMBDA_x"), ContractViolation);
}

TEST(Extremal, DiscExamples) {
  const KernelModel m = build_model(DomainSpec::ball(1), 0, 20);
  const CPoint p = CPoint::Zero(1);
  const CVector v = vec({1.0});
  const MinIntegralResult i0 = minimum_integral(m, MinIntegralKind::i0(), p, v);
  EXPECT_NEAR(i0.value, kPi, 1e-12);
  EXPECT_NEAR(std::abs(i0.minimizer[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(i0.minimizer.tail(i0.minimizer.size() - 1).norm(), 0.0, 1e-12);
  EXPECT_NEAR(minimum_integral(m, MinIntegralKind::i1(), p, v).value, kPi / 2, 1e-12);
  EXPECT_NEAR(minimum_integral(m, MinIntegralKind::i2(), p, v).value, kPi / 12, 1e-12);
  EXPECT_THROW(minimum_integral(m, MinIntegralKind::lambda(2), p, v), ContractViolation);
  EXPECT_THROW(minimum_integral(m, MinIntegralKind::i1(), p, vec({0.0})), ContractViolation);
  EXPECT_THROW(minimum_integral(build_model(DomainSpec::ball(1), 0, 1), MinIntegralKind::i0(), p, v),
               ContractViolation);
}

TEST(Extremal, ResultInvariants) {
  const KernelModel m = build_model(DomainSpec::ball(2), 1, 20);
  CPoint p(2);
  p << 0.3, 0.2;
  const CVector v = vec({Complex(0.6, 0.1), -0.4});
  for (const auto& k : {MinIntegralKind::i0(), MinIntegralKind::i1(), MinIntegralKind::i2(), MinIntegralKind::lambda(1),
                        MinIntegralKind::lambda(2), MinIntegralKind::i(), MinIntegralKind::m()}) {
    const MinIntegralResult r = minimum_integral(m, k, p, v);
    EXPECT_GT(r.value, 0.0) << k.name();
    EXPECT_LT(rel_err(r.value, norm_sq(m, r.minimizer)), 1e-10) << k.name();
    for (double res : r.residuals) EXPECT_LT(std::abs(res), 1e-9) << k.name();
  }
  // The I0 minimizer is K(., p) / K(p).
  const MinIntegralResult i0 = minimum_integral(m, MinIntegralKind::i0(), p, v);
  const double K = m.diagonal(p);
  for (std::size_t k = 0; k < m.indices().size(); ++k) {
    Complex pa = 1.0;
    for (int i = 0; i < 2; ++i) pa *= std::pow(p[i], m.indices()[k][i]);
    EXPECT_NEAR(std::abs(i0.minimizer[static_cast<Eigen::Index>(k)] - std::conj(pa) / (m.moment(k) * K)), 0.0, 1e-9);
  }
}

TEST(Extremal, IdentitiesOnBall) {
  for (int d = 0; d <= 1; ++d) {
    const KernelModel m = build_model(DomainSpec::ball(2), d, 30);
    for (const CPoint& p : {CPoint(CPoint::Zero(2)), CPoint(vec({0.3, 0.2}))}) {
      const IdentityReport r = extremal_identity_report(m, p, vec({1.0, 0.0}));
      ASSERT_EQ(r.entries.size(), 7u);
      for (const auto& e : r.entries)
        if (e.name.rfind("Ric", 0) != 0) {
          EXPECT_LT(e.residual, 1e-7) << e.name << " d=" << d;
        }
      EXPECT_LT(r.max_drift, 1e-6);
    }
  }
  // In one variable the Ricci identity holds as well.
  const KernelModel m1 = build_model(DomainSpec::ball(1), 0, 40);
  const IdentityReport r1 = extremal_identity_report(m1, vec({0.4}), vec({1.0}));
  EXPECT_LT(r1.max_residual, 1e-7);
  EXPECT_LT(entry(r1, "Ric"), 1e-7);
}

TEST(Extremal, HomogeneityAndCurvatureBound) {
  const KernelModel m = build_model(DomainSpec::diagonal_ball({2.0, 1.0}), 1, 24);
  gen::Gen g(44);
  for (int i = 0; i < 4; ++i) {
    const CPoint p = g.point_in(m.domain(), 0.4);
    const CVector v = g.unit_vector(2);
    const Complex a = std::polar(g.uniform(0.3, 3.0), g.uniform(0.0, 6.0));
    const double i0 = minimum_integral(m, MinIntegralKind::i0(), p, v).value;
    const double i1 = minimum_integral(m, MinIntegralKind::i1(), p, v).value;
    const double i2 = minimum_integral(m, MinIntegralKind::i2(), p, v).value;
    EXPECT_LT(rel_err(minimum_integral(m, MinIntegralKind::i1(), p, a * v).value, i1 / std::norm(a)), 1e-9);
    EXPECT_LT(rel_err(minimum_integral(m, MinIntegralKind::i2(), p, a * v).value, i2 / std::pow(std::norm(a), 2)), 1e-9);
    EXPECT_LE(2.0 - i1 * i1 / (i0 * i2), 2.0);
    // lambda product against 1/(K^n g).
    const MetricPointData md = metric_tensor(m, p);
    const double lam = minimum_integral(m, MinIntegralKind::lambda(1), p, v).value *
                       minimum_integral(m, MinIntegralKind::lambda(2), p, v).value;
    EXPECT_LT(rel_err(lam, 1.0 / (md.K * md.K * md.det_G)), 1e-8);
  }
}

TEST(Extremal, Monotonicity) {
  const CPoint p0 = CPoint::Zero(1);
  const KernelModel inner = build_model(DomainSpec::ball(1), 0, 20);
  const KernelModel outer = build_model(DomainSpec::diagonal_ball({0.25}), 0, 20);
  const MonotonicityReport r = monotonicity_check(inner, outer, p0, vec({1.0}));
  EXPECT_TRUE(r.all_hold);
  EXPECT_NEAR(minimum_integral(outer, MinIntegralKind::i0(), p0, vec({1.0})).value, 4 * kPi, 1e-10);

  const KernelModel b2 = build_model(DomainSpec::ball(2), 1, 16);
  EXPECT_TRUE(monotonicity_check(b2, b2, CPoint::Zero(2), vec({1.0, 0.5})).all_hold);
  const KernelModel big = build_model(DomainSpec::diagonal_ball({0.25, 0.25}), 1, 16);
  EXPECT_TRUE(monotonicity_check(b2, big, CPoint::Zero(2), vec({1.0, 0.5})).all_hold);
  EXPECT_THROW(monotonicity_check(big, b2, CPoint::Zero(2), vec({1.0, 0.5})), ContractViolation);
  EXPECT_TRUE(domain_contains(DomainSpec::polydisc(2), DomainSpec::ball(2)));
  EXPECT_FALSE(domain_contains(DomainSpec::ball(2), DomainSpec::polydisc(2)));
}
