#include "nskernel/extremal.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "nskernel/errors.hpp"
#include "nskernel/metric.hpp"
#include "nskernel/special.hpp"

namespace nskernel {

std::string MinIntegralKind::name() const {
  switch (tag) {
    case MinIntegralTag::I0: return "I0";
    case MinIntegralTag::I1: return "I1";
    case MinIntegralTag::I2: return "I2";
    case MinIntegralTag::Lambda: return "LAMBDA_" + std::to_string(k);
    case MinIntegralTag::I: return "I";
    case MinIntegralTag::M: return "M";
  }
  return "?";
}

MinIntegralKind MinIntegralKind::parse(const std::string& name) {
  if (name == "I0") return i0();
  if (name == "I1") return i1();
  if (name == "I2") return i2();
  if (name == "I") return i();
  if (name == "M") return m();
  if (name.rfind("LAMBDA_", 0) == 0) {
    try {
      return lambda(std::stoi(name.substr(7)));
    } catch (const std::exception&) {
    }
  }
  throw ContractViolation("unknown minimum integral kind '" + name + "'");
}

namespace {

struct Problem {
  CMatrix phi;        // jet functionals on the orthonormal basis, m_jet x count
  CMatrix jet;        // phi phi^*
  std::vector<double> sqrt_moment;
};

Problem setup(const KernelModel& model, const CPoint& p, int top) {
  const int n = model.dimension();
  const JetLayout& l = JetLayout::get(n);
  const std::size_t count = multiindex_count(n, top);
  Problem pr;
  pr.phi.resize(l.size(), static_cast<Eigen::Index>(count));
  pr.sqrt_moment.resize(count);
  std::vector<std::vector<Complex>> pw(n, std::vector<Complex>(top + 1));
  for (int i = 0; i < n; ++i) {
    pw[i][0] = 1.0;
    for (int k = 1; k <= top; ++k) pw[i][k] = pw[i][k - 1] * p[i];
  }
  for (std::size_t k = 0; k < count; ++k) {
    const MultiIndex& a = model.indices()[k];
    const double s = std::exp(0.5 * model.log_moments()[k]);
    pr.sqrt_moment[k] = s;
    for (int r = 0; r < l.size(); ++r) {
      const MultiIndex& da = l.index(r);
      Complex v = 1.0 / s;
      for (int i = 0; i < n; ++i) {
        if (a[i] < da[i]) {
          v = 0.0;
          break;
        }
        v *= falling_factorial(a[i], da[i]) * pw[i][a[i] - da[i]];
      }
      pr.phi(r, static_cast<Eigen::Index>(k)) = v;
    }
  }
  pr.jet = pr.phi * pr.phi.adjoint();
  pr.jet = 0.5 * (pr.jet + pr.jet.adjoint()).eval();
  return pr;
}

CMatrix hermitian_inverse(const CMatrix& a, const char* what) {
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NumericalError(std::string("singular constraint Gram matrix for ") + what);
  return llt.solve(CMatrix::Identity(a.rows(), a.cols()));
}

// Makes the first non-negligible coefficient real and positive.
void fix_phase(CVector& b) {
  const double scale = b.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) > 1e-12 * scale) {
      b *= std::conj(b[i]) / std::abs(b[i]);
      return;
    }
  }
}

struct Solved {
  double value;
  CVector b;
  std::vector<double> residuals;
};

Solved solve(const KernelModel& model, const MinIntegralKind& kind, const CPoint& p, const CVector& v,
             int top) {
  const int n = model.dimension();
  const JetLayout& l = JetLayout::get(n);
  const int mj = l.size();
  const Problem pr = setup(model, p, top);

  auto row = [&](std::function<void(CVector&)> fill) {
    CVector r = CVector::Zero(mj);
    fill(r);
    return r;
  };
  std::vector<CVector> lin;
  std::vector<Complex> rhs;
  lin.push_back(row([&](CVector& r) { r[0] = 1.0; }));
  const bool quadratic = kind.tag == MinIntegralTag::I || kind.tag == MinIntegralTag::M;
  switch (kind.tag) {
    case MinIntegralTag::I0:
      rhs = {1.0};
      break;
    case MinIntegralTag::I1:
      lin.push_back(row([&](CVector& r) { for (int i = 0; i < n; ++i) r[l.unit(i)] += v[i]; }));
      rhs = {0.0, 1.0};
      break;
    case MinIntegralTag::I2:
      lin.push_back(row([&](CVector& r) { for (int i = 0; i < n; ++i) r[l.unit(i)] += v[i]; }));
      lin.push_back(row([&](CVector& r) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) r[l.pair(i, j)] += v[i] * v[j];
      }));
      rhs = {0.0, 0.0, 1.0};
      break;
    case MinIntegralTag::Lambda:
      if (kind.k < 1 || kind.k > n) throw ContractViolation("LAMBDA_k needs 1 <= k <= n");
      for (int j = 0; j < kind.k; ++j) lin.push_back(row([&](CVector& r) { r[l.unit(j)] = 1.0; }));
      rhs.assign(kind.k + 1, 0.0);
      rhs.back() = 1.0;
      break;
    case MinIntegralTag::I:
    case MinIntegralTag::M:
      for (int j = 0; j < n; ++j) lin.push_back(row([&](CVector& r) { r[l.unit(j)] = 1.0; }));
      rhs.assign(n + 1, 0.0);
      break;
  }
  CMatrix lc(static_cast<Eigen::Index>(lin.size()), mj);
  for (std::size_t i = 0; i < lin.size(); ++i) lc.row(static_cast<Eigen::Index>(i)) = lin[i].transpose();
  const CMatrix c = lc * pr.phi;
  const CMatrix gram = lc * pr.jet * lc.adjoint();
  const CMatrix gram_inv = hermitian_inverse(gram, "linear constraints");
  CVector r(static_cast<Eigen::Index>(rhs.size()));
  for (std::size_t i = 0; i < rhs.size(); ++i) r[static_cast<Eigen::Index>(i)] = rhs[i];

  Solved out;
  if (!quadratic) {
    out.b = c.adjoint() * (gram_inv * r);
    out.value = (r.adjoint() * gram_inv * r)(0, 0).real();
    out.residuals.push_back((c * out.b - r).cwiseAbs().maxCoeff());
    return out;
  }

  // w_j = sum_i v_i d_i d_j f(p)
  CMatrix lw = CMatrix::Zero(n, mj);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) lw(j, l.pair(i, j)) += v[i];
  KernelJet kj;
  kj.z = p;
  kj.values = pr.jet;
  const MetricPointData md = metric_tensor(kj, model.order());
  CMatrix q = md.G_inv;
  if (kind.tag == MinIntegralTag::M) q *= std::pow(md.K, n - 1) * md.det_G;
  q = 0.5 * (q + q.adjoint()).eval();
  Eigen::LLT<CMatrix> qllt(q);
  if (qllt.info() != Eigen::Success) throw NumericalError("normalization form is not positive definite");
  const CMatrix lq = qllt.matrixL();
  // W P W^* on the jet level, P = projection onto the null space of c.
  const CMatrix wj = lw * pr.jet;
  const CMatrix s = lw * pr.jet * lw.adjoint() - wj * lc.adjoint() * gram_inv * lc * wj.adjoint();
  CMatrix sq = lq.adjoint() * s * lq;
  sq = 0.5 * (sq + sq.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sq);
  const RVector ev = es.eigenvalues();
  const double top_ev = ev[n - 1];
  if (!(top_ev > 0.0)) throw ContractViolation("normalization constraint is infeasible at this truncation");

  auto minimizer_of = [&](const CVector& u) {
    const CVector y = lq * u;
    const CVector x = pr.phi.adjoint() * (lw.adjoint() * y);
    return CVector((x - c.adjoint() * (gram_inv * (c * x))) / top_ev);
  };
  int mult = 0;
  for (int i = n - 1; i >= 0 && ev[i] >= top_ev * (1.0 - 1e-10); --i) ++mult;
  CVector u = es.eigenvectors().col(n - 1);
  if (mult > 1) {
    // Repeated top eigenvalue: pick the unit vector of the eigenspace that
    // maximizes the leading coefficient of the minimiser.
    const CMatrix ub = es.eigenvectors().rightCols(mult);
    CMatrix tb(c.cols(), mult);
    for (int j = 0; j < mult; ++j) tb.col(j) = minimizer_of(ub.col(j));
    const double scale = tb.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < tb.rows(); ++i) {
      if (tb.row(i).norm() > 1e-12 * scale) {
        const CVector coeffs = tb.row(i).adjoint();
        u = ub * coeffs / coeffs.norm();
        break;
      }
    }
  }
  out.b = minimizer_of(u);
  fix_phase(out.b);
  out.value = 1.0 / top_ev;
  const CVector wb = lw * (pr.phi * out.b);
  const double qb = (wb.adjoint() * q * wb)(0, 0).real();
  out.residuals.push_back((c * out.b).cwiseAbs().maxCoeff());
  out.residuals.push_back(std::abs(qb - 1.0));
  return out;
}

}  // namespace

MinIntegralResult minimum_integral(const KernelModel& model, const MinIntegralKind& kind, const CPoint& p,
                                   const CVector& v) {
  const int n = model.dimension();
  model.domain().check_dimension(p);
  if (v.size() != n) throw ContractViolation("vector dimension mismatch");
  if (!model.domain().contains(p)) throw DomainError("point outside the domain");
  if (!model.is_certified_point(p)) throw DomainError("point outside the certified region of the model");
  const bool needs_v = kind.tag == MinIntegralTag::I1 || kind.tag == MinIntegralTag::I2 ||
                       kind.tag == MinIntegralTag::I || kind.tag == MinIntegralTag::M;
  if (needs_v && v.norm() == 0.0) throw ContractViolation("vector must be nonzero");
  if (model.truncation() < 2) throw ContractViolation("truncation N >= 2 is needed for jet constraints");

  const Solved s = solve(model, kind, p, v, model.truncation());
  MinIntegralResult r;
  r.kind = kind;
  r.p = p;
  r.v = v;
  r.value = s.value;
  r.residuals = s.residuals;
  r.truncation = model.truncation();
  r.minimizer.resize(s.b.size());
  for (Eigen::Index k = 0; k < s.b.size(); ++k)
    r.minimizer[k] = s.b[k] / std::exp(0.5 * model.log_moments()[static_cast<std::size_t>(k)]);
  if (model.truncation() - 2 >= 2) {
    r.value_lower = solve(model, kind, p, v, model.truncation() - 2).value;
    r.drift = std::abs(r.value - r.value_lower) / r.value;
  } else {
    r.value_lower = std::numeric_limits<double>::quiet_NaN();
    r.drift = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

namespace {

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace

IdentityReport extremal_identity_report(const KernelModel& model, const CPoint& p, const CVector& v) {
  const int n = model.dimension();
  const int d = model.order();
  IdentityReport rep;
  rep.p = p;
  rep.v = v;
  rep.truncation = model.truncation();
  auto run = [&](const MinIntegralKind& k) {
    rep.integrals.push_back(minimum_integral(model, k, p, v));
    const double drift = rep.integrals.back().drift;
    if (std::isfinite(drift)) rep.max_drift = std::max(rep.max_drift, drift);
    return rep.integrals.back().value;
  };
  const double i0 = run(MinIntegralKind::i0());
  const double i1 = run(MinIntegralKind::i1());
  const double i2 = run(MinIntegralKind::i2());
  double lambda = 1.0;
  for (int k = 1; k <= n; ++k) lambda *= run(MinIntegralKind::lambda(k));
  const double ii = run(MinIntegralKind::i());
  const double mm = run(MinIntegralKind::m());

  const MetricPointData md = metric_tensor(model, p);
  const double tau2 = vector_length(md, v) * vector_length(md, v);
  const double curv = sectional_curvature(md, v);
  const double ric = ricci_curvature(md, v);
  auto add = [&](const std::string& name, double lhs, double rhs) {
    IdentityEntry e{name, lhs, rhs, rel(lhs, rhs)};
    rep.max_residual = std::max(rep.max_residual, e.residual);
    rep.entries.push_back(e);
  };
  add("K = 1/I0", md.K, 1.0 / i0);
  add("tau^2 = I0/I1", tau2, i0 / i1);
  add("R = 2 - I1^2/(I0 I2)", curv, 2.0 - i1 * i1 / (i0 * i2));
  add("g = I0^n/lambda", md.det_G, std::pow(i0, n) / lambda);
  add("beta = I0^(n+1/(d+1))/lambda", beta_invariant(md), std::pow(i0, n + 1.0 / (d + 1.0)) / lambda);
  add("I = K^(n-1) g M", ii, std::pow(md.K, n - 1) * md.det_G * mm);
  add("Ric = (n+1) - I1 lambda/(I0 M)", ric, (n + 1.0) - i1 * lambda / (i0 * mm));
  return rep;
}

bool domain_contains(const DomainSpec& outer, const DomainSpec& inner) {
  if (outer.dimension() != inner.dimension()) return false;
  const int n = inner.dimension();
  const int res = n == 1 ? 1 : (n == 2 ? 400 : 60);
  std::vector<int> cur(n, 0);
  bool ok = true;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (!ok) return;
    if (pos == n - 1) {
      cur[pos] = left;
      RVector w(n);
      for (int i = 0; i < n; ++i) w[i] = static_cast<double>(cur[i]) / res;
      if (inner.radial_extent(w) > outer.radial_extent(w) * (1.0 + 1e-12)) ok = false;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, res);
  return ok;
}

MonotonicityReport monotonicity_check(const KernelModel& inner, const KernelModel& outer, const CPoint& p,
                                      const CVector& v) {
  if (inner.order() != outer.order()) throw ContractViolation("models must have the same order d");
  if (!domain_contains(outer.domain(), inner.domain()))
    throw ContractViolation("inner domain is not contained in the outer domain");
  const int n = inner.dimension();
  MonotonicityReport rep;
  auto check = [&](const std::string& name, double a, double b) {
    const double slack = 1e-9 * std::max(std::abs(a), std::abs(b));
    MonotonicityEntry e{name, a, b, a <= b + slack};
    rep.all_hold = rep.all_hold && e.holds;
    rep.entries.push_back(e);
  };
  std::vector<MinIntegralKind> kinds = {MinIntegralKind::i0(), MinIntegralKind::i1(), MinIntegralKind::i2()};
  for (int k = 1; k <= n; ++k) kinds.push_back(MinIntegralKind::lambda(k));
  kinds.push_back(MinIntegralKind::m());
  for (const auto& k : kinds)
    check(k.name(), minimum_integral(inner, k, p, v).value, minimum_integral(outer, k, p, v).value);
  const MetricPointData mi = metric_tensor(inner, p);
  const MetricPointData mo = metric_tensor(outer, p);
  const double ti = vector_length(mi, v), to = vector_length(mo, v);
  // K tau^2 decreases as the domain grows.
  check("K tau^2 (outer <= inner)", mo.K * to * to, mi.K * ti * ti);
  return rep;
}

}  // namespace nskernel
