#include "nskernel/metric.hpp"

#include <cmath>
#include <sstream>

#include "nskernel/errors.hpp"
#include "nskernel/quadrature.hpp"

namespace nskernel {

MetricPointData metric_tensor(const KernelJet& jet, int order) {
  const int n = jet.dimension();
  const JetLayout& l = jet.layout();
  const TaylorJet t = TaylorJet::from_derivatives(jet);
  if (!(t.coeffs()(0, 0).real() > 0.0)) throw NumericalError("kernel is not positive at the point");
  const CMatrix d = t.log().derivatives();

  MetricPointData m;
  m.z = jet.z;
  m.order = order;
  m.K = jet.values(0, 0).real();
  m.log_jet = d;
  m.relative_tail = jet.relative_tail;
  m.certified = jet.certified;
  m.G.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.G(a, b) = d(l.unit(a), l.unit(b));
  // Exact Hermitian symmetrization removes round-off asymmetry only.
  m.G = 0.5 * (m.G + m.G.adjoint()).eval();

  Eigen::LLT<CMatrix> llt(m.G);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m.G);
    std::ostringstream os;
    os.precision(17);
    os << "metric tensor is not positive definite; smallest eigenvalue " << es.eigenvalues()[0];
    throw NumericalError(os.str());
  }
  const CMatrix lm = llt.matrixL();
  double det = 1.0;
  for (int i = 0; i < n; ++i) det *= std::norm(lm(i, i));
  m.det_G = det;
  m.G_inv = llt.solve(CMatrix::Identity(n, n));

  m.first_derivs.assign(n, CMatrix(n, n));
  m.second_mixed.assign(n, std::vector<CMatrix>(n, CMatrix(n, n)));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      for (int mu = 0; mu < n; ++mu) m.first_derivs[c](b, mu) = d(l.pair(c, b), l.unit(mu));
      for (int e = 0; e < n; ++e)
        for (int a = 0; a < n; ++a) m.second_mixed[c][e](b, a) = d(l.pair(c, b), l.pair(e, a));
    }
  return m;
}

MetricPointData metric_tensor(const Kernel& kernel, const CPoint& z) {
  return metric_tensor(kernel.jet(z), kernel.order());
}

double beta_invariant(const MetricPointData& m) {
  return m.det_G * std::pow(m.K, -1.0 / (m.order + 1.0));
}

double beta_invariant(const Kernel& kernel, const CPoint& z) {
  return beta_invariant(metric_tensor(kernel, z));
}

namespace {

double quadratic(const CMatrix& g, const CVector& v) {
  const Complex q = v.transpose() * g * v.conjugate();
  return q.real();
}

void require_nonzero(const CVector& v) {
  if (v.norm() == 0.0) throw ContractViolation("vector must be nonzero");
}

}  // namespace

double vector_length(const MetricPointData& m, const CVector& v) {
  if (v.size() != m.dimension()) throw ContractViolation("vector dimension mismatch");
  return std::sqrt(std::max(0.0, quadratic(m.G, v)));
}

double vector_length(const Kernel& kernel, const CPoint& z, const CVector& v) {
  return vector_length(metric_tensor(kernel, z), v);
}

double sectional_curvature(const MetricPointData& m, const CVector& v) {
  require_nonzero(v);
  const int n = m.dimension();
  const JetLayout& l = JetLayout::get(n);
  const CMatrix& d = m.log_jet;
  // R_{abar b c dbar} = -L(b+c, a+d) + sum_{mu,nu} (G^-1)(mu,nu) L(b+c, mu) L(nu, a+d)
  Complex num = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          const int bc = l.pair(b, c);
          const int ae = l.pair(a, e);
          Complex r = -d(bc, ae);
          for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
              r += m.G_inv(mu, nu) * d(bc, l.unit(mu)) * d(l.unit(nu), ae);
          num += r * std::conj(v[a]) * v[b] * v[c] * std::conj(v[e]);
        }
  const double g = quadratic(m.G, v);
  return num.real() / (g * g);
}

double sectional_curvature(const Kernel& kernel, const CPoint& z, const CVector& v) {
  return sectional_curvature(metric_tensor(kernel, z), v);
}

CMatrix ricci_tensor(const MetricPointData& m) {
  const int n = m.dimension();
  // -d_c dbar_e log det G = -tr(G^-1 d_c dbar_e G) + tr(G^-1 dbar_e G G^-1 d_c G)
  CMatrix ric(n, n);
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < n; ++e) {
      // (dbar_e G)(b, a) = d g_{b abar}/dzbar_e = conj(d g_{a bbar}/dz_e)
      const CMatrix dbar_e = m.first_derivs[e].adjoint();
      const Complex t1 = (m.G_inv * m.second_mixed[c][e]).trace();
      const Complex t2 = (m.G_inv * dbar_e * m.G_inv * m.first_derivs[c]).trace();
      ric(c, e) = -t1 + t2;
    }
  return ric;
}

double ricci_curvature(const MetricPointData& m, const CVector& v) {
  require_nonzero(v);
  return quadratic(ricci_tensor(m), v) / quadratic(m.G, v);
}

double ricci_curvature(const Kernel& kernel, const CPoint& z, const CVector& v) {
  return ricci_curvature(metric_tensor(kernel, z), v);
}

double path_length(const Kernel& kernel, const std::vector<CPoint>& nodes, double rel_tol) {
  if (nodes.size() < 2) return 0.0;
  for (const CPoint& p : nodes) {
    const KernelValue kv = kernel.evaluate(p, p);
    if (!kv.certified) throw DomainError("curve node outside the certified region");
  }
  AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  opt.points = 20;
  double total = 0.0;
  for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
    const CPoint a = nodes[s];
    const CVector v = nodes[s + 1] - nodes[s];
    if (v.norm() == 0.0) continue;
    total += integrate([&](double t) { return vector_length(kernel, CPoint(a + t * v), v); }, 0.0, 1.0,
                       opt);
  }
  return total;
}

}  // namespace nskernel
