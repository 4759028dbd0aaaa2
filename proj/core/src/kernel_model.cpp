#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "nskernel/errors.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/parallel.hpp"
#include "nskernel/quadrature.hpp"
#include "nskernel/special.hpp"

namespace nskernel {

KernelModel::KernelModel(DomainSpec domain, int d, int truncation, double tol,
                         std::vector<double> log_moments, ModelCertificate certificate,
                         std::shared_ptr<const KernelModel> base)
    : domain_(std::move(domain)),
      d_(d),
      truncation_(truncation),
      tol_(tol),
      log_moments_(std::move(log_moments)),
      certificate_(certificate),
      base_(std::move(base)) {
  if (d_ < 0) throw ContractViolation("order d must be >= 0");
  if (truncation_ < 0) throw ContractViolation("truncation must be >= 0");
  indices_ = enumerate_multiindices(domain_.dimension(), truncation_);
  if (indices_.size() != log_moments_.size())
    throw ContractViolation("moment table does not cover exactly the degrees <= N");
  inv_moments_.resize(log_moments_.size());
  for (std::size_t k = 0; k < log_moments_.size(); ++k) {
    if (!std::isfinite(log_moments_[k])) throw NumericalError("non-finite moment in model");
    inv_moments_[k] = std::exp(-log_moments_[k]);
    if (!std::isfinite(inv_moments_[k]) || inv_moments_[k] <= 0.0)
      throw NumericalError("moment " + indices_[k].to_string() + " is out of floating range");
  }
}

std::string KernelModel::describe() const {
  std::ostringstream os;
  os << "series " << domain_.describe() << " d=" << d_ << " N=" << truncation_;
  return os.str();
}

std::size_t KernelModel::position(const MultiIndex& alpha) const {
  if (alpha.size() != dimension() || alpha.degree() > truncation_)
    throw ContractViolation("multi-index " + alpha.to_string() + " is outside the model");
  // Graded blocks: skip lower degrees, then search the degree block.
  const std::size_t start = alpha.degree() == 0 ? 0 : multiindex_count(dimension(), alpha.degree() - 1);
  const std::size_t stop = multiindex_count(dimension(), alpha.degree());
  for (std::size_t k = start; k < stop; ++k)
    if (indices_[k] == alpha) return k;
  throw ContractViolation("multi-index not found");
}

double KernelModel::moment(const MultiIndex& alpha) const { return moment(position(alpha)); }

bool KernelModel::is_certified_point(const CPoint& z) const {
  return domain_.gauge(z) <= certificate_.cert_radius * (1.0 + 1e-12);
}

double KernelModel::shell_tail(const std::vector<double>& shells) const {
  const int n_top = truncation_;
  if (n_top < 1) return 0.0;
  const double last = shells[n_top];
  const double prev = shells[n_top - 1];
  if (last == 0.0) return 0.0;
  if (prev == 0.0) return std::numeric_limits<double>::infinity();
  const double q = last / prev;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return last * q / (1.0 - q);
}

namespace {

// powers[i][k] = x_i^k for k <= N.
template <class T>
std::vector<std::vector<T>> power_table(const std::vector<T>& x, int top) {
  std::vector<std::vector<T>> p(x.size(), std::vector<T>(top + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i][0] = T(1.0);
    for (int k = 1; k <= top; ++k) p[i][k] = p[i][k - 1] * x[i];
  }
  return p;
}

}  // namespace

KernelValue KernelModel::evaluate(const CPoint& z, const CPoint& w) const {
  const int n = dimension();
  domain_.check_dimension(z);
  domain_.check_dimension(w);
  std::vector<Complex> zw(n);
  for (int i = 0; i < n; ++i) zw[i] = z[i] * std::conj(w[i]);
  const auto pw = power_table(zw, truncation_);
  CompensatedSum<Complex> sum;
  std::vector<double> shells(truncation_ + 1, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    const MultiIndex& a = indices_[k];
    Complex term = inv_moments_[k];
    for (int i = 0; i < n; ++i) term *= pw[i][a[i]];
    sum.add(term);
    shells[a.degree()] += std::abs(term);
  }
  KernelValue v;
  v.value = sum.value();
  v.tail = shell_tail(shells);
  v.certified = std::isfinite(v.tail) && is_certified_point(z) && is_certified_point(w);
  return v;
}

double KernelModel::diagonal_from_radii(const RVector& t, double* tail) const {
  const int n = dimension();
  std::vector<double> tv(t.data(), t.data() + n);
  const auto pw = power_table(tv, truncation_);
  CompensatedSum<double> sum;
  std::vector<double> shells(truncation_ + 1, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    const MultiIndex& a = indices_[k];
    double term = inv_moments_[k];
    for (int i = 0; i < n; ++i) term *= pw[i][a[i]];
    sum.add(term);
    shells[a.degree()] += term;
  }
  if (tail) *tail = shell_tail(shells);
  return sum.value();
}

KernelJet KernelModel::jet(const CPoint& z) const {
  const int n = dimension();
  domain_.check_dimension(z);
  const JetLayout& layout = JetLayout::get(n);
  const int m = layout.size();
  std::vector<Complex> zv(z.data(), z.data() + n);
  const auto pw = power_table(zv, truncation_);
  std::vector<CompensatedSum<Complex>> sums(static_cast<std::size_t>(m) * m);
  std::vector<std::vector<double>> shells(static_cast<std::size_t>(m) * m,
                                          std::vector<double>(truncation_ + 1, 0.0));
  std::vector<Complex> f(m);
  std::vector<double> fa(m);
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    const MultiIndex& a = indices_[k];
    // f_A(alpha) = d^A z^alpha = prod ff(alpha_i, A_i) z_i^(alpha_i - A_i)
    for (int c = 0; c < m; ++c) {
      const MultiIndex& da = layout.index(c);
      Complex v = 1.0;
      for (int i = 0; i < n && v != 0.0; ++i) {
        if (a[i] < da[i]) {
          v = 0.0;
        } else {
          v *= falling_factorial(a[i], da[i]) * pw[i][a[i] - da[i]];
        }
      }
      f[c] = v;
      fa[c] = std::abs(v);
    }
    const double inv = inv_moments_[k];
    for (int r = 0; r < m; ++r) {
      if (f[r] == 0.0) continue;
      for (int c = 0; c < m; ++c) {
        if (f[c] == 0.0) continue;
        const std::size_t idx = static_cast<std::size_t>(r) * m + c;
        sums[idx].add(f[r] * std::conj(f[c]) * inv);
        shells[idx][a.degree()] += fa[r] * fa[c] * inv;
      }
    }
  }
  KernelJet jet;
  jet.z = z;
  jet.values.resize(m, m);
  const bool origin = z.cwiseAbs().maxCoeff() == 0.0;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * m + c;
      jet.values(r, c) = sums[idx].value();
      if (origin) continue;
      const double t = shell_tail(shells[idx]);
      double absum = 0.0;
      for (double s : shells[idx]) absum += s;
      jet.tail = std::max(jet.tail, t);
      if (absum > 0.0) jet.relative_tail = std::max(jet.relative_tail, t / absum);
    }
  jet.certified = std::isfinite(jet.tail) && is_certified_point(z);
  return jet;
}

KernelModel KernelModel::truncated(int n_max) const {
  if (n_max < 0 || n_max > truncation_) throw ContractViolation("truncation out of range");
  const std::size_t count = multiindex_count(dimension(), n_max);
  std::vector<double> lm(log_moments_.begin(), log_moments_.begin() + count);
  return KernelModel(domain_, d_, n_max, tol_, std::move(lm), certificate_, base_);
}

namespace {

std::vector<RVector> simplex_points(int n, int res) {
  std::vector<RVector> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      RVector w(n);
      for (int i = 0; i < n; ++i) w[i] = static_cast<double>(cur[i]) / res;
      out.push_back(w);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, res);
  return out;
}

// Degree-vector integrand over the simplex sum omega = 1: for each omega it
// returns the radial integrals J_k(omega), k = 0..N, plus (when weighted) the
// first-order weight perturbation integrals.
using RadialFn = std::function<RVector(const RVector& omega)>;

// Integrates g(omega) over the (n-1)-simplex parametrized by omega_1..omega_{n-1}.
RVector simplex_integral(int n, int dim, const std::function<RVector(const RVector&)>& g,
                         const AdaptiveOptions& opt, const std::string& what) {
  auto check = [&](const AdaptiveResult& r) {
    if (!r.converged) {
      std::ostringstream os;
      os.precision(17);
      os << what << ": quadrature did not converge; worst cell [" << r.worst_a << ", " << r.worst_b
         << "] error " << r.worst_error;
      throw NumericalError(os.str());
    }
  };
  if (n == 1) return g(RVector::Ones(1));
  if (n == 2) {
    auto f = [&](double u) {
      RVector w(2);
      w << u, 1.0 - u;
      return g(w);
    };
    const AdaptiveResult r = integrate_adaptive(f, 0.0, 1.0, dim, opt);
    check(r);
    return r.value;
  }
  if (n == 3) {
    AdaptiveOptions inner = opt;
    inner.threads = 1;
    auto outer = [&](double u) {
      auto f = [&](double v) {
        RVector w(3);
        w << u, (1.0 - u) * v, (1.0 - u) * (1.0 - v);
        return RVector(g(w) * (1.0 - u));
      };
      const AdaptiveResult r = integrate_adaptive(f, 0.0, 1.0, dim, inner);
      check(r);
      return r.value;
    };
    const AdaptiveResult r = integrate_adaptive(outer, 0.0, 1.0, dim, opt);
    check(r);
    return r.value;
  }
  throw Unsupported("quadrature moments are implemented for n <= 3");
}

std::vector<double> quadrature_log_moments(const DomainSpec& domain, int d, int truncation,
                                           const std::vector<MultiIndex>& indices,
                                           const std::shared_ptr<const KernelModel>& base,
                                           const BuildOptions& options, double* weight_error) {
  const int n = domain.dimension();
  const std::size_t count = indices.size();
  AdaptiveOptions opt;
  opt.points = options.quadrature_points;
  opt.rel_tol = options.tol;
  opt.max_depth = options.max_depth;
  opt.threads = options.threads <= 0 ? default_threads() : options.threads;
  // Radial integrals: J_k = int_0^Lambda lambda^(k+n-1) K0(lambda omega)^(-d) dlambda,
  // and P_k the same with an extra d * (tail/K0) factor.
  auto radial = [&](const RVector& omega) -> RVector {
    const double lam = domain.radial_extent(omega);
    RVector j(2 * (truncation + 1));
    j.setZero();
    if (d == 0) {
      for (int k = 0; k <= truncation; ++k) j[k] = std::pow(lam, k + n) / (k + n);
      return j;
    }
    AdaptiveOptions ro = opt;
    ro.threads = 1;
    auto f = [&](double l) {
      RVector v(2 * (truncation + 1));
      double tail = 0.0;
      const double k0 = base->diagonal_from_radii(l * omega, &tail);
      const double wgt = std::pow(k0, -d);
      const double rel = std::min(1.0, std::isfinite(tail) ? tail / k0 : 1.0);
      double lp = std::pow(l, n - 1);
      for (int k = 0; k <= truncation; ++k) {
        v[k] = lp * wgt;
        v[truncation + 1 + k] = lp * wgt * d * rel;
        lp *= l;
      }
      return v;
    };
    const AdaptiveResult r = integrate_adaptive(f, 0.0, lam, 2 * (truncation + 1), ro);
    if (!r.converged) {
      std::ostringstream os;
      os.precision(17);
      os << "radial weight integral did not converge; worst cell [" << r.worst_a << ", " << r.worst_b
         << "] error " << r.worst_error;
      throw NumericalError(os.str());
    }
    return r.value;
  };
  const int dim = static_cast<int>(2 * count);
  auto g = [&](const RVector& omega) -> RVector {
    const RVector j = radial(omega);
    RVector v(dim);
    for (std::size_t k = 0; k < count; ++k) {
      double mono = 1.0;
      for (int i = 0; i < n; ++i) mono *= std::pow(omega[i], indices[k][i]);
      v[k] = mono * j[indices[k].degree()];
      v[count + k] = mono * j[truncation + 1 + indices[k].degree()];
    }
    return v;
  };
  const RVector total = simplex_integral(n, dim, g, opt, "moment integral");
  std::vector<double> lm(count);
  double werr = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    if (!(total[k] > 0.0))
      throw NumericalError("non-positive moment for " + indices[k].to_string());
    lm[k] = n * std::log(kPi) + std::log(total[k]);
    werr = std::max(werr, total[count + k] / total[k]);
  }
  if (weight_error) *weight_error = werr;
  return lm;
}

}  // namespace

KernelModel build_model(const DomainSpec& domain, int d, int truncation, const BuildOptions& options) {
  const int n = domain.dimension();
  if (d < 0) throw ContractViolation("order d must be >= 0");
  if (truncation < 0) throw ContractViolation("truncation must be >= 0");
  if (!options.allow_large && (n > 3 || truncation > 60))
    throw ContractViolation("model size beyond the n <= 3, N <= 60 guardrail");
  if (!(options.cert_radius > 0.0 && options.cert_radius < 1.0))
    throw ContractViolation("certification radius must lie in (0, 1)");
  const std::vector<MultiIndex> indices = enumerate_multiindices(n, truncation);
  std::vector<double> lm(indices.size());
  std::shared_ptr<const KernelModel> base;
  double weight_error = 0.0;
  switch (domain.type()) {
    case DomainType::Ball:
      for (std::size_t k = 0; k < indices.size(); ++k) lm[k] = log_ball_moment(n, d, indices[k]);
      break;
    case DomainType::DiagonalBall:
      for (std::size_t k = 0; k < indices.size(); ++k) {
        double s = log_ball_moment(n, d, indices[k]);
        for (int i = 0; i < n; ++i) s -= (indices[k][i] + 1.0 + d) * std::log(domain.scales()[i]);
        lm[k] = s;
      }
      break;
    case DomainType::Polydisc:
      for (std::size_t k = 0; k < indices.size(); ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += log_ball_moment(1, d, MultiIndex{indices[k][i]});
        lm[k] = s;
      }
      break;
    case DomainType::SmoothReinhardt:
      if (d > 0) {
        base = options.base_model;
        if (base) {
          if (!(base->domain() == domain) || base->order() != 0 || base->truncation() < truncation)
            throw ContractViolation("base model must be an order-0 model of the same domain with N' >= N");
        } else {
          BuildOptions bo = options;
          bo.base_model = nullptr;
          bo.allow_large = true;
          base = std::make_shared<const KernelModel>(
              build_model(domain, 0, truncation + options.base_extra, bo));
        }
      }
      lm = quadrature_log_moments(domain, d, truncation, indices, base, options, &weight_error);
      break;
  }
  ModelCertificate cert;
  cert.cert_radius = options.cert_radius;
  cert.weight_error = weight_error;
  KernelModel model(domain, d, truncation, options.tol, lm, cert, base);
  // Certificate: sup of the shell-ratio tail over the gauge sphere. Diagonal
  // terms depend on t_i = |z_i|^2 only, so sampling nonnegative radii suffices.
  const int res = n == 1 ? 1 : std::max(2, options.tail_samples / (n - 1));
  const double r2 = options.cert_radius * options.cert_radius;
  for (const RVector& omega : simplex_points(n, res)) {
    const double lam = domain.radial_extent(omega);
    double tail = 0.0;
    const double k = model.diagonal_from_radii(r2 * lam * omega, &tail);
    cert.tail_bound = std::max(cert.tail_bound, tail);
    cert.tail_bound_relative = std::max(cert.tail_bound_relative, tail / k);
    ++cert.samples;
  }
  cert.tail_bound_relative += weight_error;
  return KernelModel(domain, d, truncation, options.tol, std::move(lm), cert, base);
}

}  // namespace nskernel
