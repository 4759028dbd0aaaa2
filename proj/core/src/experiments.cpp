#include "nskernel/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "nskernel/boundary.hpp"
#include "nskernel/defining_function.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/geometry.hpp"
#include "nskernel/metric.hpp"
#include "nskernel/multiindex.hpp"
#include "nskernel/parallel.hpp"

namespace nskernel {

std::shared_ptr<const Kernel> make_kernel(const DomainSpec& domain, int d, int truncation,
                                          const BuildOptions& options) {
  if (domain.type() == DomainType::SmoothReinhardt)
    return std::make_shared<KernelModel>(build_model(domain, d, truncation, options));
  return std::make_shared<ClosedKernel>(ClosedKernel::for_domain(domain, d));
}

RichardsonResult richardson_limit(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  if (m == 0 || ys.size() != m) throw ContractViolation("extrapolation needs matching nonempty samples");
  auto neville = [&](std::size_t first) {
    std::vector<double> p(ys.begin() + first, ys.end());
    const std::size_t k = p.size();
    for (std::size_t level = 1; level < k; ++level)
      for (std::size_t i = 0; i + level < k; ++i) {
        const double xi = xs[first + i];
        const double xj = xs[first + i + level];
        p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
      }
    return p[0];
  };
  RichardsonResult r;
  r.value = neville(0);
  r.error = m > 1 ? std::abs(r.value - neville(1)) : std::numeric_limits<double>::infinity();
  return r;
}

char asymptotic_tag(int index) { return static_cast<char>('a' + index); }

bool extrapolates_in_sqrt_delta(int index) { return index == 3 || index == 4; }

bool AsymptoticsResult::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const TagVerdict& v) { return v.pass; });
}

std::array<double, kAsymptoticTags> asymptotic_targets(int n, int d, double v_normal, double levi) {
  const double c = ball_constant(n, d);
  const double m = (d + 1.0) * (n + 1.0);
  const double log_nfact = std::lgamma(n + 1.0);
  const double base = std::exp(log_nfact - (n + 1.0) * std::log(2.0) - n * std::log(kPi));
  const double dn1 = std::pow((d + 1.0) * (n + 1.0), n);
  return {c * std::pow(base, d + 1.0),
          dn1 / std::pow(2.0, n + 1.0),
          dn1 * std::pow(c, -1.0 / (d + 1.0)) * std::exp(n * std::log(kPi) - log_nfact),
          0.5 * std::sqrt(m) * v_normal,
          std::sqrt(0.5 * m * levi),
          -2.0 / m,
          -1.0 / (d + 1.0)};
}

AsymptoticsResult asymptotics_sweep(const DomainSpec& domain, const Kernel& kernel, const CPoint& p0,
                                    const CVector& v, std::vector<double> deltas,
                                    const AsymptoticsOptions& options) {
  const int n = domain.dimension();
  domain.check_dimension(p0);
  domain.check_dimension(v);
  if (kernel.dimension() != n) throw ContractViolation("kernel and domain dimensions differ");
  if (v.norm() == 0.0) throw ContractViolation("direction vector is zero");
  if (options.trailing < 2) throw ContractViolation("extrapolation needs at least two rows");
  for (double x : deltas)
    if (!(x > 0.0)) throw ContractViolation("deltas must be positive");
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

  // Throws unless the Levi form is positive definite at p0.
  const PinchukMap local = pinchuk_normalize(domain, p0);

  AsymptoticsResult out;
  out.n = n;
  out.d = kernel.order();
  out.p0 = p0;
  out.v = v;
  const RhoJet jet0 = DefiningFunction::canonical(domain).jet(p0);
  const double g0 = jet0.dz.norm();
  const CVector nu = jet0.dz.conjugate() / g0;
  out.v_normal = hermitian_dot(v, nu) * nu;
  out.v_tangential = v - out.v_normal;
  out.levi = out.v_tangential.norm() > 0.0 ? levi_form(domain, p0, out.v_tangential) / g0 : 0.0;
  out.defining_function = "(" + DefiningFunction::canonical(domain).label() + ") / |d rho(p0)|";

  const int d = out.d;
  std::vector<AsymptoticsRow> rows(deltas.size());
  parallel_for(
      deltas.size(),
      [&](std::size_t i) {
        AsymptoticsRow& r = rows[i];
        r.delta_request = deltas[i];
        r.p = p0 - deltas[i] * nu;
        const BoundaryFrame bf = boundary_frame(domain, r.p);
        r.delta = bf.delta;
        const CVector vh = bf.of_vector(v).first;
        try {
          const MetricPointData m = metric_tensor(kernel, r.p);
          r.relative_tail = m.relative_tail;
          r.certified = m.certified;
          const double dl = r.delta;
          // K and det G transform with |det h'|; the other quantities are invariant.
          const double jac = std::abs(local.h.det_jacobian(r.p));
          r.qty = {std::pow(dl, (d + 1.0) * (n + 1.0)) * m.K * std::pow(jac, -2.0 * (d + 1.0)),
                   std::pow(dl, n + 1.0) * m.det_G * std::pow(jac, -2.0),
                   beta_invariant(m),
                   dl * vector_length(m, v),
                   vh.norm() > 0.0 ? std::sqrt(dl) * vector_length(m, vh) : 0.0,
                   sectional_curvature(m, v),
                   ricci_curvature(m, v)};
        } catch (const NumericalError&) {
          r.certified = false;
          r.relative_tail = std::numeric_limits<double>::infinity();
        }
      },
      options.threads);

  std::vector<AsymptoticsRow> window;
  for (const AsymptoticsRow& r : rows) {
    const bool ok = r.certified && r.relative_tail <= options.max_relative_tail &&
                    std::all_of(r.qty.begin(), r.qty.end(), [](double q) { return std::isfinite(q); });
    (ok ? window : out.dropped).push_back(r);
  }
  out.rows = rows;
  if (static_cast<int>(window.size()) < options.trailing)
    throw DomainError("certified delta window has " + std::to_string(window.size()) + " rows, need " +
                      std::to_string(options.trailing));
  out.window_max = window.front().delta;
  out.window_min = window.back().delta;

  const auto targets = asymptotic_targets(n, d, out.v_normal.norm(), out.levi);
  const std::size_t first = window.size() - static_cast<std::size_t>(options.trailing);
  for (int t = 0; t < kAsymptoticTags; ++t) {
    std::vector<double> xs, ys;
    for (std::size_t i = first; i < window.size(); ++i) {
      xs.push_back(extrapolates_in_sqrt_delta(t) ? std::sqrt(window[i].delta) : window[i].delta);
      ys.push_back(window[i].qty[t]);
    }
    const RichardsonResult rr = richardson_limit(xs, ys);
    TagVerdict& tv = out.verdicts[t];
    tv.tag = asymptotic_tag(t);
    tv.limit = rr.value;
    tv.limit_error = rr.error;
    tv.target = targets[t];
    tv.relative_error =
        targets[t] != 0.0 ? std::abs(rr.value - targets[t]) / std::abs(targets[t]) : std::abs(rr.value);
    tv.pass = tv.relative_error <= options.tolerance;
    tv.variable = extrapolates_in_sqrt_delta(t) ? "sqrt(delta)" : "delta";
  }
  return out;
}

std::vector<CPoint> compact_grid(int n, double radius, int steps) {
  if (n < 1 || steps < 1 || !(radius > 0.0)) throw ContractViolation("invalid grid specification");
  const int side = 2 * steps + 1;
  std::vector<int> idx(2 * n, 0);
  std::vector<CPoint> pts;
  while (true) {
    CPoint z(n);
    for (int i = 0; i < n; ++i)
      z[i] = Complex((idx[2 * i] - steps) * radius / steps, (idx[2 * i + 1] - steps) * radius / steps);
    if (z.norm() <= radius * (1.0 + 1e-12)) pts.push_back(z);
    int k = 0;
    while (k < 2 * n && ++idx[k] == side) idx[k++] = 0;
    if (k == 2 * n) break;
  }
  return pts;
}

namespace {

void simplex_points(int n, int res, std::vector<int>& cur, int left, std::vector<RVector>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == n - 1) {
    RVector w(n);
    for (int k = 0; k < n - 1; ++k) w[k] = static_cast<double>(cur[k]) / res;
    w[n - 1] = static_cast<double>(left) / res;
    out.push_back(w);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur.push_back(k);
    simplex_points(n, res, cur, left - k, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CPoint> boundary_samples(const DomainSpec& domain, int count) {
  const int n = domain.dimension();
  int res = 1;
  if (n > 1)
    while (multiindex_count(n - 1, res + 1) <= static_cast<std::size_t>(count)) ++res;
  std::vector<RVector> omegas;
  std::vector<int> cur;
  simplex_points(n, res, cur, res, omegas);
  std::vector<CPoint> pts;
  pts.reserve(omegas.size());
  for (const RVector& w : omegas) {
    const double lam = domain.radial_extent(w);
    CPoint z(n);
    for (int i = 0; i < n; ++i) z[i] = std::sqrt(lam * w[i]);
    pts.push_back(z);
  }
  return pts;
}

std::vector<DomainSpec> disc_family(int j_max) {
  std::vector<DomainSpec> out;
  for (int j = 1; j <= j_max; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -j);
    out.push_back(DomainSpec::diagonal_ball({1.0 / (r * r)}));
  }
  return out;
}

RamadanovResult ramadanov_run(const std::vector<DomainSpec>& family, const DomainSpec& limit, int d,
                              const std::vector<CPoint>& grid, const RamadanovOptions& options) {
  if (family.empty() || grid.empty()) throw ContractViolation("empty family or grid");
  for (const DomainSpec& D : family)
    if (D.dimension() != limit.dimension()) throw ContractViolation("family dimension differs from limit");
  for (const CPoint& z : grid)
    if (!limit.contains(z)) throw DomainError("grid point outside the limit domain");

  const auto k_limit = make_kernel(limit, d, options.truncation, options.build);
  std::vector<double> base(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { base[i] = k_limit->evaluate(grid[i], grid[i]).value.real(); },
               options.threads);

  RamadanovResult out;
  out.d = d;
  for (std::size_t j = 0; j < family.size(); ++j) {
    const DomainSpec& D = family[j];
    RamadanovRow row;
    row.j = static_cast<int>(j) + 1;
    row.domain = D.describe();
    row.contains_grid = std::all_of(grid.begin(), grid.end(), [&](const CPoint& z) { return D.contains(z); });
    double eps = 0.0;
    for (const CPoint& q : boundary_samples(D, options.boundary_samples))
      eps = std::max(eps, limit.gauge(q) - 1.0);
    row.epsilon = eps;
    row.sup_diff = std::numeric_limits<double>::quiet_NaN();
    if (row.contains_grid) {
      const auto k_j = make_kernel(D, d, options.truncation, options.build);
      std::vector<double> diff(grid.size());
      parallel_for(
          grid.size(),
          [&](std::size_t i) { diff[i] = std::abs(k_j->evaluate(grid[i], grid[i]).value.real() - base[i]); },
          options.threads);
      row.sup_diff = *std::max_element(diff.begin(), diff.end());
    }
    if (out.first_valid < 0 && row.contains_grid && row.epsilon < options.epsilon_gate)
      out.first_valid = static_cast<int>(j);
    out.rows.push_back(row);
  }
  if (out.first_valid < 0 || !out.rows.back().contains_grid)
    throw DomainError("family does not satisfy the containment hypotheses on the grid");
  out.monotone = true;
  for (std::size_t j = static_cast<std::size_t>(out.first_valid) + 1; j < out.rows.size(); ++j)
    if (!(out.rows[j].sup_diff <= out.rows[j - 1].sup_diff)) out.monotone = false;
  out.final_sup = out.rows.back().sup_diff;
  return out;
}

CompletenessResult completeness_probe(const Kernel& kernel, const CPoint& p0, std::vector<double> s_values,
                                      double rel_tol) {
  if (s_values.empty()) throw ContractViolation("no s values");
  for (double s : s_values)
    if (!(s >= 0.0 && s < 1.0)) throw ContractViolation("s values must lie in [0, 1)");
  std::sort(s_values.begin(), s_values.end());
  s_values.erase(std::unique(s_values.begin(), s_values.end()), s_values.end());
  CompletenessResult out;
  out.p0 = p0;
  out.rows.resize(s_values.size());
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    CompletenessRow& r = out.rows[i];
    r.s = s_values[i];
    r.log_scale = -std::log1p(-r.s);
    r.length = r.s == 0.0 ? 0.0 : path_length(kernel, {CPoint::Zero(p0.size()), CPoint(r.s * p0)}, rel_tol);
  }
  double num = 0.0, den = 0.0;
  out.c_min = std::numeric_limits<double>::infinity();
  out.increasing = true;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const CompletenessRow& r = out.rows[i];
    num += r.length * r.log_scale;
    den += r.log_scale * r.log_scale;
    if (r.s > 0.0) out.c_min = std::min(out.c_min, r.length / r.log_scale);
    if (i > 0 && !(r.length > out.rows[i - 1].length)) out.increasing = false;
  }
  out.fitted_c = den > 0.0 ? num / den : 0.0;
  if (!std::isfinite(out.c_min)) out.c_min = 0.0;
  out.dominates = out.c_min > 0.0;
  return out;
}

}  // namespace nskernel
