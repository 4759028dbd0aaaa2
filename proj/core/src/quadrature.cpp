#include "nskernel/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "nskernel/errors.hpp"
#include "nskernel/parallel.hpp"

namespace nskernel {

namespace {

GaussRule make_rule(int q) {
  GaussRule r;
  r.nodes.resize(q);
  r.weights.resize(q);
  for (int i = 0; i < (q + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (q == 1) { p1 = x; p0 = 1.0; }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[q - 1 - i] = x;
    r.weights[i] = r.weights[q - 1 - i] = w;
  }
  return r;
}

struct Cell {
  double a, b;
  int depth;
  RVector whole;
  RVector halves;
  RVector err;
};

}  // namespace

const GaussRule& gauss_legendre(int q) {
  if (q < 1) throw ContractViolation("Gauss-Legendre order must be >= 1");
  static std::mutex m;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, make_rule(q)).first;
  return it->second;
}

AdaptiveResult integrate_adaptive(const VectorIntegrand& f, double a, double b, int dim,
                                  const AdaptiveOptions& options) {
  const GaussRule& rule = gauss_legendre(options.points);
  const int q = options.points;

  auto evaluate_cell = [&](double ca, double cb, int depth) {
    const double mid = 0.5 * (ca + cb);
    std::vector<double> xs(3 * q);
    for (int i = 0; i < q; ++i) {
      xs[i] = 0.5 * (ca + cb) + 0.5 * (cb - ca) * rule.nodes[i];
      xs[q + i] = 0.5 * (ca + mid) + 0.5 * (mid - ca) * rule.nodes[i];
      xs[2 * q + i] = 0.5 * (mid + cb) + 0.5 * (cb - mid) * rule.nodes[i];
    }
    std::vector<RVector> ys(3 * q);
    parallel_for(xs.size(), [&](std::size_t i) { ys[i] = f(xs[i]); }, options.threads);
    Cell c{ca, cb, depth, RVector::Zero(dim), RVector::Zero(dim), RVector::Zero(dim)};
    for (int i = 0; i < q; ++i) {
      c.whole += (0.5 * (cb - ca) * rule.weights[i]) * ys[i];
      c.halves += (0.5 * (mid - ca) * rule.weights[i]) * ys[q + i];
      c.halves += (0.5 * (cb - mid) * rule.weights[i]) * ys[2 * q + i];
    }
    c.err = (c.whole - c.halves).cwiseAbs();
    return c;
  };

  std::vector<Cell> cells;
  cells.push_back(evaluate_cell(a, b, 0));
  AdaptiveResult result;
  for (;;) {
    RVector total = RVector::Zero(dim), err = RVector::Zero(dim);
    for (const Cell& c : cells) {
      total += c.halves;
      err += c.err;
    }
    RVector tol(dim);
    for (int i = 0; i < dim; ++i) tol[i] = std::max(options.abs_tol, options.rel_tol * std::abs(total[i]));
    bool done = true;
    for (int i = 0; i < dim; ++i)
      if (err[i] > tol[i]) done = false;
    // Cell with the largest error relative to the component tolerance.
    std::size_t worst = 0;
    double worst_ratio = -1.0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      double ratio = 0.0;
      for (int i = 0; i < dim; ++i) {
        const double t = tol[i] > 0.0 ? tol[i] : std::numeric_limits<double>::min();
        ratio = std::max(ratio, cells[k].err[i] / t);
      }
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = k;
      }
    }
    result.value = total;
    result.error = err;
    result.cells = static_cast<int>(cells.size());
    result.worst_a = cells[worst].a;
    result.worst_b = cells[worst].b;
    result.worst_error = cells[worst].err.maxCoeff();
    if (done) return result;
    if (cells[worst].depth >= options.max_depth) {
      result.converged = false;
      return result;
    }
    const Cell c = cells[worst];
    const double mid = 0.5 * (c.a + c.b);
    cells[worst] = evaluate_cell(c.a, mid, c.depth + 1);
    cells.push_back(evaluate_cell(mid, c.b, c.depth + 1));
  }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const AdaptiveOptions& options) {
  auto vf = [&](double x) {
    RVector v(1);
    v[0] = f(x);
    return v;
  };
  const AdaptiveResult r = integrate_adaptive(vf, a, b, 1, options);
  if (!r.converged) {
    std::ostringstream os;
    os.precision(17);
    os << "quadrature did not converge; worst cell [" << r.worst_a << ", " << r.worst_b
       << "] error " << r.worst_error;
    throw NumericalError(os.str());
  }
  return r.value[0];
}

}  // namespace nskernel
