#pragma once

#include <functional>
#include <vector>

#include "nskernel/types.hpp"

namespace nskernel {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// q-point Gauss-Legendre rule, cached per q.
const GaussRule& gauss_legendre(int q);

struct AdaptiveOptions {
  int points = 20;         // Gauss-Legendre order per cell
  double rel_tol = 1e-12;  // per component
  double abs_tol = 0.0;    // per component floor
  int max_depth = 20;
  int threads = 1;         // node evaluations in parallel when > 1
};

struct AdaptiveResult {
  RVector value;
  RVector error;
  int cells = 0;
  bool converged = true;
  // Cell with the largest normalized error at exit.
  double worst_a = 0.0;
  double worst_b = 0.0;
  double worst_error = 0.0;
};

using VectorIntegrand = std::function<RVector(double)>;

// Globally adaptive Gauss-Legendre for a vector-valued integrand on [a, b].
// Each cell is estimated on its two halves and checked against the whole-cell
// rule; the cell with the largest error relative to the component tolerance
// is split until every component satisfies
// err_i <= max(abs_tol, rel_tol * |I_i|).
AdaptiveResult integrate_adaptive(const VectorIntegrand& f, double a, double b, int dim,
                                  const AdaptiveOptions& options = {});

// Scalar convenience wrapper; throws NumericalError on non-convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const AdaptiveOptions& options = {});

}  // namespace nskernel
