#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "nskernel/domain.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

// Closed kernel where one exists, otherwise a series model at truncation N.
std::shared_ptr<const Kernel> make_kernel(const DomainSpec& domain, int d, int truncation,
                                          const BuildOptions& options = {});

struct RichardsonResult {
  double value = 0.0;
  double error = 0.0;  // difference to the extrapolation of one lower order
};

// Polynomial extrapolation of y(x) to x = 0 through all given points (Neville).
RichardsonResult richardson_limit(const std::vector<double>& xs, const std::vector<double>& ys);

inline constexpr int kAsymptoticTags = 7;
// Tag letters a..g.
char asymptotic_tag(int index);
// Tags d and e are extrapolated in sqrt(delta), the rest in delta.
bool extrapolates_in_sqrt_delta(int index);

struct AsymptoticsRow {
  double delta = 0.0;  // distance of p to the boundary
  double delta_request = 0.0;
  CPoint p;
  double relative_tail = 0.0;
  bool certified = true;
  std::array<double, kAsymptoticTags> qty{};
};

struct TagVerdict {
  char tag = 'a';
  double limit = 0.0;
  double limit_error = 0.0;
  double target = 0.0;
  double relative_error = 0.0;
  bool pass = false;
  std::string variable;  // "delta" or "sqrt(delta)"
};

struct AsymptoticsOptions {
  int trailing = 4;
  double tolerance = 1e-6;
  // Rows whose relative truncation tail exceeds this are left out of the window.
  double max_relative_tail = 1e-6;
  int threads = 1;
};

struct AsymptoticsResult {
  int n = 0;
  int d = 0;
  CPoint p0;
  CVector v;
  CVector v_normal;
  CVector v_tangential;
  double levi = 0.0;  // Levi form of v_H for rho / |d rho(p0)|
  std::string defining_function;
  std::vector<AsymptoticsRow> rows;     // all requested deltas, decreasing
  std::vector<AsymptoticsRow> dropped;  // outside the certified window
  double window_min = 0.0;
  double window_max = 0.0;
  std::array<TagVerdict, kAsymptoticTags> verdicts{};
  bool all_pass() const;
};

std::array<double, kAsymptoticTags> asymptotic_targets(int n, int d, double v_normal, double levi);

AsymptoticsResult asymptotics_sweep(const DomainSpec& domain, const Kernel& kernel, const CPoint& p0,
                                    const CVector& v, std::vector<double> deltas,
                                    const AsymptoticsOptions& options = {});

// Points of a Cartesian grid in R^{2n} with |z| <= radius; steps per half axis.
std::vector<CPoint> compact_grid(int n, double radius, int steps);

struct RamadanovRow {
  int j = 0;
  std::string domain;
  bool contains_grid = false;  // hypothesis (i) on the grid
  double epsilon = 0.0;        // D_j inside (1 + epsilon) D, from boundary samples
  double sup_diff = 0.0;       // NaN when the grid is not contained
};

struct RamadanovOptions {
  int truncation = 30;
  BuildOptions build;
  int boundary_samples = 1000;
  double epsilon_gate = 0.1;
  int threads = 1;
};

struct RamadanovResult {
  int d = 0;
  std::vector<RamadanovRow> rows;
  int first_valid = -1;  // first row with containment and epsilon < gate
  bool monotone = false;
  double final_sup = 0.0;
};

// Boundary points of a Reinhardt domain sampled on the simplex of directions.
std::vector<CPoint> boundary_samples(const DomainSpec& domain, int count);

RamadanovResult ramadanov_run(const std::vector<DomainSpec>& family, const DomainSpec& limit, int d,
                              const std::vector<CPoint>& grid, const RamadanovOptions& options = {});
// Discs of radius r_j = 1 - 2^{-j}, j = 1..j_max, as DiagonalBall(1, r_j^{-2}).
std::vector<DomainSpec> disc_family(int j_max);

struct CompletenessRow {
  double s = 0.0;
  double length = 0.0;
  double log_scale = 0.0;  // log(1 / (1 - s))
};

struct CompletenessResult {
  CPoint p0;
  std::vector<CompletenessRow> rows;
  double fitted_c = 0.0;  // least squares L = C log(1/(1-s))
  bool increasing = false;
  bool dominates = false;  // L(s) >= C_min log(1/(1-s)) on every row with s > 0
  double c_min = 0.0;
};

CompletenessResult completeness_probe(const Kernel& kernel, const CPoint& p0, std::vector<double> s_values,
                                      double rel_tol = 1e-11);

}  // namespace nskernel
