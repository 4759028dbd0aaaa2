// Acceptance suite: one PASS/FAIL line per criterion.
//   nskernel_acceptance c1 ... c9 | all

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nskernel/errors.hpp"
#include "nskernel/experiments.hpp"
#include "nskernel/extremal.hpp"
#include "nskernel/geometry.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/metric.hpp"

using namespace nskernel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double rel(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

CPoint pt(Complex a, Complex b) {
  CPoint z(2);
  z << a, b;
  return z;
}

class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}
  double normal() { return std::normal_distribution<double>()(g_); }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  CVector unit(int n) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(normal(), normal());
    return v / v.norm();
  }
  CPoint in_ball(int n, double r) { return unit(n) * (r * uniform(0.0, 1.0)); }
  CMatrix unitary(int n) {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Complex(normal(), normal());
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ() * CMatrix::Identity(n, n);
  }

 private:
  std::mt19937_64 g_;
};

bool report(const char* id, bool pass, const std::string& detail) {
  std::printf("%s %s %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  return pass;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Ball closed-form constants from a series model at N = 40.
bool c1() {
  double worst = 0.0, slowest = 0.0;
  const std::vector<std::pair<int, int>> cases{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 1}};
  Rng rng(1);
  for (auto [n, d] : cases) {
    const auto t0 = Clock::now();
    const KernelModel m = build_model(DomainSpec::ball(n), d, 40);
    const double c = std::tgamma((d + 1.0) * (n + 1.0)) / (std::tgamma(n + 1.0) * std::tgamma(d * (n + 1.0) + 1.0));
    const double nfact = std::tgamma(n + 1.0);
    const double k0 = c * std::pow(nfact / std::pow(kPi, n), d + 1);
    const double beta = std::pow((d + 1.0) * (n + 1.0), n) * std::pow(c, -1.0 / (d + 1)) * std::pow(kPi, n) / nfact;
    const double R = -2.0 / ((d + 1.0) * (n + 1.0)), Ric = -1.0 / (d + 1.0);
    const MetricPointData g0 = metric_tensor(m, CPoint::Zero(n));
    worst = std::max(worst, rel(g0.K, k0));
    worst = std::max(worst, (g0.G - (d + 1.0) * (n + 1.0) * CMatrix::Identity(n, n)).norm() / ((d + 1.0) * (n + 1.0)));
    std::vector<CPoint> pts{CPoint::Zero(n)};
    for (int i = 0; i < 3; ++i) pts.push_back(rng.in_ball(n, 0.3));
    for (const CPoint& z : pts) {
      const MetricPointData md = metric_tensor(m, z);
      worst = std::max(worst, rel(beta_invariant(md), beta));
      for (int i = 0; i < 3; ++i) {
        const CVector v = rng.unit(n);
        worst = std::max(worst, rel(sectional_curvature(md, v), R));
        worst = std::max(worst, rel(ricci_curvature(md, v), Ric));
      }
    }
    slowest = std::max(slowest, seconds_since(t0));
  }
  return report("c1", worst < 1e-8 && slowest < 10.0,
                "ball constants at N=40: max_rel=" + fmt("%.3e", worst) + " slowest_case=" + fmt("%.2fs", slowest));
}

// Polydisc kernel at the origin from the power form and the product of discs.
bool c2() {
  const CPoint z0 = CPoint::Zero(2), z1 = CPoint::Zero(1);
  const Complex power = polydisc_kernel_power_form(2, 1, z0, z0);
  const Complex disc = ClosedKernel::polydisc(1, 1).evaluate(z1, z1).value;
  const Complex product = disc * disc;
  const Complex closed = closed_kernel(DomainSpec::polydisc(2), 1, z0, z0);
  const double target = 9.0 / std::pow(kPi, 4);
  const double agree = std::max(rel(power, product), rel(closed, product));
  const double off = std::max(rel(power, Complex(target)), rel(product, Complex(target)));
  return report("c2", agree < 1e-12 && off < 1e-12,
                "K(0,0)=" + fmt("%.17g", product.real()) + " 9/pi^4=" + fmt("%.17g", target) +
                    " agreement=" + fmt("%.3e", agree) + " vs_target=" + fmt("%.3e", off));
}

// Selberg constants for Ball(1) and Ball(2) at s = 2.
bool c3() {
  const auto t0 = Clock::now();
  double worst = 0.0, spread = 0.0;
  for (int n : {1, 2}) {
    const double target = n == 1 ? 3.0 : 10.0;
    std::vector<CPoint> ws{CPoint::Zero(n), CPoint::Constant(n, Complex(0.2, 0.1)), CPoint::Zero(n)};
    ws[2][0] = Complex(-0.1, 0.45);
    double lo = INFINITY, hi = -INFINITY;
    for (const CPoint& w : ws) {
      const double c = selberg_constant(DomainSpec::ball(n), 2, w);
      worst = std::max(worst, std::abs(c - target));
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    spread = std::max(spread, hi - lo);
  }
  const double t = seconds_since(t0);
  return report("c3", worst < 1e-6 && spread < 1e-6 && t < 30.0,
                "max_abs_err=" + fmt("%.3e", worst) + " w_spread=" + fmt("%.3e", spread) + " time=" + fmt("%.2fs", t));
}

// Transformation rule under dilations, unitaries and the Cayley map.
bool c4() {
  Rng rng(4);
  const int n = 2;
  double worst = 0.0;
  for (int d = 0; d <= 1; ++d) {
    const ClosedKernel ball = ClosedKernel::ball(n, d);
    const ClosedKernel siegel = ClosedKernel::siegel(n, d);
    for (int i = 0; i < 20; ++i) {
      const CPoint z = rng.in_ball(n, 0.9), w = rng.in_ball(n, 0.9);
      const CVector v = rng.unit(n);
      // Ball onto the diagonal ball with scales a under z_i -> z_i / sqrt(a_i).
      const std::vector<double> a{rng.uniform(0.5, 4.0), rng.uniform(0.5, 4.0)};
      CVector diag(n);
      for (int k = 0; k < n; ++k) diag[k] = 1.0 / std::sqrt(a[k]);
      const Biholo dil = Biholo::dilation(diag);
      const ClosedKernel ell = ClosedKernel::diagonal_ball(a, d);
      worst = std::max(worst, transform_kernel_residual(dil, ball, ell, z, w));
      worst = std::max(worst, transform_metric_residual(dil, ball, ell, z, v));
      const Biholo u = Biholo::linear(rng.unitary(n));
      worst = std::max(worst, transform_kernel_residual(u, ball, ball, z, w));
      worst = std::max(worst, transform_metric_residual(u, ball, ball, z, v));
      const Biholo phi = cayley_data(n);
      const CPoint zs = cayley(z), ws = cayley(w);
      worst = std::max(worst, transform_kernel_residual(phi, siegel, ball, zs, ws));
      worst = std::max(worst, transform_metric_residual(phi, siegel, ball, zs, v));
    }
  }
  return report("c4", worst < 1e-9, "20 pairs x {dilation, unitary, Cayley} x d in {0,1}: max_residual=" +
                                        fmt("%.3e", worst));
}

// Extremal identities on Ball(2) and the monotonicity suite.
bool c5() {
  double worst = 0.0, drift = 0.0;
  std::string worst_name;
  for (int d = 0; d <= 1; ++d) {
    const KernelModel m = build_model(DomainSpec::ball(2), d, 30);
    for (const CPoint& p : {CPoint(CPoint::Zero(2)), pt(0.3, 0.2)}) {
      for (const CVector& v : {CVector(pt(1.0, 0.0)), CVector(pt(0.6, Complex(0.0, 0.8)))}) {
        const IdentityReport r = extremal_identity_report(m, p, v);
        for (const auto& e : r.entries) {
          if (e.residual > worst) {
            worst = e.residual;
            worst_name = e.name + " (d=" + std::to_string(d) + ")";
          }
        }
        drift = std::max(drift, r.max_drift);
      }
    }
  }
  struct Pair {
    DomainSpec inner, outer;
  };
  const std::vector<Pair> pairs{
      {DomainSpec::ball(2), DomainSpec::diagonal_ball({0.25, 0.25})},
      {DomainSpec::diagonal_ball({4.0, 1.0}), DomainSpec::ball(2)},
      {DomainSpec::ball(2), DomainSpec::polydisc(2)},
      {DomainSpec::diagonal_ball({4.0, 4.0}), DomainSpec::diagonal_ball({4.0, 1.0})},
      {DomainSpec::ball(2), DomainSpec::ball(2)}};
  int mono_ok = 0;
  for (const auto& pr : pairs) {
    const KernelModel inner = build_model(pr.inner, 1, 20), outer = build_model(pr.outer, 1, 20);
    if (monotonicity_check(inner, outer, pt(0.1, 0.05), pt(1.0, 0.5)).all_hold) ++mono_ok;
  }
  const bool pass = worst < 1e-7 && drift < 1e-6 && mono_ok == 5;
  return report("c5", pass,
                "max_identity_residual=" + fmt("%.3e", worst) + " [" + worst_name + "] max_drift=" +
                    fmt("%.3e", drift) + " monotonicity=" + std::to_string(mono_ok) + "/5");
}

std::string sweep_detail(const AsymptoticsResult& r, const std::vector<int>& tags) {
  std::string s;
  for (int t : tags) s += std::string(1, asymptotic_tag(t)) + "=" + fmt("%.1e", r.verdicts[t].relative_error) + " ";
  return s;
}

// Boundary asymptotics sweeps.
bool c6() {
  const auto t0 = Clock::now();
  std::vector<double> deltas;
  for (int k = 0; k <= 10; ++k) deltas.push_back(1e-3 * std::pow(2.0, -k));
  bool closed_ok = true;
  double closed_worst = 0.0;
  for (const DomainSpec& D : {DomainSpec::ball(2), DomainSpec::diagonal_ball({4.0, 1.0})})
    for (int d = 0; d <= 1; ++d) {
      const auto k = make_kernel(D, d, 30);
      AsymptoticsOptions o;
      o.tolerance = 1e-6;
      const AsymptoticsResult r = asymptotics_sweep(D, *k, pt(0.0, 1.0), pt(0.6, 0.8), deltas, o);
      closed_ok = closed_ok && r.all_pass();
      for (const auto& v : r.verdicts) closed_worst = std::max(closed_worst, v.relative_error);
    }

  const DomainSpec sr =
      DomainSpec::smooth_reinhardt(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{2, 0}, 0.1}, {{0, 0}, -1.0}});
  BuildOptions b;
  b.cert_radius = 0.95;
  b.tol = 1e-12;
  const KernelModel m = build_model(sr, 0, 30, b);
  std::vector<double> sr_deltas;
  for (int k = 0; k <= 10; ++k) sr_deltas.push_back(0.6 * std::pow(0.9, k));
  AsymptoticsOptions o;
  o.tolerance = 1e-2;
  o.max_relative_tail = 1e-4;
  bool series_ok = false;
  std::string series_detail;
  try {
    const AsymptoticsResult r = asymptotics_sweep(sr, m, pt(0.0, 1.0), pt(0.6, 0.8), sr_deltas, o);
    series_ok = true;
    for (int t : {0, 1, 3, 4}) series_ok = series_ok && r.verdicts[t].pass;
    series_detail = "window=[" + fmt("%.3g", r.window_min) + "," + fmt("%.3g", r.window_max) + "] " +
                    sweep_detail(r, {0, 1, 3, 4});
  } catch (const DomainError& e) {
    series_detail = std::string("no certified window: ") + e.what();
  }
  const double t = seconds_since(t0);
  return report("c6", closed_ok && series_ok && t < 300.0,
                "closed max_rel=" + fmt("%.2e", closed_worst) + (closed_ok ? " (ok)" : " (fail)") +
                    "; SmoothReinhardt N=30: " + series_detail + "; time=" + fmt("%.1fs", t));
}

// Ramadanov convergence on expanding discs.
bool c7() {
  RamadanovOptions o;
  const RamadanovResult r = ramadanov_run(disc_family(12), DomainSpec::ball(1), 1, compact_grid(1, 0.5, 8), o);
  return report("c7", r.monotone && r.final_sup < 1e-5,
                std::string("monotone=") + (r.monotone ? "yes" : "no") + " final_sup=" + fmt("%.3e", r.final_sup) +
                    " (need < 1e-5)");
}

// Path lengths towards the boundary of Ball(2), d = 1.
bool c8() {
  const auto t0 = Clock::now();
  const auto k = make_kernel(DomainSpec::ball(2), 1, 30);
  const CompletenessResult r = completeness_probe(*k, pt(0.0, 1.0), {0.5, 0.9, 0.99, 0.999});
  double worst = 0.0;
  for (const auto& row : r.rows) worst = std::max(worst, std::abs(row.length / std::atanh(row.s) - std::sqrt(6.0)));
  const double last = r.rows.back().length;
  const double t = seconds_since(t0);
  return report("c8", worst < 1e-6 && last > 6.0 && r.increasing && t < 5.0,
                "max|L/atanh - sqrt6|=" + fmt("%.3e", worst) + " L(0.999)=" + fmt("%.4f", last) +
                    " time=" + fmt("%.3fs", t));
}

// Pinchuk normalization.
bool c9() {
  const PinchukMap q = pinchuk_normalize(DefiningFunction::quadric(2), CPoint::Zero(2));
  const CMatrix I = CMatrix::Identity(2, 2);
  double id = 0.0;
  for (const CMatrix* mtx : {&q.rotation, &q.P, &q.Lambda, &q.U}) id = std::max(id, (*mtx - I).norm());
  id = std::max(id, q.a1.norm());
  id = std::max(id, (q.h.jacobian(CPoint::Zero(2)) - I).norm());
  double jet = 0.0, normal = 0.0;
  for (const DomainSpec& D : {DomainSpec::ball(2), DomainSpec::diagonal_ball({4.0, 1.0})}) {
    const NormalFormReport r = normal_form_check(pinchuk_normalize(D, pt(0.0, 1.0)));
    jet = std::max(jet, r.max_jet_residual());
    normal = std::max(normal, r.normal_image_residual);
  }
  return report("c9", id < 1e-12 && jet < 1e-6 && normal < 1e-9,
                "quadric_identity=" + fmt("%.3e", id) + " jet_residual=" + fmt("%.3e", jet) +
                    " normal_image=" + fmt("%.3e", normal));
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<bool()>> criteria{{"c1", c1}, {"c2", c2}, {"c3", c3},
                                                              {"c4", c4}, {"c5", c5}, {"c6", c6},
                                                              {"c7", c7}, {"c8", c8}, {"c9", c9}};
  std::vector<std::string> which;
  for (int i = 1; i < argc; ++i) which.emplace_back(argv[i]);
  if (which.empty() || (which.size() == 1 && which[0] == "all"))
    for (const auto& [id, fn] : criteria) which.push_back(id);
  bool all = true;
  for (const auto& id : which) {
    if (id == "all") continue;
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion '%s'\n", id.c_str());
      return 2;
    }
    try {
      all = it->second() && all;
    } catch (const std::exception& e) {
      all = report(id.c_str(), false, std::string("error: ") + e.what()) && all;
    }
  }
  return all ? 0 : 1;
}
