#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nskernel/domain.hpp"
#include "nskernel/jet.hpp"
#include "nskernel/multiindex.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

struct KernelValue {
  Complex value;
  double tail = 0.0;
  bool certified = true;
};

// K_{D,d}(z, w), holomorphic in z and antiholomorphic in w.
class Kernel {
 public:
  virtual ~Kernel() = default;
  virtual int dimension() const = 0;
  virtual int order() const = 0;
  virtual std::string describe() const = 0;
  virtual KernelValue evaluate(const CPoint& z, const CPoint& w) const = 0;
  // Mixed derivatives up to bidegree (2, 2) on the diagonal.
  virtual KernelJet jet(const CPoint& z) const = 0;

  double diagonal(const CPoint& z) const { return evaluate(z, z).value.real(); }
};

// c = Gamma((d+1)(n+1)) / (n! Gamma(d(n+1)+1))
double ball_constant(int n, int d);
double log_ball_moment(int n, int d, const MultiIndex& alpha);
double ball_moment(int n, int d, const MultiIndex& alpha);

// Product of factors coeff * u(z, wbar)^(-s) with
// u = u0 + sum_i p_i z_i wbar_i + sum_i l_i (z_i + wbar_i).
class ClosedKernel final : public Kernel {
 public:
  struct Factor {
    double coeff = 1.0;
    double u0 = 0.0;
    std::vector<double> p;
    std::vector<double> l;
    int power = 1;
  };

  static ClosedKernel ball(int n, int d);
  static ClosedKernel polydisc(int n, int d);
  static ClosedKernel diagonal_ball(const std::vector<double>& scales, int d);
  // Siegel domain 2 Re z_n + |'z|^2 < 0.
  static ClosedKernel siegel(int n, int d);
  static ClosedKernel for_domain(const DomainSpec& domain, int d);

  int dimension() const override { return n_; }
  int order() const override { return d_; }
  std::string describe() const override { return label_; }
  KernelValue evaluate(const CPoint& z, const CPoint& w) const override;
  KernelJet jet(const CPoint& z) const override;

  const std::vector<Factor>& factors() const { return factors_; }

 private:
  ClosedKernel(int n, int d, std::string label, std::vector<Factor> factors,
               std::function<bool(const CPoint&)> in_closure);
  Complex factor_u(const Factor& f, const CPoint& z, const CPoint& w) const;

  int n_;
  int d_;
  std::string label_;
  std::vector<Factor> factors_;
  std::function<bool(const CPoint&)> in_closure_;
};

// Closed-form K_{D,d}(z, w) for Ball, Polydisc and DiagonalBall.
Complex closed_kernel(const DomainSpec& domain, int d, const CPoint& z, const CPoint& w);
// (2d+1)^n K_{Delta^n}(z, w)^(d+1), an independent route to the polydisc kernel.
Complex polydisc_kernel_power_form(int n, int d, const CPoint& z, const CPoint& w);

struct ModelCertificate {
  double cert_radius = 0.0;          // gauge radius of the certified region
  double tail_bound = 0.0;           // sup of the diagonal tail on that region
  double tail_bound_relative = 0.0;  // same, relative to K
  double weight_error = 0.0;         // relative moment error from the weight
  int samples = 0;
};

class KernelModel final : public Kernel {
 public:
  KernelModel(DomainSpec domain, int d, int truncation, double tol, std::vector<double> log_moments,
              ModelCertificate certificate, std::shared_ptr<const KernelModel> base = nullptr);

  const DomainSpec& domain() const { return domain_; }
  int dimension() const override { return domain_.dimension(); }
  int order() const override { return d_; }
  int truncation() const { return truncation_; }
  double tolerance() const { return tol_; }
  std::string describe() const override;

  const std::vector<MultiIndex>& indices() const { return indices_; }
  const std::vector<double>& log_moments() const { return log_moments_; }
  double moment(std::size_t k) const { return std::exp(log_moments_[k]); }
  double moment(const MultiIndex& alpha) const;
  std::size_t position(const MultiIndex& alpha) const;
  const ModelCertificate& certificate() const { return certificate_; }
  const std::shared_ptr<const KernelModel>& base_model() const { return base_; }

  KernelValue evaluate(const CPoint& z, const CPoint& w) const override;
  KernelJet jet(const CPoint& z) const override;
  // Diagonal value from t_i = |z_i|^2 with the shell-ratio tail estimate.
  double diagonal_from_radii(const RVector& t, double* tail = nullptr) const;

  // The same series cut at degree n_max <= N; shares the certificate.
  KernelModel truncated(int n_max) const;
  bool is_certified_point(const CPoint& z) const;

 private:
  double shell_tail(const std::vector<double>& shells) const;

  DomainSpec domain_;
  int d_;
  int truncation_;
  double tol_;
  std::vector<MultiIndex> indices_;
  std::vector<double> log_moments_;
  std::vector<double> inv_moments_;
  ModelCertificate certificate_;
  std::shared_ptr<const KernelModel> base_;
};

struct BuildOptions {
  double tol = 1e-12;
  double cert_radius = 0.5;
  int threads = 0;
  int base_extra = 10;
  int quadrature_points = 20;
  int max_depth = 20;
  int tail_samples = 32;
  bool allow_large = false;  // lift the n <= 3, N <= 60 guardrail
  std::shared_ptr<const KernelModel> base_model;
};

KernelModel build_model(const DomainSpec& domain, int d, int truncation,
                        const BuildOptions& options = {});

inline KernelValue kernel_eval(const Kernel& k, const CPoint& z, const CPoint& w) {
  return k.evaluate(z, w);
}
inline KernelJet kernel_jet(const Kernel& k, const CPoint& z) { return k.jet(z); }

// c(s) from 1/c(s) = int |K(z,w)|^{2s} / (K(z) K(w))^s K(z) dV(z), with K the
// unweighted kernel of a Ball or Polydisc.
double selberg_constant(const DomainSpec& domain, int s, const CPoint& w, double tol = 1e-10);

}  // namespace nskernel
