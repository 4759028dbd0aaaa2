#pragma once

#include <string>
#include <vector>

#include "nskernel/types.hpp"

namespace nskernel {

enum class DomainType { Ball, Polydisc, DiagonalBall, SmoothReinhardt };

std::string to_string(DomainType type);
DomainType domain_type_from_string(const std::string& name);

struct RhoTerm {
  std::vector<int> exponents;
  double coeff = 0.0;
};

// Real polynomial in t_i = |z_i|^2.
class RhoPolynomial {
 public:
  RhoPolynomial() = default;
  RhoPolynomial(int n, std::vector<RhoTerm> terms);

  int dimension() const { return n_; }
  const std::vector<RhoTerm>& terms() const { return terms_; }

  double value(const RVector& t) const;
  RVector gradient(const RVector& t) const;
  RMatrix hessian(const RVector& t) const;

 private:
  int n_ = 0;
  std::vector<RhoTerm> terms_;
};

class DomainSpec {
 public:
  static DomainSpec ball(int n);
  static DomainSpec polydisc(int n);
  static DomainSpec diagonal_ball(std::vector<double> scales);
  // Validates that {rho(|z|^2) < 0} is bounded, star-shaped about 0 and has a
  // regular boundary on a sample; throws ContractViolation otherwise.
  static DomainSpec smooth_reinhardt(int n, std::vector<RhoTerm> terms);

  DomainType type() const { return type_; }
  int dimension() const { return n_; }
  const std::vector<double>& scales() const { return scales_; }
  const RhoPolynomial& rho() const { return rho_; }
  bool has_smooth_boundary() const { return type_ != DomainType::Polydisc; }

  // Minkowski functional: < 1 inside, = 1 on the boundary.
  double gauge(const CPoint& z) const;
  bool contains(const CPoint& z) const { return gauge(z) < 1.0; }
  bool contains_closure(const CPoint& z, double slack = 1e-12) const {
    return gauge(z) <= 1.0 + slack;
  }

  // Largest lambda with lambda*omega in the closed shadow, for omega >= 0 on
  // the unit simplex sum omega_i = 1.
  double radial_extent(const RVector& omega) const;

  std::string describe() const;
  void check_dimension(const CPoint& z) const;

 private:
  DomainType type_ = DomainType::Ball;
  int n_ = 1;
  std::vector<double> scales_;
  RhoPolynomial rho_;
};

bool operator==(const DomainSpec& a, const DomainSpec& b);

}  // namespace nskernel
