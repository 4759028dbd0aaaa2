#pragma once

#include <string>
#include <vector>

#include "nskernel/kernel.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

enum class MinIntegralTag { I0, I1, I2, Lambda, I, M };

struct MinIntegralKind {
  MinIntegralTag tag = MinIntegralTag::I0;
  int k = 0;  // 1..n for Lambda

  static MinIntegralKind i0() { return {MinIntegralTag::I0, 0}; }
  static MinIntegralKind i1() { return {MinIntegralTag::I1, 0}; }
  static MinIntegralKind i2() { return {MinIntegralTag::I2, 0}; }
  static MinIntegralKind lambda(int k) { return {MinIntegralTag::Lambda, k}; }
  static MinIntegralKind i() { return {MinIntegralTag::I, 0}; }
  static MinIntegralKind m() { return {MinIntegralTag::M, 0}; }

  std::string name() const;
  static MinIntegralKind parse(const std::string& name);
};

struct MinIntegralResult {
  MinIntegralKind kind;
  CPoint p;
  CVector v;
  double value = 0.0;
  // Coefficients c_alpha of the minimiser f = sum c_alpha z^alpha, in the
  // order of the model's multi-indices.
  CVector minimizer;
  std::vector<double> residuals;
  int truncation = 0;
  double value_lower = 0.0;  // same problem at N - 2
  double drift = 0.0;        // |value - value_lower| / value
};

MinIntegralResult minimum_integral(const KernelModel& model, const MinIntegralKind& kind,
                                   const CPoint& p, const CVector& v);

struct IdentityEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

struct IdentityReport {
  CPoint p;
  CVector v;
  int truncation = 0;
  std::vector<IdentityEntry> entries;
  std::vector<MinIntegralResult> integrals;
  double max_residual = 0.0;
  double max_drift = 0.0;
};

IdentityReport extremal_identity_report(const KernelModel& model, const CPoint& p, const CVector& v);

struct MonotonicityEntry {
  std::string name;
  double inner = 0.0;
  double outer = 0.0;
  bool holds = false;
};

struct MonotonicityReport {
  std::vector<MonotonicityEntry> entries;
  bool all_hold = true;
};

// Throws ContractViolation when the inner domain is not contained in the outer.
MonotonicityReport monotonicity_check(const KernelModel& inner, const KernelModel& outer,
                                      const CPoint& p, const CVector& v);

bool domain_contains(const DomainSpec& outer, const DomainSpec& inner);

}  // namespace nskernel
