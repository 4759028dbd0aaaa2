#include "nskernel/jet.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "nskernel/errors.hpp"

namespace nskernel {

JetLayout::JetLayout(int n) : n_(n) {
  indices_ = enumerate_multiindices(n, 2);
  const int m = size();
  pair_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pair_[i][j] = position(MultiIndex::unit(n, i) + MultiIndex::unit(n, j));
  splits_.resize(m);
  for (int k1 = 0; k1 < m; ++k1)
    for (int k2 = 0; k2 < m; ++k2) {
      if (indices_[k1].degree() + indices_[k2].degree() > 2) continue;
      splits_[position(indices_[k1] + indices_[k2])].emplace_back(k1, k2);
    }
  factorial_.resize(m);
  for (int k = 0; k < m; ++k) {
    double f = 1.0;
    for (int e : indices_[k].entries()) f *= (e == 2 ? 2.0 : 1.0);
    factorial_[k] = f;
  }
}

const JetLayout& JetLayout::get(int n) {
  if (n < 1) throw ContractViolation("jet dimension must be >= 1");
  static std::mutex m;
  static std::map<int, std::unique_ptr<JetLayout>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[n];
  if (!slot) slot.reset(new JetLayout(n));
  return *slot;
}

int JetLayout::position(const MultiIndex& a) const {
  for (int k = 0; k < size(); ++k)
    if (indices_[k] == a) return k;
  throw ContractViolation("multi-index " + a.to_string() + " is outside the jet layout");
}

Complex KernelJet::value(const MultiIndex& a, const MultiIndex& b) const {
  const JetLayout& l = layout();
  return values(l.position(a), l.position(b));
}

TaylorJet::TaylorJet(int n) : layout_(&JetLayout::get(n)) {
  c_ = CMatrix::Zero(layout_->size(), layout_->size());
}

TaylorJet TaylorJet::from_derivatives(const KernelJet& jet) {
  TaylorJet t(jet.dimension());
  const int m = t.layout_->size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t.c_(a, b) = jet.values(a, b) / (t.layout_->factorial(a) * t.layout_->factorial(b));
  return t;
}

TaylorJet TaylorJet::operator*(const TaylorJet& other) const {
  TaylorJet r(dimension());
  const int m = layout_->size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Complex s = 0.0;
      for (const auto& [a1, a2] : layout_->splits(a))
        for (const auto& [b1, b2] : layout_->splits(b)) s += c_(a1, b1) * other.c_(a2, b2);
      r.c_(a, b) = s;
    }
  return r;
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& other) {
  c_ += other.c_;
  return *this;
}

TaylorJet TaylorJet::operator*(Complex s) const {
  TaylorJet r(*this);
  r.c_ *= s;
  return r;
}

CMatrix TaylorJet::derivatives() const {
  const int m = layout_->size();
  CMatrix d(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) d(a, b) = c_(a, b) * layout_->factorial(a) * layout_->factorial(b);
  return d;
}

TaylorJet TaylorJet::log() const {
  const Complex c0 = c_(0, 0);
  if (!(c0.real() > 0.0)) throw NumericalError("log of a jet with non-positive constant term");
  // log(c0 (1 + e)) with e nilpotent of order 5 in total degree.
  TaylorJet e = *this * (1.0 / c0);
  e.c_(0, 0) = 0.0;
  TaylorJet result(dimension());
  TaylorJet power = e;
  for (int k = 1; k <= 4; ++k) {
    result += power * ((k % 2 == 1 ? 1.0 : -1.0) / k);
    if (k < 4) power = power * e;
  }
  result.c_(0, 0) = std::log(c0.real());
  return result;
}

}  // namespace nskernel
