#pragma once

#include <vector>

#include "nskernel/multiindex.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

// Multi-indices of degree <= 2 in n variables with their addition table.
class JetLayout {
 public:
  static const JetLayout& get(int n);

  int dimension() const { return n_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const MultiIndex& index(int k) const { return indices_[k]; }
  int position(const MultiIndex& a) const;
  int unit(int i) const { return 1 + i; }
  // Position of e_i + e_j.
  int pair(int i, int j) const { return pair_[i][j]; }
  // Pairs (k1, k2) with index(k1) + index(k2) = index(k).
  const std::vector<std::pair<int, int>>& splits(int k) const { return splits_[k]; }
  double factorial(int k) const { return factorial_[k]; }

 private:
  explicit JetLayout(int n);
  int n_;
  std::vector<MultiIndex> indices_;
  std::vector<std::vector<int>> pair_;
  std::vector<std::vector<std::pair<int, int>>> splits_;
  std::vector<double> factorial_;
};

// values(a, b) = d^A_z d^B_wbar K(z, w) at w = z, with A = layout.index(a).
struct KernelJet {
  CPoint z;
  CMatrix values;
  // Largest absolute tail estimate over entries, the largest ratio of an
  // entry's tail to the sum of its absolute terms, and whether z is inside
  // the certified region of the source model.
  double tail = 0.0;
  double relative_tail = 0.0;
  bool certified = true;

  int dimension() const { return static_cast<int>(z.size()); }
  const JetLayout& layout() const { return JetLayout::get(dimension()); }
  Complex value(const MultiIndex& a, const MultiIndex& b) const;
};

// Truncated bivariate Taylor polynomial sum c(A, B) x^A y^B, |A|, |B| <= 2.
class TaylorJet {
 public:
  explicit TaylorJet(int n);
  static TaylorJet from_derivatives(const KernelJet& jet);

  int dimension() const { return layout_->dimension(); }
  const CMatrix& coeffs() const { return c_; }
  CMatrix& coeffs() { return c_; }

  TaylorJet operator*(const TaylorJet& other) const;
  TaylorJet& operator+=(const TaylorJet& other);
  TaylorJet operator*(Complex s) const;

  // Derivative table A! B! c(A, B).
  CMatrix derivatives() const;
  // Taylor jet of log; requires a real positive constant term.
  TaylorJet log() const;

 private:
  const JetLayout* layout_;
  CMatrix c_;
};

}  // namespace nskernel
