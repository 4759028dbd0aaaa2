#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace nskernel {

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int i);

  int size() const { return static_cast<int>(entries_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  MultiIndex operator+(const MultiIndex& other) const;
  // Componentwise alpha >= beta.
  bool dominates(const MultiIndex& other) const;
  std::string to_string() const;

  bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

// Graded order used throughout: lower degree first, then lexicographically
// larger leading exponents first, so (2,1) lists as (0,0),(1,0),(0,1).
bool graded_less(const MultiIndex& a, const MultiIndex& b);

std::vector<MultiIndex> enumerate_multiindices(int n, int max_degree);

// Number of multi-indices of length n with degree <= N, C(n+N, n).
std::size_t multiindex_count(int n, int max_degree);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const noexcept;
};

}  // namespace nskernel
