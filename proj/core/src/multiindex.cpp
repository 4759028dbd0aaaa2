#include "nskernel/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nskernel/errors.hpp"

namespace nskernel {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw ContractViolation("multi-index entries must be non-negative");
    degree_ += e;
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::unit(int n, int i) {
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw ContractViolation("multi-index length mismatch");
  std::vector<int> e(entries_);
  for (int i = 0; i < size(); ++i) e[i] += other.entries_[i];
  return MultiIndex(std::move(e));
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i] < other.entries_[i]) return false;
  return true;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.entries() > b.entries();
}

namespace {

// Appends all exponent vectors of exactly total degree k, leading entry
// descending.
void fill_degree(int n, int k, int pos, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[pos] = k;
    out.emplace_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[pos] = e;
    fill_degree(n, k - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int n, int max_degree) {
  if (n < 1) throw ContractViolation("dimension must be >= 1");
  if (max_degree < 0) throw ContractViolation("max degree must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(multiindex_count(n, max_degree));
  std::vector<int> cur(n, 0);
  for (int k = 0; k <= max_degree; ++k) fill_degree(n, k, 0, cur, out);
  return out;
}

std::size_t multiindex_count(int n, int max_degree) {
  // C(n+N, n) computed incrementally; exact for the sizes used here.
  std::size_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * static_cast<std::size_t>(max_degree + i) / i;
  return c;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : a.entries()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace nskernel
