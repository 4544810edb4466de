#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace seifert {

// Disjoint sets over 0..n-1 with union by size and path halving.
class DisjointSets {
 public:
  using Index = std::uint32_t;

  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if x and y were in different sets.
  bool unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<Index> parent_;
  std::vector<Index> size_;
};

}  // namespace seifert
