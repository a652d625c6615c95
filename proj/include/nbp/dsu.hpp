#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace nbp {

/// Union-find with union by size and no path compression, so that unions can
/// be undone in LIFO order during backtracking.
class Dsu {
 public:
  explicit Dsu(int n = 0) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// False if x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    history_.push_back(y);
    return true;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      int y = history_.back();
      history_.pop_back();
      int x = parent_[y];
      size_[x] -= size_[y];
      parent_[y] = y;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

}  // namespace nbp
