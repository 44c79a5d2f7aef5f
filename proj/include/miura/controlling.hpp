#pragma once

// Controlling sets: F forces every locally flat-foldable assignment exactly
// when the dual edges of F contain a spanning tree of the grid graph.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/grid.hpp"

namespace miura {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    --count_;
  }
  [[nodiscard]] int components() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

inline DisjointSets dual_components(GridSize size, std::span<const CreaseId> f) {
  DisjointSets sets(size.cells());
  for (const auto& id : f) {
    crease_index(size, id);  // range check
    const auto [a, b] = crease_cells(id);
    sets.unite(a.r * size.cols + a.c, b.r * size.cols + b.c);
  }
  return sets;
}

}  // namespace detail

inline bool is_controlling(GridSize size, std::span<const CreaseId> f) {
  if (static_cast<int>(f.size()) < size.cells() - 1) {
    for (const auto& id : f) crease_index(size, id);  // range check
    return false;
  }
  return detail::dual_components(size, f).components() == 1;
}

/// Cells of the component containing the first cell (row-major) that F does
/// not connect to (0, 0); nullopt when F is controlling.
inline std::optional<std::vector<Cell>> disconnected_component(GridSize size, std::span<const CreaseId> f) {
  auto sets = detail::dual_components(size, f);
  if (sets.components() == 1) return std::nullopt;
  const int root0 = sets.find(0);
  int other = -1;
  for (int i = 1; i < size.cells() && other < 0; ++i)
    if (sets.find(i) != root0) other = sets.find(i);
  std::vector<Cell> out;
  for (int i = 0; i < size.cells(); ++i)
    if (sets.find(i) == other) out.push_back({i / size.cols, i % size.cols});
  return out;
}

/// Spanning tree of the dual grid graph: every vertical dual edge of the
/// first column plus every horizontal dual edge of each row.
inline std::vector<CreaseId> spanning_tree_creases(GridSize size) {
  std::vector<CreaseId> out;
  for (int r = 0; r + 1 < size.rows; ++r) out.push_back({CreaseKind::H, r, 0});
  for (int r = 0; r < size.rows; ++r)
    for (int c = 0; c + 1 < size.cols; ++c) out.push_back({CreaseKind::V, r, c});
  return out;
}

}  // namespace miura
