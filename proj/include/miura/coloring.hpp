#pragma once

// Correspondence between locally flat-foldable MV assignments and proper
// 3-colorings of the dual grid graph with cell (0, 0) colored 0.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "miura/grid.hpp"

namespace miura {

/// Color arithmetic mod 3 with representatives {0, 1, 2}.
constexpr int mod3(int x) { return ((x % 3) + 3) % 3; }

/// Difference b - a mod 3 reported as +1 or -1 (0 when equal).
constexpr int color_step(int from, int to) {
  switch (mod3(to - from)) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

class GridColoring {
 public:
  GridColoring() = default;
  explicit GridColoring(GridSize size, std::uint8_t fill = 0)
      : size_(size), colors_(static_cast<std::size_t>(size.cells()), fill) {}

  GridColoring(std::initializer_list<std::initializer_list<int>> rows)
      : GridColoring(from_rows(std::vector<std::vector<int>>(rows.begin(), rows.end()))) {}

  static GridColoring from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty coloring");
    GridColoring k(GridSize(static_cast<int>(rows.size()), static_cast<int>(rows.front().size())));
    for (int r = 0; r < k.size_.rows; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != k.size_.cols) {
        throw std::invalid_argument("coloring row " + std::to_string(r) + " has " +
                                    std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(k.size_.cols));
      }
      for (int c = 0; c < k.size_.cols; ++c) {
        const int v = row[static_cast<std::size_t>(c)];
        if (v < 0 || v > 2) {
          throw std::invalid_argument("color at (" + std::to_string(r) + "," + std::to_string(c) +
                                      ") must be 0, 1 or 2");
        }
        k.set(r, c, v);
      }
    }
    return k;
  }

  [[nodiscard]] GridSize size() const { return size_; }
  [[nodiscard]] int operator()(int r, int c) const {
    return colors_[static_cast<std::size_t>(r * size_.cols + c)];
  }
  [[nodiscard]] int operator()(Cell s) const { return (*this)(s.r, s.c); }
  void set(int r, int c, int color) {
    colors_[static_cast<std::size_t>(r * size_.cols + c)] = static_cast<std::uint8_t>(mod3(color));
  }
  void set(Cell s, int color) { set(s.r, s.c, color); }

  [[nodiscard]] std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(size_.rows));
    for (int r = 0; r < size_.rows; ++r)
      for (int c = 0; c < size_.cols; ++c) out[static_cast<std::size_t>(r)].push_back((*this)(r, c));
    return out;
  }

  /// Global color shift that re-anchors (0, 0) to 0.
  [[nodiscard]] GridColoring normalized() const {
    GridColoring k = *this;
    const int shift = (*this)(0, 0);
    for (auto& x : k.colors_) x = static_cast<std::uint8_t>(mod3(x - shift));
    return k;
  }

  friend bool operator==(const GridColoring&, const GridColoring&) = default;
  friend auto operator<=>(const GridColoring& a, const GridColoring& b) {
    return a.colors_ <=> b.colors_;
  }

 private:
  GridSize size_;
  std::vector<std::uint8_t> colors_;
};

/// Proper coloring check, ignoring the anchor.
inline bool is_proper(const GridColoring& k) {
  const GridSize s = k.size();
  for (int r = 0; r < s.rows; ++r) {
    for (int c = 0; c < s.cols; ++c) {
      if (c + 1 < s.cols && k(r, c) == k(r, c + 1)) return false;
      if (r + 1 < s.rows && k(r, c) == k(r + 1, c)) return false;
    }
  }
  return true;
}

inline bool is_valid_coloring(const GridColoring& k) { return k(0, 0) == 0 && is_proper(k); }

/// Weight of a crease: color step along its canonical dual edge.
inline int edge_weight(const GridColoring& k, const CreaseId& id) {
  const auto [tail, head] = canonical_dual_edge(id);
  return color_step(k(tail), k(head));
}

inline void require_valid(const GridColoring& k) {
  if (!is_valid_coloring(k)) {
    throw precondition_error(k(0, 0) != 0 ? "coloring must have color 0 at cell (0,0)"
                                          : "coloring is not proper");
  }
}

/// Cells in boustrophedon order: right along row 0, down, left along row 1, ...
inline std::vector<Cell> boustrophedon_path(GridSize size) {
  std::vector<Cell> path;
  path.reserve(static_cast<std::size_t>(size.cells()));
  for (int r = 0; r < size.rows; ++r) {
    for (int i = 0; i < size.cols; ++i) path.push_back({r, r % 2 == 0 ? i : size.cols - 1 - i});
  }
  return path;
}

/// The crease between two edge-adjacent cells.
inline CreaseId crease_between(Cell a, Cell b) {
  if (a.r == b.r) return {CreaseKind::V, a.r, std::min(a.c, b.c)};
  return {CreaseKind::H, std::min(a.r, b.r), a.c};
}

inline GridColoring mv_to_coloring(const MVAssignment& a) {
  const auto report = is_locally_flat_foldable(a);
  if (!report.foldable) {
    throw precondition_error("assignment is not locally flat-foldable at " +
                             to_string(report.violations.front()));
  }
  GridColoring k(a.size());
  const auto path = boustrophedon_path(a.size());
  for (std::size_t i = 1; i < path.size(); ++i) {
    k.set(path[i], k(path[i - 1]) + sign(a[crease_between(path[i - 1], path[i])]));
  }
  return k;
}

inline MVAssignment coloring_to_mv(const GridColoring& k) {
  require_valid(k);
  MVAssignment a(k.size(), Fold::mountain);
  for (int i = 0; i < k.size().creases(); ++i) {
    a.set_index(i, fold_from_sign(edge_weight(k, crease_at(k.size(), i))));
  }
  return a;
}

/// Diagonal stripes: K(r, c) = (r + c) mod 3.
inline GridColoring diagonal_coloring(GridSize size) {
  GridColoring k(size);
  for (int r = 0; r < size.rows; ++r)
    for (int c = 0; c < size.cols; ++c) k.set(r, c, r + c);
  return k;
}

inline GridColoring standard_coloring(GridSize size) {
  return mv_to_coloring(standard_assignment(size));
}

}  // namespace miura
