#pragma once

// Constructive forcing sets: domino tilings for the standard assignment and
// the linear-time greedy block algorithm for an arbitrary valid coloring.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/grid.hpp"
#include "miura/min_forcing.hpp"

namespace miura {

struct Domino {
  Cell first;
  Cell second;  // right of or below `first`

  [[nodiscard]] bool horizontal() const { return first.r == second.r; }
  [[nodiscard]] CreaseId crossed_crease() const { return crease_between(first, second); }
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

class DominoTiling {
 public:
  DominoTiling(GridSize size, std::vector<Domino> dominoes, std::optional<Cell> uncovered = std::nullopt)
      : size_(size), dominoes_(std::move(dominoes)), uncovered_(uncovered) {
    validate();
  }

  [[nodiscard]] GridSize size() const { return size_; }
  [[nodiscard]] const std::vector<Domino>& dominoes() const { return dominoes_; }
  [[nodiscard]] std::optional<Cell> uncovered() const { return uncovered_; }

  /// Creases crossed by the dominoes, sorted.
  [[nodiscard]] ForcingSet crossed_creases() const {
    ForcingSet out;
    for (const auto& d : dominoes_) out.push_back(d.crossed_crease());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Index of the domino covering `cell`, if any.
  [[nodiscard]] std::optional<std::size_t> covering(Cell cell) const {
    for (std::size_t i = 0; i < dominoes_.size(); ++i) {
      if (dominoes_[i].first == cell || dominoes_[i].second == cell) return i;
    }
    return std::nullopt;
  }

  /// Whether the 2x2 square with top-left `corner` is covered by two
  /// parallel dominoes.
  [[nodiscard]] bool flippable(Cell corner) const {
    if (!size_.contains_cell(corner.r + 1, corner.c + 1)) return false;
    const auto a = covering(corner);
    const auto b = covering({corner.r + 1, corner.c + 1});
    if (!a || !b || *a == *b) return false;
    const Domino& da = dominoes_[*a];
    const Domino& db = dominoes_[*b];
    if (da.horizontal() != db.horizontal()) return false;
    if (da.horizontal()) return da.second == Cell{corner.r, corner.c + 1} && db.first == Cell{corner.r + 1, corner.c};
    return da.second == Cell{corner.r + 1, corner.c} && db.first == Cell{corner.r, corner.c + 1};
  }

  /// Rotates the parallel pair in the 2x2 square at `corner` by 90 degrees.
  void flip(Cell corner) {
    if (!flippable(corner)) throw std::invalid_argument("2x2 square is not covered by a parallel domino pair");
    const std::size_t a = *covering(corner);
    const std::size_t b = *covering({corner.r + 1, corner.c + 1});
    if (dominoes_[a].horizontal()) {
      dominoes_[a] = {corner, {corner.r + 1, corner.c}};
      dominoes_[b] = {{corner.r, corner.c + 1}, {corner.r + 1, corner.c + 1}};
    } else {
      dominoes_[a] = {corner, {corner.r, corner.c + 1}};
      dominoes_[b] = {{corner.r + 1, corner.c}, {corner.r + 1, corner.c + 1}};
    }
  }

 private:
  void validate() const {
    std::vector<int> cover(static_cast<std::size_t>(size_.cells()), 0);
    const auto mark = [&](Cell s) {
      if (!size_.contains_cell(s.r, s.c)) throw std::invalid_argument("domino leaves the grid");
      ++cover[static_cast<std::size_t>(s.r * size_.cols + s.c)];
    };
    for (const auto& d : dominoes_) {
      const bool adjacent = (d.first.r == d.second.r && d.second.c == d.first.c + 1) ||
                            (d.first.c == d.second.c && d.second.r == d.first.r + 1);
      if (!adjacent) throw std::invalid_argument("domino cells must be edge-adjacent, second right of or below first");
      mark(d.first);
      mark(d.second);
    }
    if (uncovered_) mark(*uncovered_);
    for (int x : cover)
      if (x != 1) throw std::invalid_argument("dominoes must cover every cell exactly once");
  }

  GridSize size_;
  std::vector<Domino> dominoes_;
  std::optional<Cell> uncovered_;
};

/// Horizontal dominoes; when the column count is odd the last column takes
/// vertical dominoes; when both counts are odd the bottom-right cell is left
/// uncovered.
inline DominoTiling canonical_tiling(GridSize size) {
  const int m = size.rows;
  const int n = size.cols;
  std::vector<Domino> dominoes;
  const int paired_cols = n - n % 2;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c + 1 < paired_cols; c += 2)
      dominoes.push_back({{r, c}, {r, c + 1}});
  std::optional<Cell> uncovered;
  if (n % 2 == 1) {
    for (int r = 0; r + 1 < m; r += 2) dominoes.push_back({{r, n - 1}, {r + 1, n - 1}});
    if (m % 2 == 1) uncovered = Cell{m - 1, n - 1};
  }
  return DominoTiling(size, std::move(dominoes), uncovered);
}

/// Forcing set for standard_assignment(size) built from the canonical domino
/// tiling: the crossed creases, plus the crease above the uncovered
/// bottom-right cell when m and n are both odd. A 1 x n or m x 1 pattern has
/// no nodes, so nothing propagates and every crease is returned.
inline ForcingSet domino_forcing_standard(GridSize size) {
  if (size.rows == 1 || size.cols == 1) return all_creases(size);
  const DominoTiling tiling = canonical_tiling(size);
  ForcingSet out = tiling.crossed_creases();
  if (const auto cell = tiling.uncovered()) out.push_back({CreaseKind::H, cell->r - 1, cell->c});
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// One 2x2 block step. `a`, `a2` are already forced and adjacent; `b` is the
/// new cell next to `a`, `b2` the new cell next to `a2` (and to `b`). Returns
/// the single crease that forces both new cells.
inline CreaseId block_rule(const GridColoring& k, Cell a, Cell a2, Cell b, Cell b2) {
  if (k(b) == k(a2) && k(b2) == k(a)) return crease_between(b, b2);  // 2-colored block
  // 3-colored: tie the new cell whose block neighbours share a color to its
  // forced neighbour
  if (k(a) == k(b2)) return crease_between(a, b);
  return crease_between(a2, b2);
}

}  // namespace detail

/// Greedy forcing set of size ceil(mn/2) for any valid coloring with m, n >= 2.
/// Rows are handled in pairs, blocks left to right; an odd last row is
/// covered by blocks whose forced pair lies in the row above. On 1 x n and
/// m x 1 grids, where every crease is its own cycle in H, all creases are
/// returned.
inline ForcingSet greedy_forcing(const GridColoring& k) {
  require_valid(k);
  const int m = k.size().rows;
  const int n = k.size().cols;
  ForcingSet out;
  if (m == 1 || n == 1) {
    out = all_creases(k.size());
    return out;
  }

  const auto rule = [&](Cell a, Cell a2, Cell b, Cell b2) { out.push_back(detail::block_rule(k, a, a2, b, b2)); };

  for (int top = 0; top + 1 < m; top += 2) {
    if (top == 0) {
      out.push_back({CreaseKind::H, 0, 0});
    } else {
      // transition block: forced pair on the previous row pair's bottom row
      rule({top - 1, 0}, {top - 1, 1}, {top, 0}, {top, 1});
      rule({top, 0}, {top, 1}, {top + 1, 0}, {top + 1, 1});
    }
    for (int c = top == 0 ? 0 : 1; c + 1 < n; ++c) {
      rule({top, c}, {top + 1, c}, {top, c + 1}, {top + 1, c + 1});
    }
  }
  if (m % 2 == 1) {
    const int r = m - 1;
    int c = 0;
    for (; c + 1 < n; c += 2) rule({r - 1, c}, {r - 1, c + 1}, {r, c}, {r, c + 1});
    if (c < n) out.push_back({CreaseKind::H, r - 1, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace miura
