#pragma once

// Random valid colorings (equivalently random locally flat-foldable MV
// assignments). Exactly uniform through a row-by-row transfer matrix when the
// narrower side has at most kMaxTransferWidth cells; otherwise each cell
// takes a uniformly random color among those its left and upper neighbours
// allow (valid, but not uniform over colorings).

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/grid.hpp"

namespace miura {

inline constexpr int kMaxTransferWidth = 8;

/// Uniform double in [0, 1) from 53 random bits; portable across standard
/// libraries, unlike std::uniform_real_distribution.
inline double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace detail {

inline std::vector<std::vector<int>> proper_rows(int width) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row(static_cast<std::size_t>(width));
  auto extend = [&](auto&& self, int i) -> void {
    if (i == width) {
      rows.push_back(row);
      return;
    }
    for (int color = 0; color < 3; ++color) {
      if (i > 0 && row[static_cast<std::size_t>(i) - 1] == color) continue;
      row[static_cast<std::size_t>(i)] = color;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  return rows;
}

inline bool rows_compatible(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) return false;
  return true;
}

template <class Weights>
std::size_t pick_weighted(std::mt19937_64& rng, const std::vector<int>& candidates, const Weights& weight) {
  double total = 0;
  for (int s : candidates) total += weight(s);
  double u = unit_interval(rng) * total;
  for (int s : candidates) {
    u -= weight(s);
    if (u < 0) return static_cast<std::size_t>(s);
  }
  return static_cast<std::size_t>(candidates.back());
}

}  // namespace detail

/// Draws a valid coloring (K(0,0) = 0) of the given size.
inline GridColoring random_coloring(GridSize size, std::mt19937_64& rng) {
  GridColoring k(size);
  const bool transpose = size.cols > kMaxTransferWidth && size.rows < size.cols;
  const int height = transpose ? size.cols : size.rows;
  const int width = transpose ? size.rows : size.cols;
  const auto put = [&](int i, int j, int color) {
    if (transpose) {
      k.set(j, i, color);
    } else {
      k.set(i, j, color);
    }
  };

  if (width > kMaxTransferWidth) {
    // cell by cell; each cell avoids its left and upper neighbours
    for (int r = 0; r < size.rows; ++r) {
      for (int c = 0; c < size.cols; ++c) {
        if (r == 0 && c == 0) continue;
        int options[3];
        int n = 0;
        for (int color = 0; color < 3; ++color) {
          if (c > 0 && color == k(r, c - 1)) continue;
          if (r > 0 && color == k(r - 1, c)) continue;
          options[n++] = color;
        }
        k.set(r, c, options[rng() % static_cast<std::uint64_t>(n)]);
      }
    }
    return k;
  }

  const auto rows = detail::proper_rows(width);
  const int ns = static_cast<int>(rows.size());
  std::vector<int> first;
  std::vector<std::vector<int>> next(static_cast<std::size_t>(ns));
  for (int s = 0; s < ns; ++s) {
    if (rows[static_cast<std::size_t>(s)][0] == 0) first.push_back(s);
    for (int t = 0; t < ns; ++t)
      if (detail::rows_compatible(rows[static_cast<std::size_t>(s)], rows[static_cast<std::size_t>(t)]))
        next[static_cast<std::size_t>(s)].push_back(t);
  }

  // weight[r][s]: number of completions of rows r.. given row r = s, rescaled
  // per row to stay in floating-point range
  std::vector<std::vector<double>> weight(static_cast<std::size_t>(height),
                                          std::vector<double>(static_cast<std::size_t>(ns), 1.0));
  for (int r = height - 2; r >= 0; --r) {
    auto& w = weight[static_cast<std::size_t>(r)];
    const auto& below = weight[static_cast<std::size_t>(r) + 1];
    double peak = 0;
    for (int s = 0; s < ns; ++s) {
      double sum = 0;
      for (int t : next[static_cast<std::size_t>(s)]) sum += below[static_cast<std::size_t>(t)];
      w[static_cast<std::size_t>(s)] = sum;
      peak = std::max(peak, sum);
    }
    for (auto& x : w) x /= peak;
  }

  std::size_t s = detail::pick_weighted(rng, first, [&](int t) { return weight[0][static_cast<std::size_t>(t)]; });
  for (int i = 0; i < height; ++i) {
    if (i > 0) {
      const auto& w = weight[static_cast<std::size_t>(i)];
      s = detail::pick_weighted(rng, next[s], [&](int t) { return w[static_cast<std::size_t>(t)]; });
    }
    for (int j = 0; j < width; ++j) put(i, j, rows[s][static_cast<std::size_t>(j)]);
  }
  return k;
}

inline GridColoring random_coloring(GridSize size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_coloring(size, rng);
}

}  // namespace miura
