#pragma once

// Shared test helpers: hand-rolled generators for property tests and naive
// reference computations that do not go through the library's algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/grid.hpp"
#include "miura/sampling.hpp"

namespace miura::support {

inline std::vector<GridSize> sizes_up_to(int max_rows, int max_cols, int min_side = 1) {
  std::vector<GridSize> out;
  for (int m = min_side; m <= max_rows; ++m)
    for (int n = min_side; n <= max_cols; ++n) out.emplace_back(m, n);
  return out;
}

/// All 3^(mn) color arrays with (0,0) = 0 that are proper, counted without
/// any pruning.
inline std::vector<GridColoring> naive_colorings(GridSize size) {
  std::vector<GridColoring> out;
  const int cells = size.cells();
  std::uint64_t total = 1;
  for (int i = 1; i < cells; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    GridColoring k(size);
    std::uint64_t x = code;
    for (int i = cells - 1; i >= 1; --i) {
      k.set(i / size.cols, i % size.cols, static_cast<int>(x % 3));
      x /= 3;
    }
    if (is_proper(k)) out.push_back(k);
  }
  return out;
}

/// Every colour step of `k` recomputed straight from the definition.
inline int naive_step(const GridColoring& k, Cell from, Cell to) {
  const int d = ((k(to) - k(from)) % 3 + 3) % 3;
  return d == 1 ? 1 : -1;
}

inline PartialMVAssignment random_partial(const MVAssignment& total, double keep, std::mt19937_64& rng) {
  PartialMVAssignment p(total.size());
  for (int i = 0; i < total.size().creases(); ++i)
    if (unit_interval(rng) < keep) p.set_index(i, total.at_index(i));
  return p;
}

inline MVAssignment random_assignment(GridSize size, std::mt19937_64& rng) {
  MVAssignment a(size, Fold::mountain);
  for (int i = 0; i < size.creases(); ++i) a.set_index(i, (rng() & 1) ? Fold::mountain : Fold::valley);
  return a;
}

inline std::vector<CreaseId> subset_of(GridSize size, std::uint64_t mask) {
  std::vector<CreaseId> out;
  for (int i = 0; i < size.creases(); ++i)
    if ((mask >> i) & 1) out.push_back(crease_at(size, i));
  return out;
}

}  // namespace miura::support
