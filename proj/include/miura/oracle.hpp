#pragma once

// Brute-force reference implementations for tiny grids, plus difference
// graphs of coloring pairs and the uniform curves they contain. Everything
// here is exponential and guarded by explicit size limits.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "miura/aux_digraph.hpp"
#include "miura/coloring.hpp"
#include "miura/grid.hpp"
#include "miura/min_forcing.hpp"

namespace miura {

inline constexpr int kEnumerationCellLimit = 20;
inline constexpr int kSubsetSearchCellLimit = 9;
inline constexpr int kOrientationArcLimit = 24;

class size_guard_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleOptions {
  bool allow_large = false;
};

namespace detail {

inline void guard(bool exceeded, const std::string& what, const OracleOptions& opts) {
  if (exceeded && !opts.allow_large) throw size_guard_error(what + " refused: grid too large (pass allow_large to override)");
}

}  // namespace detail

/// Calls `visit` on every valid coloring of `size` (K(0,0) = 0), in
/// lexicographic row-major order.
template <class Visitor>
void for_each_coloring(GridSize size, Visitor&& visit, const OracleOptions& opts = {}) {
  detail::guard(size.cells() > kEnumerationCellLimit, "coloring enumeration", opts);
  GridColoring k(size);
  const int cells = size.cells();
  auto extend = [&](auto&& self, int i) -> void {
    if (i == cells) {
      visit(static_cast<const GridColoring&>(k));
      return;
    }
    const int r = i / size.cols;
    const int c = i % size.cols;
    for (int color = 0; color < (i == 0 ? 1 : 3); ++color) {
      if (c > 0 && k(r, c - 1) == color) continue;
      if (r > 0 && k(r - 1, c) == color) continue;
      k.set(r, c, color);
      self(self, i + 1);
    }
  };
  extend(extend, 0);
}

inline std::vector<GridColoring> enumerate_colorings(GridSize size, const OracleOptions& opts = {}) {
  std::vector<GridColoring> out;
  for_each_coloring(size, [&](const GridColoring& k) { out.push_back(k); }, opts);
  return out;
}

/// Creases on which two colorings have different color steps.
inline std::vector<int> differing_creases(const GridColoring& a, const GridColoring& b) {
  std::vector<int> out;
  for (int i = 0; i < a.size().creases(); ++i) {
    const CreaseId id = crease_at(a.size(), i);
    if (edge_weight(a, id) != edge_weight(b, id)) out.push_back(i);
  }
  return out;
}

/// Definition check: K is the only valid coloring agreeing with K's color
/// steps on every crease of F.
inline bool brute_is_forcing(const GridColoring& k, std::span<const CreaseId> f, const OracleOptions& opts = {}) {
  require_valid(k);
  std::vector<int> weights;
  for (const auto& id : f) weights.push_back(edge_weight(k, id));
  int agreeing = 0;
  for_each_coloring(
      k.size(),
      [&](const GridColoring& other) {
        for (std::size_t i = 0; i < f.size(); ++i)
          if (edge_weight(other, f[i]) != weights[i]) return;
        ++agreeing;
      },
      opts);
  return agreeing == 1;
}

/// Smallest forcing set by subset search in increasing size; among sets of
/// that size the first in lexicographic crease-index order.
inline ForcingSet brute_min_forcing(const GridColoring& k, const OracleOptions& opts = {}) {
  require_valid(k);
  const GridSize size = k.size();
  detail::guard(size.cells() > kSubsetSearchCellLimit, "subset search", opts);
  const int ne = size.creases();
  if (ne > 63) throw size_guard_error("subset search supports at most 63 creases");

  // F forces K iff it meets the differing-crease mask of every other coloring
  std::vector<std::uint64_t> masks;
  for_each_coloring(
      size,
      [&](const GridColoring& other) {
        if (other == k) return;
        std::uint64_t mask = 0;
        for (int i : differing_creases(k, other)) mask |= std::uint64_t{1} << i;
        masks.push_back(mask);
      },
      opts);
  const auto forcing = [&](std::uint64_t f) {
    return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & f) != 0; });
  };

  std::optional<std::uint64_t> found;
  auto search = [&](auto&& self, int from, int left, std::uint64_t f) -> void {
    if (found) return;
    if (left == 0) {
      if (forcing(f)) found = f;
      return;
    }
    for (int i = from; i <= ne - left && !found; ++i) self(self, i + 1, left - 1, f | (std::uint64_t{1} << i));
  };
  for (int size_f = 0; size_f <= ne && !found; ++size_f) search(search, 0, size_f, 0);

  ForcingSet out;
  for (int i = 0; i < ne; ++i)
    if ((*found >> i) & 1) out.push_back(crease_at(size, i));
  return out;
}

/// Some total locally flat-foldable assignment agreeing with `s`, found by
/// enumeration (the first in coloring order).
inline std::optional<MVAssignment> brute_extension(const PartialMVAssignment& s, const OracleOptions& opts = {}) {
  std::optional<MVAssignment> found;
  for_each_coloring(
      s.size(),
      [&](const GridColoring& k) {
        if (found) return;
        const MVAssignment mv = coloring_to_mv(k);
        for (int i = 0; i < s.size().creases(); ++i) {
          const auto want = s.at_index(i);
          if (want && *want != mv.at_index(i)) return;
        }
        found = mv;
      },
      opts);
  return found;
}

/// Definition check: F forces every valid coloring.
inline bool brute_is_controlling(GridSize size, std::span<const CreaseId> f, const OracleOptions& opts = {}) {
  const auto all = enumerate_colorings(size, opts);
  return std::all_of(all.begin(), all.end(), [&](const GridColoring& k) { return brute_is_forcing(k, f, opts); });
}

/// Every orientation of H in which all interior nodes have in = out = 2,
/// by trying all 2^arcs orientations.
inline std::vector<AuxDigraph> enumerate_eulerian_orientations(GridSize size, const OracleOptions& opts = {}) {
  AuxDigraph h(size);
  detail::guard(h.arc_count() > kOrientationArcLimit, "orientation enumeration", opts);
  std::vector<AuxDigraph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.arc_count()); ++bits) {
    for (int i = 0; i < h.arc_count(); ++i) h.set_orientation(i, ((bits >> i) & 1) ? 1 : -1);
    if (check_eulerian(h)) out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Difference graphs

/// Closed curve or boundary-to-boundary path of grid segments, listed in the
/// direction of its arcs in H(K1). nodes[i] is the tail of arcs[i].
struct UniformCurve {
  std::vector<int> arcs;
  std::vector<int> nodes;
  bool closed = false;
};

struct DifferenceGraph {
  GridSize size;
  std::vector<int> type;       // per cell, K2 - K1 as 0, +1 or -1
  std::vector<int> polyomino;  // per cell, component id in row-major discovery order
  int polyomino_count = 0;
  std::vector<NodeId> hubs;    // corners with four boundary segments
  std::vector<UniformCurve> curves;

  [[nodiscard]] int type_at(Cell s) const { return type[static_cast<std::size_t>(s.r * size.cols + s.c)]; }
};

/// Types, polyominoes, hubs and uniform curves of the pair (K1, K2). Where
/// four boundary segments meet, the curves are smoothed into two right
/// angles: when the squares NE and SW have types different from each other
/// (three types present) those two squares are wrapped; when NW and SE do,
/// those are wrapped; a two-type checkerboard hub always wraps NE and SW.
inline DifferenceGraph difference_graph(const GridColoring& k1, const GridColoring& k2) {
  if (!(k1.size() == k2.size())) throw precondition_error("difference_graph needs colorings of the same size");
  require_valid(k1);
  require_valid(k2);
  const GridSize size = k1.size();
  const int m = size.rows;
  const int n = size.cols;
  const auto cell_index = [&](Cell s) { return static_cast<std::size_t>(s.r * n + s.c); };

  DifferenceGraph g;
  g.size = size;
  g.type.resize(static_cast<std::size_t>(size.cells()));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) g.type[cell_index({r, c})] = color_step(k1(r, c), k2(r, c));

  g.polyomino.assign(static_cast<std::size_t>(size.cells()), -1);
  for (int start = 0; start < size.cells(); ++start) {
    if (g.polyomino[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = g.polyomino_count++;
    std::vector<Cell> stack{{start / n, start % n}};
    g.polyomino[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const Cell s = stack.back();
      stack.pop_back();
      for (const Cell t : {Cell{s.r - 1, s.c}, Cell{s.r + 1, s.c}, Cell{s.r, s.c - 1}, Cell{s.r, s.c + 1}}) {
        if (!size.contains_cell(t.r, t.c) || g.polyomino[cell_index(t)] >= 0) continue;
        if (g.type[cell_index(t)] != g.type[cell_index(s)]) continue;
        g.polyomino[cell_index(t)] = id;
        stack.push_back(t);
      }
    }
  }

  const AuxDigraph h(size);
  const AuxDigraph h1 = build_aux_digraph(k1);
  const int ne = size.creases();
  std::vector<char> boundary(static_cast<std::size_t>(ne), 0);
  for (int i = 0; i < ne; ++i) {
    const auto [a, b] = crease_cells(crease_at(size, i));
    boundary[static_cast<std::size_t>(i)] = g.type[cell_index(a)] != g.type[cell_index(b)];
  }

  // link[2 * arc + end] = arc continuing the curve at endpoint `end` (0 first,
  // 1 second) of `arc`, or -1 at the outer boundary
  std::vector<int> link(2 * static_cast<std::size_t>(ne), -1);
  const auto join = [&](int a, int b, int node) {
    link[2 * static_cast<std::size_t>(a) + (h.endpoints(a).first == node ? 0 : 1)] = b;
    link[2 * static_cast<std::size_t>(b) + (h.endpoints(b).first == node ? 0 : 1)] = a;
  };
  for (int r = 1; r < m; ++r) {
    for (int c = 1; c < n; ++c) {
      const int node = h.node_of(Corner{r, c});
      const int north = crease_index(size, {CreaseKind::V, r - 1, c - 1});
      const int south = crease_index(size, {CreaseKind::V, r, c - 1});
      const int west = crease_index(size, {CreaseKind::H, r - 1, c - 1});
      const int east = crease_index(size, {CreaseKind::H, r - 1, c});
      std::vector<int> present;
      for (int a : {north, south, west, east})
        if (boundary[static_cast<std::size_t>(a)]) present.push_back(a);
      if (present.empty()) continue;
      if (present.size() == 2) {
        join(present[0], present[1], node);
        continue;
      }
      if (present.size() != 4) throw std::logic_error("difference graph corner with an odd number of boundary segments");
      g.hubs.push_back({r, c});
      const int ne_type = g.type_at({r - 1, c});
      const int sw_type = g.type_at({r, c - 1});
      const int nw_type = g.type_at({r - 1, c - 1});
      const int se_type = g.type_at({r, c});
      if (nw_type != se_type && ne_type == sw_type) {
        join(north, west, node);  // wrap NW
        join(south, east, node);  // wrap SE
      } else {
        join(north, east, node);  // wrap NE
        join(south, west, node);  // wrap SW
      }
    }
  }

  std::vector<char> used(static_cast<std::size_t>(ne), 0);
  const auto trace = [&](int first_arc, int from) {
    UniformCurve curve;
    std::vector<int> walk_nodes;
    int arc = first_arc;
    int node = from;
    while (arc >= 0 && !used[static_cast<std::size_t>(arc)]) {
      used[static_cast<std::size_t>(arc)] = 1;
      curve.arcs.push_back(arc);
      walk_nodes.push_back(node);
      const auto [a, b] = h.endpoints(arc);
      const int end = a == node ? 1 : 0;
      node = end == 1 ? b : a;
      arc = node == h.outer_node() ? -1 : link[2 * static_cast<std::size_t>(arc) + static_cast<std::size_t>(end)];
    }
    curve.closed = arc >= 0;
    if (h1.tail(curve.arcs.front()) != walk_nodes.front()) {
      std::reverse(curve.arcs.begin(), curve.arcs.end());
    }
    for (int a : curve.arcs) curve.nodes.push_back(h1.tail(a));
    return curve;
  };
  for (int i = 0; i < ne; ++i) {
    if (!boundary[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(i)]) continue;
    const auto [a, b] = h.endpoints(i);
    if (a == h.outer_node()) g.curves.push_back(trace(i, a));
    else if (b == h.outer_node()) g.curves.push_back(trace(i, b));
  }
  for (int i = 0; i < ne; ++i) {
    if (boundary[static_cast<std::size_t>(i)] && !used[static_cast<std::size_t>(i)])
      g.curves.push_back(trace(i, h.endpoints(i).first));
  }
  return g;
}

/// Splits the cells by a curve: crossing one of `arcs` switches side, and
/// (0, 0) is on side 0. A curve may touch itself at a hub, so a side need
/// not be connected. Throws if the arcs do not split the cells consistently.
inline std::vector<int> curve_sides(GridSize size, std::span<const int> arcs) {
  std::vector<char> blocked(static_cast<std::size_t>(size.creases()), 0);
  for (int a : arcs) blocked[static_cast<std::size_t>(a)] = 1;
  std::vector<int> side(static_cast<std::size_t>(size.cells()), -1);
  std::vector<Cell> stack{{0, 0}};
  side[0] = 0;
  while (!stack.empty()) {
    const Cell s = stack.back();
    stack.pop_back();
    const int here = side[static_cast<std::size_t>(s.r * size.cols + s.c)];
    for (const Cell t : {Cell{s.r - 1, s.c}, Cell{s.r + 1, s.c}, Cell{s.r, s.c - 1}, Cell{s.r, s.c + 1}}) {
      if (!size.contains_cell(t.r, t.c)) continue;
      const auto ti = static_cast<std::size_t>(t.r * size.cols + t.c);
      const int there = here ^ blocked[static_cast<std::size_t>(crease_index(size, crease_between(s, t)))];
      if (side[ti] == -1) {
        side[ti] = there;
        stack.push_back(t);
      } else if (side[ti] != there) {
        throw precondition_error("arcs do not separate the grid into two sides");
      }
    }
  }
  return side;
}

/// Reverses the color step across a uniform curve of K by adding that step to
/// every cell on side 1, then re-anchors K(0,0) = 0. Throws if the step is
/// not constant across the curve.
inline GridColoring flip_across_curve(const GridColoring& k, std::span<const int> arcs) {
  const GridSize size = k.size();
  const auto side = curve_sides(size, arcs);
  int step = 0;
  for (int a : arcs) {
    auto [s, t] = crease_cells(crease_at(size, a));
    if (side[static_cast<std::size_t>(s.r * size.cols + s.c)] == 1) std::swap(s, t);
    const int here = color_step(k(s), k(t));
    if (step != 0 && here != step) throw precondition_error("color step is not constant across the curve");
    step = here;
  }
  GridColoring out = k;
  for (int i = 0; i < size.cells(); ++i)
    if (side[static_cast<std::size_t>(i)] == 1) out.set(i / size.cols, i % size.cols, k(i / size.cols, i % size.cols) + step);
  return out.normalized();
}

}  // namespace miura
