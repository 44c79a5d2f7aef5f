#pragma once

// Auxiliary planar multidigraph H. Nodes are the interior square corners plus
// one outer node standing for the whole boundary; arc i is the grid segment
// carrying crease i. An arc between squares s and t is oriented clockwise
// around s when K(t) = K(s) + 1 (mod 3). Clockwise is taken in screen
// coordinates (rows grow downward).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/grid.hpp"

namespace miura {

struct Corner {
  int r = 0;  // horizontal grid line, 0..m
  int c = 0;  // vertical grid line, 0..n
};

/// Grid segment endpoints of a crease. H creases run west to east, V creases
/// north to south.
inline std::pair<Corner, Corner> crease_segment(const CreaseId& id) {
  if (id.kind == CreaseKind::H) return {{id.r + 1, id.c}, {id.r + 1, id.c + 1}};
  return {{id.r, id.c + 1}, {id.r + 1, id.c + 1}};
}

/// +1 when the arc runs along crease_segment order, -1 when reversed, for a
/// crease whose canonical dual edge carries color step `weight`.
inline int orientation_for_weight(const CreaseId& id, int weight) {
  if (id.kind == CreaseKind::H) return -weight;
  return id.r % 2 == 0 ? weight : -weight;
}

class AuxDigraph {
 public:
  AuxDigraph() = default;
  explicit AuxDigraph(GridSize size)
      : size_(size),
        first_(static_cast<std::size_t>(size.creases())),
        second_(static_cast<std::size_t>(size.creases())),
        orient_(static_cast<std::size_t>(size.creases()), 0) {
    for (int i = 0; i < size.creases(); ++i) {
      const auto [a, b] = crease_segment(crease_at(size, i));
      first_[static_cast<std::size_t>(i)] = node_of(a);
      second_[static_cast<std::size_t>(i)] = node_of(b);
    }
  }

  [[nodiscard]] GridSize size() const { return size_; }
  [[nodiscard]] int node_count() const { return size_.interior_nodes() + 1; }
  [[nodiscard]] int outer_node() const { return size_.interior_nodes(); }
  [[nodiscard]] int arc_count() const { return static_cast<int>(orient_.size()); }

  [[nodiscard]] int node_of(Corner p) const {
    if (p.r <= 0 || p.r >= size_.rows || p.c <= 0 || p.c >= size_.cols) return outer_node();
    return (p.r - 1) * (size_.cols - 1) + (p.c - 1);
  }
  [[nodiscard]] int node_of(const NodeId& n) const { return node_of(Corner{n.r, n.c}); }
  /// Interior node for a node index; nullopt for the outer node.
  [[nodiscard]] std::optional<NodeId> node_id(int node) const {
    if (node == outer_node()) return std::nullopt;
    return NodeId{node / (size_.cols - 1) + 1, node % (size_.cols - 1) + 1};
  }

  [[nodiscard]] std::pair<int, int> endpoints(int arc) const {
    return {first_[static_cast<std::size_t>(arc)], second_[static_cast<std::size_t>(arc)]};
  }
  [[nodiscard]] bool is_directed(int arc) const { return orient_[static_cast<std::size_t>(arc)] != 0; }
  [[nodiscard]] int orientation(int arc) const { return orient_[static_cast<std::size_t>(arc)]; }
  [[nodiscard]] bool fully_directed() const {
    for (auto o : orient_)
      if (o == 0) return false;
    return true;
  }
  [[nodiscard]] int directed_count() const {
    int k = 0;
    for (auto o : orient_) k += o != 0 ? 1 : 0;
    return k;
  }

  [[nodiscard]] int tail(int arc) const {
    require_directed(arc);
    return orientation(arc) > 0 ? first_[static_cast<std::size_t>(arc)] : second_[static_cast<std::size_t>(arc)];
  }
  [[nodiscard]] int head(int arc) const {
    require_directed(arc);
    return orientation(arc) > 0 ? second_[static_cast<std::size_t>(arc)] : first_[static_cast<std::size_t>(arc)];
  }

  void set_orientation(int arc, int o) {
    if (o != -1 && o != 0 && o != 1) throw std::invalid_argument("orientation must be -1, 0 or +1");
    orient_.at(static_cast<std::size_t>(arc)) = static_cast<std::int8_t>(o);
  }
  /// Orients `arc` so that it leaves `from`.
  void orient_from(int arc, int from) {
    const auto [a, b] = endpoints(arc);
    if (from == a) {
      set_orientation(arc, 1);
    } else if (from == b) {
      set_orientation(arc, -1);
    } else {
      throw std::invalid_argument("node is not an endpoint of the arc");
    }
  }

  [[nodiscard]] int in_degree(int node) const { return degree(node, false); }
  [[nodiscard]] int out_degree(int node) const { return degree(node, true); }

  friend bool operator==(const AuxDigraph&, const AuxDigraph&) = default;

 private:
  void require_directed(int arc) const {
    if (!is_directed(arc)) throw precondition_error("arc " + std::to_string(arc) + " is undirected");
  }
  [[nodiscard]] int degree(int node, bool out) const {
    int d = 0;
    for (int i = 0; i < arc_count(); ++i) {
      if (!is_directed(i)) continue;
      d += ((out ? tail(i) : head(i)) == node) ? 1 : 0;
    }
    return d;
  }

  GridSize size_;
  std::vector<int> first_;
  std::vector<int> second_;
  std::vector<std::int8_t> orient_;
};

inline AuxDigraph build_aux_digraph(const GridColoring& k) {
  require_valid(k);
  AuxDigraph h(k.size());
  for (int i = 0; i < h.arc_count(); ++i) {
    const CreaseId id = crease_at(k.size(), i);
    h.set_orientation(i, orientation_for_weight(id, edge_weight(k, id)));
  }
  return h;
}

inline AuxDigraph build_partial_digraph(const PartialMVAssignment& s) {
  AuxDigraph h(s.size());
  for (int i = 0; i < h.arc_count(); ++i) {
    if (const auto f = s.at_index(i)) h.set_orientation(i, orientation_for_weight(crease_at(s.size(), i), sign(*f)));
  }
  return h;
}

/// Interior nodes all have in-degree 2 and out-degree 2.
inline bool check_eulerian(const AuxDigraph& h) {
  if (!h.fully_directed()) throw precondition_error("check_eulerian needs a fully directed graph");
  std::vector<int> in(static_cast<std::size_t>(h.node_count())), out(in.size());
  for (int i = 0; i < h.arc_count(); ++i) {
    ++out[static_cast<std::size_t>(h.tail(i))];
    ++in[static_cast<std::size_t>(h.head(i))];
  }
  for (int v = 0; v < h.outer_node(); ++v) {
    if (in[static_cast<std::size_t>(v)] != 2 || out[static_cast<std::size_t>(v)] != 2) return false;
  }
  return true;
}

/// Directed cycle of H, arcs listed in traversal order.
struct CycleWitness {
  std::vector<int> arcs;
  std::vector<int> nodes;  // nodes[i] is the tail of arcs[i]
};

/// Finds a directed cycle among the directed arcs not masked out by
/// `removed` (indexed by arc). Iterative DFS, O(V + E). Self-loops count.
inline std::optional<CycleWitness> find_directed_cycle(const AuxDigraph& h,
                                                       std::span<const char> removed = {}) {
  const int nv = h.node_count();
  const auto skip = [&](int arc) {
    return !h.is_directed(arc) || (!removed.empty() && removed[static_cast<std::size_t>(arc)]);
  };

  std::vector<int> start(static_cast<std::size_t>(nv) + 1, 0);
  for (int i = 0; i < h.arc_count(); ++i)
    if (!skip(i)) ++start[static_cast<std::size_t>(h.tail(i)) + 1];
  for (int v = 0; v < nv; ++v) start[static_cast<std::size_t>(v) + 1] += start[static_cast<std::size_t>(v)];
  std::vector<int> adj(static_cast<std::size_t>(start.back()));
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (int i = 0; i < h.arc_count(); ++i)
      if (!skip(i)) adj[static_cast<std::size_t>(fill[static_cast<std::size_t>(h.tail(i))]++)] = i;
  }

  enum : std::uint8_t { white, gray, black };
  std::vector<std::uint8_t> state(static_cast<std::size_t>(nv), white);
  std::vector<int> next(start.begin(), start.end() - 1);
  std::vector<int> via(static_cast<std::size_t>(nv), -1);  // arc used to enter node

  for (int root = 0; root < nv; ++root) {
    if (state[static_cast<std::size_t>(root)] != white) continue;
    std::vector<int> stack{root};
    state[static_cast<std::size_t>(root)] = gray;
    while (!stack.empty()) {
      const int v = stack.back();
      auto& cursor = next[static_cast<std::size_t>(v)];
      if (cursor == start[static_cast<std::size_t>(v) + 1]) {
        state[static_cast<std::size_t>(v)] = black;
        stack.pop_back();
        continue;
      }
      const int arc = adj[static_cast<std::size_t>(cursor++)];
      const int w = h.head(arc);
      if (state[static_cast<std::size_t>(w)] == gray) {
        CycleWitness cyc;
        cyc.arcs.push_back(arc);
        for (int u = v; u != w; u = h.tail(via[static_cast<std::size_t>(u)])) {
          cyc.arcs.push_back(via[static_cast<std::size_t>(u)]);
        }
        std::reverse(cyc.arcs.begin(), cyc.arcs.end());
        for (int a : cyc.arcs) cyc.nodes.push_back(h.tail(a));
        return cyc;
      }
      if (state[static_cast<std::size_t>(w)] == white) {
        state[static_cast<std::size_t>(w)] = gray;
        via[static_cast<std::size_t>(w)] = arc;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

struct ForcingReport {
  bool forcing = false;
  std::optional<CycleWitness> witness;
};

/// F is forcing for K iff H minus the arcs of F is acyclic.
inline ForcingReport is_forcing(const GridColoring& k, std::span<const CreaseId> forcing_set) {
  const AuxDigraph h = build_aux_digraph(k);
  std::vector<char> removed(static_cast<std::size_t>(h.arc_count()), 0);
  for (const auto& id : forcing_set) removed[static_cast<std::size_t>(crease_index(k.size(), id))] = 1;
  ForcingReport report;
  report.witness = find_directed_cycle(h, removed);
  report.forcing = !report.witness.has_value();
  return report;
}

inline std::vector<CreaseId> witness_creases(GridSize size, const CycleWitness& w) {
  std::vector<CreaseId> out;
  out.reserve(w.arcs.size());
  for (int a : w.arcs) out.push_back(crease_at(size, a));
  return out;
}

}  // namespace miura
