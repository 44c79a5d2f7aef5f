#pragma once

// Completing a partial MV assignment. Assigned creases pre-orient their arcs
// of H; the remaining arcs must be oriented so that every interior node has
// in-degree = out-degree, which is a circulation problem on the undirected
// arcs. Leftover undirected arcs form an even-degree graph and are oriented
// cycle by cycle. The resulting Eulerian orientation maps back to a coloring
// and from there to a full assignment.

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "miura/aux_digraph.hpp"
#include "miura/coloring.hpp"
#include "miura/grid.hpp"

namespace miura {

/// Unit-capacity flow problem over the undirected arcs of a partial H.
/// imbalance[v] > 0 is supply (v has more pre-directed in-arcs than
/// out-arcs), < 0 is demand.
struct FlowNetwork {
  int node_count = 0;
  std::vector<int> arcs;  // undirected arc ids of H
  std::vector<std::pair<int, int>> ends;
  std::vector<int> imbalance;
};

inline FlowNetwork build_flow_network(const AuxDigraph& h) {
  FlowNetwork net;
  net.node_count = h.node_count();
  net.imbalance.assign(static_cast<std::size_t>(h.node_count()), 0);
  for (int a = 0; a < h.arc_count(); ++a) {
    if (h.is_directed(a)) {
      // one unit of demand at the tail, one unit of supply at the head
      --net.imbalance[static_cast<std::size_t>(h.tail(a))];
      ++net.imbalance[static_cast<std::size_t>(h.head(a))];
    } else {
      net.arcs.push_back(a);
      net.ends.push_back(h.endpoints(a));
    }
  }
  return net;
}

struct Circulation {
  bool feasible = false;
  /// (arc, tail) for every arc that carries one unit of flow
  std::vector<std::pair<int, int>> oriented;
  /// nodes whose supply or demand could not be met (empty when feasible)
  std::vector<int> unmet;
};

/// Feasible circulation by reduction to max flow: a super source feeds the
/// supply nodes, demand nodes drain to a super sink, and each undirected arc
/// carries at most one unit in either direction. Augmenting paths are found
/// breadth-first.
inline Circulation solve_circulation(const FlowNetwork& net) {
  struct Edge {
    int to;
    int cap;
  };
  const int source = net.node_count;
  const int sink = net.node_count + 1;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(net.node_count) + 2);
  const auto add = [&](int u, int v, int cap, int back_cap) {
    adj[static_cast<std::size_t>(u)].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap});
    adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, back_cap});
  };

  std::vector<int> arc_edge;
  for (const auto& [u, v] : net.ends) {
    arc_edge.push_back(static_cast<int>(edges.size()));
    add(u, v, 1, 1);
  }
  int required = 0;
  for (int v = 0; v < net.node_count; ++v) {
    const int b = net.imbalance[static_cast<std::size_t>(v)];
    if (b > 0) {
      add(source, v, b, 0);
      required += b;
    } else if (b < 0) {
      add(v, sink, -b, 0);
    }
  }

  int flow = 0;
  std::vector<int> via(adj.size());
  for (;;) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{source};
    via[static_cast<std::size_t>(source)] = std::numeric_limits<int>::max();
    while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int e : adj[static_cast<std::size_t>(u)]) {
        const Edge& edge = edges[static_cast<std::size_t>(e)];
        if (edge.cap > 0 && via[static_cast<std::size_t>(edge.to)] == -1) {
          via[static_cast<std::size_t>(edge.to)] = e;
          queue.push_back(edge.to);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -1) break;
    int push = std::numeric_limits<int>::max();
    for (int v = sink; v != source; v = edges[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to)
      push = std::min(push, edges[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].cap);
    for (int v = sink; v != source; v = edges[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to) {
      edges[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].cap -= push;
      edges[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].cap += push;
    }
    flow += push;
  }

  Circulation out;
  out.feasible = flow == required;
  if (!out.feasible) {
    for (int e : adj[static_cast<std::size_t>(source)])
      if (edges[static_cast<std::size_t>(e)].cap > 0) out.unmet.push_back(edges[static_cast<std::size_t>(e)].to);
    for (int e : adj[static_cast<std::size_t>(sink)]) {
      // residual back edge of v -> sink; its capacity is the flow delivered
      const int v = edges[static_cast<std::size_t>(e)].to;
      if (edges[static_cast<std::size_t>(e ^ 1)].cap > 0) out.unmet.push_back(v);
    }
    std::sort(out.unmet.begin(), out.unmet.end());
    return out;
  }
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const int e = arc_edge[i];
    // net flow u -> v is (cap(v -> u) - cap(u -> v)) / 2
    const int net_flow = (edges[static_cast<std::size_t>(e ^ 1)].cap - edges[static_cast<std::size_t>(e)].cap) / 2;
    if (net_flow > 0) out.oriented.emplace_back(net.arcs[i], net.ends[i].first);
    if (net_flow < 0) out.oriented.emplace_back(net.arcs[i], net.ends[i].second);
  }
  return out;
}

/// Decomposes the undirected arcs of `h` into arc-disjoint simple cycles and
/// orients each along its traversal. Walks always start from the smallest
/// unused arc and continue along the smallest unused incident arc.
inline std::vector<CycleWitness> veblen_orient(AuxDigraph& h) {
  const int nv = h.node_count();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nv));
  std::vector<int> degree(static_cast<std::size_t>(nv), 0);
  for (int a = 0; a < h.arc_count(); ++a) {
    if (h.is_directed(a)) continue;
    const auto [u, v] = h.endpoints(a);
    incident[static_cast<std::size_t>(u)].push_back(a);
    if (v != u) incident[static_cast<std::size_t>(v)].push_back(a);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < nv; ++v) {
    if (degree[static_cast<std::size_t>(v)] % 2 != 0) {
      throw std::logic_error("undirected remainder has a node of odd degree");
    }
  }

  std::vector<char> used(static_cast<std::size_t>(h.arc_count()), 0);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(nv), 0);
  const auto next_unused = [&](int v) -> int {
    auto& i = cursor[static_cast<std::size_t>(v)];
    const auto& list = incident[static_cast<std::size_t>(v)];
    while (i < list.size() && used[static_cast<std::size_t>(list[i])]) ++i;
    return i < list.size() ? list[i] : -1;
  };
  const auto other_end = [&](int a, int v) {
    const auto [x, y] = h.endpoints(a);
    return x == v ? y : x;
  };

  std::vector<CycleWitness> cycles;
  for (int start = 0; start < h.arc_count(); ++start) {
    if (h.is_directed(start) || used[static_cast<std::size_t>(start)]) continue;
    // walk until the trail closes; peel off a simple cycle whenever a node
    // on the current path repeats
    std::vector<int> path_nodes{h.endpoints(start).first};
    std::vector<int> path_arcs;
    std::vector<int> position(static_cast<std::size_t>(nv), -1);
    position[static_cast<std::size_t>(path_nodes.back())] = 0;
    int arc = start;
    while (arc != -1) {
      used[static_cast<std::size_t>(arc)] = 1;
      const int from = path_nodes.back();
      const int to = other_end(arc, from);
      path_arcs.push_back(arc);
      const int seen_at = position[static_cast<std::size_t>(to)];
      if (seen_at >= 0) {
        CycleWitness cyc;
        for (std::size_t i = static_cast<std::size_t>(seen_at); i < path_arcs.size(); ++i) {
          cyc.arcs.push_back(path_arcs[i]);
          cyc.nodes.push_back(path_nodes[i]);
          h.orient_from(path_arcs[i], path_nodes[i]);
        }
        for (std::size_t i = static_cast<std::size_t>(seen_at) + 1; i < path_nodes.size(); ++i)
          position[static_cast<std::size_t>(path_nodes[i])] = -1;
        path_nodes.resize(static_cast<std::size_t>(seen_at) + 1);
        path_arcs.resize(static_cast<std::size_t>(seen_at));
        cycles.push_back(std::move(cyc));
      } else {
        position[static_cast<std::size_t>(to)] = static_cast<int>(path_nodes.size());
        path_nodes.push_back(to);
      }
      arc = next_unused(path_nodes.back());
    }
    if (!path_arcs.empty()) throw std::logic_error("cycle decomposition left an open trail");
  }
  return cycles;
}

/// True when the arc of crease `id` runs clockwise around the first cell of
/// crease_cells(id) (upper cell for H, left cell for V).
inline bool clockwise_around_first(const CreaseId& id, int orientation) {
  return id.kind == CreaseKind::H ? orientation < 0 : orientation > 0;
}

/// Inverse of build_aux_digraph on Eulerian orientations: an arc clockwise
/// around s with neighbour t means K(t) = K(s) + 1. Colors are propagated
/// over a spanning tree from (0, 0).
inline GridColoring coloring_from_orientation(const AuxDigraph& h) {
  if (!h.fully_directed()) throw precondition_error("orientation must be complete");
  const GridSize size = h.size();
  GridColoring k(size);
  std::vector<char> done(static_cast<std::size_t>(size.cells()), 0);
  std::deque<Cell> queue{{0, 0}};
  done[0] = 1;
  while (!queue.empty()) {
    const Cell s = queue.front();
    queue.pop_front();
    const Cell around[] = {{s.r - 1, s.c}, {s.r + 1, s.c}, {s.r, s.c - 1}, {s.r, s.c + 1}};
    for (const Cell t : around) {
      if (!size.contains_cell(t.r, t.c) || done[static_cast<std::size_t>(t.r * size.cols + t.c)]) continue;
      const CreaseId id = crease_between(s, t);
      const bool s_first = crease_cells(id).first == s;
      const bool cw_first = clockwise_around_first(id, h.orientation(crease_index(size, id)));
      // clockwise around s  <=>  K(t) = K(s) + 1
      k.set(t, k(s) + (cw_first == s_first ? 1 : -1));
      done[static_cast<std::size_t>(t.r * size.cols + t.c)] = 1;
      queue.push_back(t);
    }
  }
  return k;
}

struct CompletionResult {
  std::optional<MVAssignment> assignment;
  /// H nodes with unmet supply or demand when no completion exists
  std::vector<int> unmet_nodes;

  [[nodiscard]] bool feasible() const { return assignment.has_value(); }
};

inline CompletionResult complete_partial(const PartialMVAssignment& s) {
  AuxDigraph h = build_partial_digraph(s);
  const Circulation circ = solve_circulation(build_flow_network(h));
  CompletionResult result;
  if (!circ.feasible) {
    result.unmet_nodes = circ.unmet;
    return result;
  }
  for (const auto& [arc, tail] : circ.oriented) h.orient_from(arc, tail);
  veblen_orient(h);
  if (!check_eulerian(h)) throw std::logic_error("completion produced a non-Eulerian orientation");
  result.assignment = coloring_to_mv(coloring_from_orientation(h));
  return result;
}

}  // namespace miura
