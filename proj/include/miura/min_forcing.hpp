#pragma once

// Exact minimum forcing sets: a forcing set is exactly a set of creases whose
// arcs hit every directed cycle of H, so the minimum forcing set is the
// minimum feedback arc set of H.
//
// The default solver is a lazy implicit hitting-set loop. Directed cycles are
// collected as constraints, an exact minimum hitting set is computed by
// branch and bound, and if the candidate leaves a cycle in H the uncovered
// shortest cycles are added and the hitting set is recomputed. Among optimal
// sets it returns the lexicographically smallest by arc index, which is the
// (kind, r, c) crease order.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "miura/aux_digraph.hpp"
#include "miura/coloring.hpp"
#include "miura/grid.hpp"

namespace miura {

/// Sorted arc indices of an AuxDigraph.
using ArcSet = std::vector<int>;
/// Sorted crease ids.
using ForcingSet = std::vector<CreaseId>;

template <class S>
concept FeedbackArcSetSolver = requires(const S& solver, const AuxDigraph& h) {
  { solver(h) } -> std::convertible_to<ArcSet>;
};

namespace detail {

class ArcBits {
 public:
  ArcBits() = default;
  explicit ArcBits(int n) : words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= bit(i); }
  void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~bit(i); }
  [[nodiscard]] bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] & bit(i)) != 0; }

  [[nodiscard]] bool intersects(const ArcBits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  /// popcount of (*this & ~mask)
  [[nodiscard]] int count_without(const ArcBits& mask) const {
    int k = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) k += std::popcount(words_[w] & ~mask.words_[w]);
    return k;
  }
  /// Lowest index in (*this & ~mask), or -1.
  [[nodiscard]] int first_without(const ArcBits& mask) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (const auto x = words_[w] & ~mask.words_[w]) return static_cast<int>(w * 64) + std::countr_zero(x);
    }
    return -1;
  }
  /// True when (*this & ~mask) meets `other`.
  [[nodiscard]] bool intersects_without(const ArcBits& mask, const ArcBits& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~mask.words_[w] & other.words_[w]) return true;
    return false;
  }
  void merge_without(const ArcBits& src, const ArcBits& mask) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= src.words_[w] & ~mask.words_[w];
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  friend auto operator<=>(const ArcBits&, const ArcBits&) = default;

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }
  std::vector<std::uint64_t> words_;
};

/// Exact minimum hitting set over a family of arc sets.
///
/// Branches on the open set with the fewest available arcs; bounds with a
/// greedy packing of pairwise disjoint open sets.
class HittingSetSearch {
 public:
  HittingSetSearch(int universe, std::span<const ArcBits> sets)
      : universe_(universe), sets_(sets.begin(), sets.end()), included_(universe), excluded_(universe),
        scratch_(universe), best_(universe) {}

  /// Size of a minimum hitting set; `known_lower_bound` lets the search stop
  /// as soon as it meets that size.
  int minimum_size(int known_lower_bound) {
    lower_bound_ = known_lower_bound;
    best_size_ = greedy_upper_bound() + 1;
    done_ = false;
    minimize(0);
    return best_size_;
  }

  /// Arcs of the best set found by the last minimum_size() call.
  [[nodiscard]] ArcSet best() const { return to_arcs(best_); }

  /// Lexicographically smallest hitting set of size at most `k`. Arcs are
  /// decided in index order; an arc is kept whenever some hitting set of
  /// size <= k agrees with all decisions so far.
  std::optional<ArcSet> lexicographic_min(int k) {
    included_.clear();
    excluded_.clear();
    if (!feasible(0, k)) return std::nullopt;
    int size = 0;
    for (int a = 0; a < universe_; ++a) {
      bool useful = false;
      bool all_hit = true;
      for (const auto& s : sets_) {
        if (s.intersects(included_)) continue;
        all_hit = false;
        if (s.test(a)) useful = true;
      }
      if (all_hit) break;
      if (useful) {
        included_.set(a);
        if (feasible(size + 1, k)) {
          ++size;
          continue;
        }
        included_.reset(a);
      }
      excluded_.set(a);
    }
    ArcSet out = to_arcs(included_);
    included_.clear();
    excluded_.clear();
    return out;
  }

 private:
  int greedy_upper_bound() {
    std::vector<char> hit(sets_.size(), 0);
    int size = 0;
    for (;;) {
      std::vector<int> score(static_cast<std::size_t>(universe_), 0);
      bool any = false;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        if (hit[s]) continue;
        any = true;
        for (int i = 0; i < universe_; ++i)
          if (sets_[s].test(i)) ++score[static_cast<std::size_t>(i)];
      }
      if (!any) break;
      const int pick = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
      ++size;
      for (std::size_t s = 0; s < sets_.size(); ++s)
        if (sets_[s].test(pick)) hit[s] = 1;
    }
    return size;
  }

  /// Unit propagation plus bounding shared by both searches. Returns false
  /// when the node is pruned; otherwise fills `open_` with the sets not yet
  /// hit, sorted by available size. Forced arcs are appended to `forced`.
  bool propagate(int& size, std::vector<int>& forced, std::vector<const ArcBits*>& open) {
    for (;;) {
      open.clear();
      bool changed = false;
      for (const auto& s : sets_) {
        if (s.intersects(included_)) continue;
        const int avail = s.count_without(excluded_);
        if (avail == 0) return false;
        if (avail == 1) {
          const int a = s.first_without(excluded_);
          included_.set(a);
          forced.push_back(a);
          ++size;
          changed = true;
        } else {
          open.push_back(&s);
        }
      }
      if (!changed) break;
    }
    if (size >= best_size_) return false;
    if (open.empty()) {
      best_size_ = size;
      best_ = included_;
      if (size <= lower_bound_) done_ = true;
      return false;
    }
    std::sort(open.begin(), open.end(), [&](const ArcBits* a, const ArcBits* b) {
      return a->count_without(excluded_) < b->count_without(excluded_);
    });
    // lower bound: greedy packing of pairwise disjoint open sets
    scratch_.clear();
    int packing = 0;
    for (const ArcBits* s : open) {
      if (s->intersects_without(excluded_, scratch_)) continue;
      scratch_.merge_without(*s, excluded_);
      ++packing;
    }
    return size + packing < best_size_;
  }

  void minimize(int size) {
    if (done_) return;
    std::vector<int> forced;
    std::vector<const ArcBits*> open;
    if (propagate(size, forced, open)) {
      // branch on the tightest open set: take its i-th arc, drop the earlier ones
      const ArcBits& pivot = *open.front();
      std::vector<int> arcs;
      for (int a = 0; a < universe_; ++a)
        if (pivot.test(a) && !excluded_.test(a)) arcs.push_back(a);
      std::size_t i = 0;
      for (; i < arcs.size() && !done_; ++i) {
        included_.set(arcs[i]);
        minimize(size + 1);
        included_.reset(arcs[i]);
        excluded_.set(arcs[i]);
      }
      for (std::size_t j = 0; j < i; ++j) excluded_.reset(arcs[j]);
    }
    release(forced);
  }

  /// Whether the current include/exclude decisions extend to a hitting set
  /// of size <= k.
  bool feasible(int size, int k) {
    lower_bound_ = k;
    best_size_ = k + 1;
    done_ = false;
    minimize(size);
    return best_size_ <= k;
  }

  ArcSet to_arcs(const ArcBits& bits) const {
    ArcSet out;
    for (int i = 0; i < universe_; ++i)
      if (bits.test(i)) out.push_back(i);
    return out;
  }

  void release(const std::vector<int>& forced) {
    for (int a : forced) included_.reset(a);
  }

  int universe_;
  std::vector<ArcBits> sets_;
  ArcBits included_;
  ArcBits excluded_;
  ArcBits scratch_;
  ArcBits best_;
  int lower_bound_ = 0;
  int best_size_ = 0;
  bool done_ = false;
};

/// Shortest directed cycle through `arc` avoiding `removed`, by BFS from
/// head(arc) back to tail(arc). Empty when none exists.
inline std::vector<int> shortest_cycle_through(const AuxDigraph& h, const std::vector<std::vector<int>>& out_arcs,
                                               const std::vector<char>& removed, int arc) {
  const int from = h.head(arc);
  const int to = h.tail(arc);
  if (from == to) return {arc};
  std::vector<int> via(static_cast<std::size_t>(h.node_count()), -1);
  std::vector<char> seen(via.size(), 0);
  std::deque<int> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int a : out_arcs[static_cast<std::size_t>(v)]) {
      if (removed[static_cast<std::size_t>(a)]) continue;
      const int w = h.head(a);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      via[static_cast<std::size_t>(w)] = a;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) return {};
  std::vector<int> cycle{arc};
  std::vector<int> path;
  for (int v = to; v != from; v = h.tail(via[static_cast<std::size_t>(v)])) path.push_back(via[static_cast<std::size_t>(v)]);
  cycle.insert(cycle.end(), path.rbegin(), path.rend());
  return cycle;
}

}  // namespace detail

/// Exact minimum feedback arc set by lazy cycle generation and branch and
/// bound over the accumulated cycle constraints.
class LazyHittingSetSolver {
 public:
  ArcSet operator()(const AuxDigraph& h) const {
    if (!h.fully_directed()) throw precondition_error("feedback arc set needs a fully directed graph");
    const int ne = h.arc_count();
    std::vector<std::vector<int>> out_arcs(static_cast<std::size_t>(h.node_count()));
    for (int a = 0; a < ne; ++a) out_arcs[static_cast<std::size_t>(h.tail(a))].push_back(a);

    std::set<detail::ArcBits> seen;
    std::vector<detail::ArcBits> constraints;
    std::vector<char> removed(static_cast<std::size_t>(ne), 0);

    const auto collect = [&](const ArcSet& current) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int a : current) removed[static_cast<std::size_t>(a)] = 1;
      int added = 0;
      for (int a = 0; a < ne; ++a) {
        if (removed[static_cast<std::size_t>(a)]) continue;
        const auto cycle = detail::shortest_cycle_through(h, out_arcs, removed, a);
        if (cycle.empty()) continue;
        detail::ArcBits bits(ne);
        for (int x : cycle) bits.set(x);
        if (seen.insert(bits).second) {
          constraints.push_back(bits);
          ++added;
        }
      }
      return added;
    };

    // A cycle that survives a hitting set of all constraints cannot be a known
    // constraint, so collect() finding nothing new means H minus the
    // candidate is acyclic. The optimum of the relaxation only grows.
    collect({});
    int optimum = 0;
    for (;;) {
      detail::HittingSetSearch search(ne, constraints);
      optimum = search.minimum_size(optimum);
      if (collect(search.best()) > 0) continue;
      ArcSet canonical = *search.lexicographic_min(optimum);
      if (collect(canonical) == 0) return canonical;
    }
  }
};

inline ArcSet min_feedback_arc_set(const AuxDigraph& h) { return LazyHittingSetSolver{}(h); }

template <FeedbackArcSetSolver Solver = LazyHittingSetSolver>
ForcingSet min_forcing_set(const GridColoring& k, const Solver& solver = {}) {
  const AuxDigraph h = build_aux_digraph(k);
  ForcingSet out;
  for (int a : solver(h)) out.push_back(crease_at(k.size(), a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace miura
