#include <gtest/gtest.h>

#include <random>

#include "miura/oracle.hpp"
#include "support.hpp"

using namespace miura;

namespace {

bool directed_in(const AuxDigraph& h, const UniformCurve& c) {
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    if (h.tail(c.arcs[i]) != c.nodes[i]) return false;
    if (h.head(c.arcs[i]) != c.nodes[(i + 1) % c.nodes.size()]) return false;
  }
  return !c.arcs.empty();
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_colorings(GridSize(1, 2)), (std::vector<GridColoring>{{{0, 1}}, {{0, 2}}}));
  EXPECT_EQ(enumerate_colorings(GridSize(2, 2)).size(), 6U);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_colorings(GridSize(1, n)).size(), std::size_t{1} << (n - 1));
}

TEST(Enumerate, MatchesNaiveListInOrder) {
  for (const GridSize s : support::sizes_up_to(3, 3)) {
    const auto listed = enumerate_colorings(s);
    EXPECT_EQ(listed, support::naive_colorings(s));
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
  }
}

TEST(Enumerate, SizeGuard) {
  EXPECT_THROW(enumerate_colorings(GridSize(3, 7)), size_guard_error);
  EXPECT_NO_THROW(enumerate_colorings(GridSize(4, 5)));
  EXPECT_EQ(enumerate_colorings(GridSize(1, 21), OracleOptions{true}).size(), std::size_t{1} << 20);
  EXPECT_THROW(brute_min_forcing(diagonal_coloring(GridSize(2, 5))), size_guard_error);
  EXPECT_NO_THROW(brute_min_forcing(diagonal_coloring(GridSize(2, 5)), OracleOptions{true}));
}

TEST(BruteIsForcing, Definitions) {
  const GridColoring k = standard_coloring(GridSize(2, 3));
  EXPECT_TRUE(brute_is_forcing(k, all_creases(k.size())));
  EXPECT_FALSE(brute_is_forcing(k, std::vector<CreaseId>{}));
  const std::vector<CreaseId> domino{{CreaseKind::V, 0, 0}, {CreaseKind::V, 1, 0}, {CreaseKind::H, 0, 2}};
  EXPECT_TRUE(brute_is_forcing(k, domino));
}

TEST(BruteMinForcing, Examples) {
  EXPECT_EQ(brute_min_forcing(GridColoring{{0, 1}}).size(), 1U);
  for (const GridColoring& k : enumerate_colorings(GridSize(2, 2))) EXPECT_EQ(brute_min_forcing(k).size(), 2U);
  EXPECT_EQ(brute_min_forcing(diagonal_coloring(GridSize(2, 3))).size(), 3U);
}

TEST(BruteExtension, FindsConsistentAssignments) {
  const MVAssignment a = standard_assignment(GridSize(3, 3));
  EXPECT_EQ(brute_extension(PartialMVAssignment(a)), a);
}

TEST(EulerianOrientations, TwoByTwoHasSix) {
  EXPECT_EQ(enumerate_eulerian_orientations(GridSize(2, 2)).size(), 6U);
}

TEST(DifferenceGraph, IdenticalColorings) {
  const GridColoring k = diagonal_coloring(GridSize(3, 4));
  const DifferenceGraph g = difference_graph(k, k);
  EXPECT_EQ(g.polyomino_count, 1);
  EXPECT_TRUE(g.curves.empty());
  EXPECT_TRUE(g.hubs.empty());
}

TEST(DifferenceGraph, SizeMismatch) {
  EXPECT_THROW(difference_graph(diagonal_coloring(GridSize(2, 2)), diagonal_coloring(GridSize(2, 3))), precondition_error);
}

TEST(DifferenceGraph, SingleDiagonalCurve) {
  // Cells with r + c <= 1 in a 3x4 diagonal coloring are cut off by a
  // staircase; flipping across it gives a pair with exactly that curve.
  const GridSize s(3, 4);
  const GridColoring k1 = diagonal_coloring(s);
  std::vector<int> staircase;
  for (const CreaseId& id : all_creases(s)) {
    const auto [a, b] = crease_cells(id);
    if ((a.r + a.c <= 1) != (b.r + b.c <= 1)) staircase.push_back(crease_index(s, id));
  }
  const GridColoring k2 = flip_across_curve(k1, staircase);
  ASSERT_TRUE(is_valid_coloring(k2));
  const DifferenceGraph g = difference_graph(k1, k2);
  ASSERT_EQ(g.curves.size(), 1U);
  std::vector<int> arcs = g.curves[0].arcs;
  std::sort(arcs.begin(), arcs.end());
  EXPECT_EQ(arcs, staircase);
  EXPECT_FALSE(g.curves[0].closed);
  EXPECT_TRUE(directed_in(build_aux_digraph(k1), g.curves[0]));
}

TEST(DifferenceGraph, EveryDiagonalStaircaseIsUniform) {
  const GridSize s(3, 4);
  const GridColoring k = diagonal_coloring(s);
  for (int d = 0; d + 1 < s.rows + s.cols - 1; ++d) {
    std::vector<int> staircase;
    for (const CreaseId& id : all_creases(s)) {
      const auto [a, b] = crease_cells(id);
      if ((a.r + a.c <= d) != (b.r + b.c <= d)) staircase.push_back(crease_index(s, id));
    }
    EXPECT_NO_THROW(flip_across_curve(k, staircase)) << d;
    EXPECT_TRUE(is_valid_coloring(flip_across_curve(k, staircase)));
  }
}

TEST(DifferenceGraph, RandomPairsOnThreeByFour) {
  const auto all = enumerate_colorings(GridSize(3, 4));
  std::mt19937_64 rng(34);
  int curves = 0;
  for (int t = 0; t < 1500; ++t) {
    const GridColoring& k1 = all[rng() % all.size()];
    const GridColoring& k2 = all[rng() % all.size()];
    const DifferenceGraph g = difference_graph(k1, k2);
    const AuxDigraph h1 = build_aux_digraph(k1);
    const AuxDigraph h2 = build_aux_digraph(k2);
    std::vector<int> uses(static_cast<std::size_t>(h1.arc_count()), 0);
    for (const UniformCurve& c : g.curves) {
      ++curves;
      ASSERT_TRUE(directed_in(h1, c));
      // the K1 step is constant across the curve, so is the K2 step, and
      // they differ
      const auto side = curve_sides(k1.size(), c.arcs);
      int step1 = 0, step2 = 0;
      for (int a : c.arcs) {
        ++uses[static_cast<std::size_t>(a)];
        EXPECT_NE(h1.orientation(a), h2.orientation(a));
        auto [p, q] = crease_cells(crease_at(k1.size(), a));
        if (side[static_cast<std::size_t>(p.r * 4 + p.c)] == 1) std::swap(p, q);
        const int s1 = support::naive_step(k1, p, q);
        const int s2 = support::naive_step(k2, p, q);
        if (step1 == 0) {
          step1 = s1;
          step2 = s2;
        }
        EXPECT_EQ(s1, step1);
        EXPECT_EQ(s2, step2);
        EXPECT_NE(s1, s2);
      }
      EXPECT_TRUE(is_valid_coloring(flip_across_curve(k1, c.arcs)));
    }
    for (int u : uses) EXPECT_LE(u, 1);  // curves are disjoint
    for (const NodeId& p : g.hubs) {
      // diagonally opposite squares at a hub share a type
      const int nw = g.type_at({p.r - 1, p.c - 1}), ne = g.type_at({p.r - 1, p.c});
      const int sw = g.type_at({p.r, p.c - 1}), se = g.type_at({p.r, p.c});
      EXPECT_TRUE(nw == se || ne == sw);
    }
    if (k1 == k2) {
      EXPECT_TRUE(g.curves.empty());
    }
  }
  EXPECT_GT(curves, 0);
}

TEST(DifferenceGraph, ForcingSetsCrossEveryCurve) {
  const GridSize s(2, 3);
  const auto all = enumerate_colorings(s);
  for (const GridColoring& k : all) {
    std::vector<DifferenceGraph> graphs;
    for (const GridColoring& other : all) graphs.push_back(difference_graph(k, other));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.creases()); ++mask) {
      const auto f = support::subset_of(s, mask);
      if (!brute_is_forcing(k, f)) continue;
      for (const DifferenceGraph& g : graphs) {
        for (const UniformCurve& c : g.curves) {
          bool crossed = false;
          for (int a : c.arcs) crossed |= ((mask >> a) & 1) != 0;
          EXPECT_TRUE(crossed);
        }
      }
    }
  }
}

TEST(DifferenceGraph, OneCrossingPerCurveSeparatesThePair) {
  const auto all = enumerate_colorings(GridSize(3, 3));
  for (const GridColoring& k1 : all) {
    for (const GridColoring& k2 : all) {
      if (k1 == k2) continue;
      const DifferenceGraph g = difference_graph(k1, k2);
      ASSERT_FALSE(g.curves.empty());
      // K2 disagrees with K1 on the first arc of every curve
      for (const UniformCurve& c : g.curves) {
        const CreaseId id = crease_at(k1.size(), c.arcs.front());
        EXPECT_NE(edge_weight(k1, id), edge_weight(k2, id));
      }
    }
  }
}

TEST(CurveSides, RejectsNonSeparatingArcs) {
  const GridSize s(2, 2);
  const std::vector<int> one{crease_index(s, {CreaseKind::H, 0, 0})};
  EXPECT_THROW(curve_sides(s, one), precondition_error);
}
