#include <gtest/gtest.h>

#include <random>
#include <set>

#include "miura/completion.hpp"
#include "miura/oracle.hpp"
#include "support.hpp"

using namespace miura;

namespace {

bool agrees(const MVAssignment& total, const PartialMVAssignment& s) {
  for (int i = 0; i < s.size().creases(); ++i) {
    const auto want = s.at_index(i);
    if (want && *want != total.at_index(i)) return false;
  }
  return true;
}

// Any total extension at all, by trying every 2^(unset) filling.
bool has_extension_by_filling(const PartialMVAssignment& s) {
  std::vector<int> unset;
  for (int i = 0; i < s.size().creases(); ++i)
    if (!s.at_index(i)) unset.push_back(i);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << unset.size()); ++bits) {
    MVAssignment a(s.size(), Fold::mountain);
    for (int i = 0; i < s.size().creases(); ++i)
      if (s.at_index(i)) a.set_index(i, *s.at_index(i));
    for (std::size_t j = 0; j < unset.size(); ++j) a.set_index(unset[j], (bits >> j) & 1 ? Fold::mountain : Fold::valley);
    if (is_locally_flat_foldable(a).foldable) return true;
  }
  return false;
}

}  // namespace

TEST(Circulation, EmptyNetworkIsFeasibleWithZeroFlow) {
  const FlowNetwork net = build_flow_network(build_partial_digraph(PartialMVAssignment(GridSize(3, 3))));
  for (int b : net.imbalance) EXPECT_EQ(b, 0);
  const Circulation c = solve_circulation(net);
  EXPECT_TRUE(c.feasible);
  EXPECT_TRUE(c.oriented.empty());
}

TEST(Circulation, ImbalancesSumToZero) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const GridSize s(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5));
    PartialMVAssignment p(s);
    for (int i = 0; i < s.creases(); ++i)
      if (rng() % 2) p.set_index(i, (rng() & 1) ? Fold::mountain : Fold::valley);
    const AuxDigraph h = build_partial_digraph(p);
    const FlowNetwork net = build_flow_network(h);
    int total = 0;
    for (int v = 0; v < h.node_count(); ++v) {
      total += net.imbalance[static_cast<std::size_t>(v)];
      int in = 0, out = 0;
      for (int a = 0; a < h.arc_count(); ++a) {
        if (!h.is_directed(a)) continue;
        in += h.head(a) == v;
        out += h.tail(a) == v;
      }
      EXPECT_EQ(net.imbalance[static_cast<std::size_t>(v)], in - out);
    }
    EXPECT_EQ(total, 0);
    EXPECT_EQ(static_cast<int>(net.arcs.size()), s.creases() - p.assigned_count());
  }
}

TEST(Circulation, BalancesEveryNodeWhenFeasible) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const GridSize s(2 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 5));
    const PartialMVAssignment p = support::random_partial(coloring_to_mv(random_coloring(s, rng)), 0.5, rng);
    AuxDigraph h = build_partial_digraph(p);
    const Circulation c = solve_circulation(build_flow_network(h));
    ASSERT_TRUE(c.feasible);
    for (const auto& [arc, tail] : c.oriented) h.orient_from(arc, tail);
    for (int v = 0; v < h.outer_node(); ++v) {
      int in = 0, out = 0, open = 0;
      for (int a = 0; a < h.arc_count(); ++a) {
        const auto [x, y] = h.endpoints(a);
        if (x != v && y != v) continue;
        if (!h.is_directed(a)) {
          ++open;
          continue;
        }
        in += h.head(a) == v;
        out += h.tail(a) == v;
      }
      EXPECT_EQ(in, out);
      EXPECT_LE(in, 2);
      EXPECT_EQ(open % 2, 0);
    }
  }
}

TEST(VeblenOrient, EmptyResidual) {
  AuxDigraph h = build_aux_digraph(standard_coloring(GridSize(3, 3)));
  EXPECT_TRUE(veblen_orient(h).empty());
}

TEST(VeblenOrient, OneFourCycleAroundACorner) {
  AuxDigraph h(GridSize(2, 2));
  const auto cycles = veblen_orient(h);
  ASSERT_EQ(cycles.size(), 2U);  // four arcs between centre and outer node
  EXPECT_TRUE(check_eulerian(h));
}

TEST(VeblenOrient, IndependentCyclesAreSimple) {
  // fully undirected H: every arc lands in exactly one simple closed cycle
  for (const GridSize s : {GridSize(2, 3), GridSize(3, 3), GridSize(4, 4)}) {
    AuxDigraph h(s);
    const auto cycles = veblen_orient(h);
    std::vector<int> count(static_cast<std::size_t>(h.arc_count()), 0);
    for (const CycleWitness& c : cycles) {
      std::set<int> nodes(c.nodes.begin(), c.nodes.end());
      EXPECT_EQ(nodes.size(), c.nodes.size());
      for (std::size_t i = 0; i < c.arcs.size(); ++i) {
        EXPECT_EQ(h.tail(c.arcs[i]), c.nodes[i]);
        EXPECT_EQ(h.head(c.arcs[i]), c.nodes[(i + 1) % c.nodes.size()]);
        ++count[static_cast<std::size_t>(c.arcs[i])];
      }
    }
    for (int x : count) EXPECT_EQ(x, 1);
    EXPECT_TRUE(check_eulerian(h));
  }
}

TEST(VeblenOrient, OddDegreeIsAnInternalError) {
  AuxDigraph h(GridSize(2, 2));
  h.set_orientation(0, 1);
  EXPECT_THROW(veblen_orient(h), std::logic_error);
}

TEST(ColoringFromOrientation, InvertsBuildAuxDigraph) {
  for (const GridSize s : {GridSize(2, 2), GridSize(2, 3), GridSize(3, 3), GridSize(1, 4)})
    for (const GridColoring& k : enumerate_colorings(s)) EXPECT_EQ(coloring_from_orientation(build_aux_digraph(k)), k);
}

TEST(ColoringFromOrientation, EulerianOrientationsOfTwoByTwoMatchColorings) {
  const GridSize s(2, 2);
  const auto orientations = enumerate_eulerian_orientations(s);
  const auto colorings = enumerate_colorings(s);
  ASSERT_EQ(orientations.size(), colorings.size());
  std::set<GridColoring> seen;
  for (const AuxDigraph& h : orientations) {
    const GridColoring k = coloring_from_orientation(h);
    EXPECT_TRUE(is_valid_coloring(k));
    EXPECT_EQ(build_aux_digraph(k), h);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), colorings.size());
}

TEST(CompletePartial, TotalStandardReturnsItself) {
  const MVAssignment a = standard_assignment(GridSize(4, 6));
  const CompletionResult r = complete_partial(PartialMVAssignment(a));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(*r.assignment, a);
}

TEST(CompletePartial, EmptyIsFeasible) {
  for (const GridSize s : support::sizes_up_to(5, 5)) {
    const CompletionResult r = complete_partial(PartialMVAssignment(s));
    ASSERT_TRUE(r.feasible());
    EXPECT_TRUE(is_locally_flat_foldable(*r.assignment).foldable);
  }
}

TEST(CompletePartial, SingleCreaseAlwaysExtends) {
  for (const GridSize s : support::sizes_up_to(3, 4)) {
    for (const CreaseId& id : all_creases(s)) {
      for (const Fold f : {Fold::mountain, Fold::valley}) {
        PartialMVAssignment p(s);
        p.set(id, f);
        ASSERT_TRUE(brute_extension(p).has_value());
        const CompletionResult r = complete_partial(p);
        ASSERT_TRUE(r.feasible());
        EXPECT_EQ((*r.assignment)[id], f);
      }
    }
  }
}

TEST(CompletePartial, BirdsFootViolationIsInfeasible) {
  const GridSize s(2, 2);
  const NodeStar st = node_star(s, {1, 1});
  PartialMVAssignment p(s);
  p.set(st.leg, Fold::valley);
  p.set(st.lateral_toe_north, Fold::mountain);
  p.set(st.middle_toe, Fold::mountain);
  p.set(st.lateral_toe_south, Fold::mountain);
  EXPECT_FALSE(brute_extension(p).has_value());
  EXPECT_FALSE(has_extension_by_filling(p));
  const CompletionResult r = complete_partial(p);
  EXPECT_FALSE(r.feasible());
  EXPECT_FALSE(r.unmet_nodes.empty());
}

TEST(CompletePartial, ViolationInsideALargerGrid) {
  const GridSize s(4, 5);
  PartialMVAssignment p(standard_assignment(s));
  for (int i = 0; i < s.creases(); i += 2) p.set_index(i, std::nullopt);
  const NodeStar st = node_star(s, {2, 3});
  p.set(st.leg, Fold::valley);
  p.set(st.lateral_toe_north, Fold::mountain);
  p.set(st.middle_toe, Fold::mountain);
  p.set(st.lateral_toe_south, Fold::mountain);
  EXPECT_FALSE(complete_partial(p).feasible());
}

TEST(CompletePartial, ExhaustiveOnTwoByThree) {
  const GridSize s(2, 3);
  int code_count = 1;
  for (int i = 0; i < s.creases(); ++i) code_count *= 3;
  int feasible = 0;
  for (int code = 0; code < code_count; ++code) {
    PartialMVAssignment p(s);
    int x = code;
    for (int i = 0; i < s.creases(); ++i, x /= 3) {
      if (x % 3 == 1) p.set_index(i, Fold::mountain);
      if (x % 3 == 2) p.set_index(i, Fold::valley);
    }
    const bool expected = has_extension_by_filling(p);
    EXPECT_EQ(brute_extension(p).has_value(), expected);
    const CompletionResult r = complete_partial(p);
    ASSERT_EQ(r.feasible(), expected) << code;
    if (expected) {
      ++feasible;
      EXPECT_TRUE(is_locally_flat_foldable(*r.assignment).foldable);
      EXPECT_TRUE(agrees(*r.assignment, p));
    }
  }
  EXPECT_GT(feasible, 0);
  EXPECT_LT(feasible, code_count);
}

TEST(CompletePartial, RandomHalfHiddenUpToSixBySix) {
  std::mt19937_64 rng(66);
  for (const GridSize s : support::sizes_up_to(6, 6)) {
    for (int t = 0; t < 20; ++t) {
      const PartialMVAssignment p = support::random_partial(coloring_to_mv(random_coloring(s, rng)), 0.5, rng);
      const CompletionResult r = complete_partial(p);
      ASSERT_TRUE(r.feasible());
      EXPECT_TRUE(is_locally_flat_foldable(*r.assignment).foldable);
      EXPECT_TRUE(agrees(*r.assignment, p));
    }
  }
}

TEST(CompletePartial, Deterministic) {
  std::mt19937_64 rng(9);
  const PartialMVAssignment p = support::random_partial(coloring_to_mv(random_coloring(GridSize(5, 5), rng)), 0.3, rng);
  EXPECT_EQ(complete_partial(p).assignment, complete_partial(p).assignment);
}
