#include <gtest/gtest.h>

#include <random>

#include "miura/coloring.hpp"
#include "miura/oracle.hpp"
#include "support.hpp"

using namespace miura;

TEST(Coloring, ValidityExamples) {
  EXPECT_TRUE(is_valid_coloring(GridColoring{{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_valid_coloring(GridColoring{{0, 0}}));
  EXPECT_FALSE(is_valid_coloring(GridColoring{{1, 2}, {2, 0}}));
}

TEST(Coloring, FromRowsValidatesShape) {
  EXPECT_THROW(GridColoring::from_rows({{0, 1}, {1}}), std::invalid_argument);
  EXPECT_THROW(GridColoring::from_rows({{0, 3}}), std::invalid_argument);
  EXPECT_THROW(GridColoring::from_rows({}), std::invalid_argument);
}

TEST(Coloring, ColorStepIsPlusOrMinusOne) {
  EXPECT_EQ(color_step(0, 1), 1);
  EXPECT_EQ(color_step(2, 0), 1);
  EXPECT_EQ(color_step(0, 2), -1);
  EXPECT_EQ(color_step(1, 1), 0);
}

TEST(MvToColoring, OneDimensionalExamples) {
  MVAssignment up(GridSize(1, 2), Fold::mountain);
  EXPECT_EQ(mv_to_coloring(up), (GridColoring{{0, 1}}));
  MVAssignment down(GridSize(1, 2), Fold::valley);
  EXPECT_EQ(mv_to_coloring(down), (GridColoring{{0, 2}}));
  MVAssignment two(GridSize(1, 3), Fold::mountain);
  EXPECT_EQ(mv_to_coloring(two), (GridColoring{{0, 1, 2}}));
}

TEST(MvToColoring, RejectsUnfoldableAndNamesTheNode) {
  MVAssignment a = standard_assignment(GridSize(3, 3));
  a.set({CreaseKind::V, 0, 0}, -a[{CreaseKind::V, 0, 0}]);
  try {
    mv_to_coloring(a);
    FAIL() << "expected precondition_error";
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("node(1,1)"), std::string::npos) << e.what();
  }
}

TEST(ColoringToMv, OneDimensionalExamples) {
  EXPECT_EQ(coloring_to_mv(GridColoring{{0, 1}})[(CreaseId{CreaseKind::V, 0, 0})], Fold::mountain);
  EXPECT_EQ(coloring_to_mv(GridColoring{{0, 2}})[(CreaseId{CreaseKind::V, 0, 0})], Fold::valley);
  EXPECT_THROW(coloring_to_mv(GridColoring{{0, 0}}), precondition_error);
}

TEST(ColoringToMv, StandardRoundTrip) {
  const MVAssignment a = standard_assignment(GridSize(4, 6));
  EXPECT_EQ(coloring_to_mv(mv_to_coloring(a)), a);
}

TEST(DiagonalColoring, FormulaAndValidity) {
  EXPECT_EQ(diagonal_coloring(GridSize(2, 2)), (GridColoring{{0, 1}, {1, 2}}));
  for (const GridSize s : support::sizes_up_to(8, 8)) {
    const GridColoring k = diagonal_coloring(s);
    EXPECT_TRUE(is_valid_coloring(k));
    for (int r = 0; r < s.rows; ++r)
      for (int c = 0; c < s.cols; ++c) EXPECT_EQ(k(r, c), (r + c) % 3);
  }
}

// Exhaustive calibration of the leg-side and canonical-direction conventions:
// every proper coloring must give a locally flat-foldable assignment, and
// both directions of the bijection must round-trip.
TEST(Bijection, ExhaustiveUpTo3x4) {
  for (const GridSize s : support::sizes_up_to(3, 4)) {
    const auto colorings = support::naive_colorings(s);
    for (const GridColoring& k : colorings) {
      const MVAssignment a = coloring_to_mv(k);
      ASSERT_TRUE(is_locally_flat_foldable(a).foldable);
      EXPECT_EQ(mv_to_coloring(a), k);
    }
  }
}

TEST(Bijection, CountsMatchFoldableAssignments) {
  // 2x2: brute-force over all 2^4 assignments against the naive coloring count
  for (const GridSize s : {GridSize(2, 2), GridSize(2, 3), GridSize(3, 3)}) {
    int foldable = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.creases()); ++bits) {
      MVAssignment a(s, Fold::mountain);
      for (int i = 0; i < s.creases(); ++i) a.set_index(i, (bits >> i) & 1 ? Fold::mountain : Fold::valley);
      if (is_locally_flat_foldable(a).foldable) {
        ++foldable;
        EXPECT_EQ(coloring_to_mv(mv_to_coloring(a)), a);
      }
    }
    EXPECT_EQ(foldable, static_cast<int>(support::naive_colorings(s).size()));
  }
  EXPECT_EQ(support::naive_colorings(GridSize(2, 2)).size(), 18U / 3U);
}

TEST(Bijection, RandomLargerInstancesRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const GridSize s(1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 12));
    const GridColoring k = random_coloring(s, rng);
    ASSERT_TRUE(is_valid_coloring(k));
    const MVAssignment a = coloring_to_mv(k);
    ASSERT_TRUE(is_locally_flat_foldable(a).foldable);
    EXPECT_EQ(mv_to_coloring(a), k);
  }
}

TEST(EdgeWeight, MatchesDefinitionAlongCanonicalDirection) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const GridSize s(2 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 5));
    const GridColoring k = random_coloring(s, rng);
    for (const CreaseId& id : all_creases(s)) {
      auto [a, b] = crease_cells(id);
      // vertical dual edges point down; horizontal ones right on even rows
      if (id.kind == CreaseKind::V && id.r % 2 == 1) std::swap(a, b);
      EXPECT_EQ(edge_weight(k, id), support::naive_step(k, a, b));
    }
  }
}

TEST(EdgeWeight, InvariantUnderGlobalShift) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const GridSize s(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6));
    const GridColoring k = random_coloring(s, rng);
    for (int shift = 1; shift < 3; ++shift) {
      GridColoring moved = k;
      for (int r = 0; r < s.rows; ++r)
        for (int c = 0; c < s.cols; ++c) moved.set(r, c, k(r, c) + shift);
      for (const CreaseId& id : all_creases(s)) EXPECT_EQ(edge_weight(moved, id), edge_weight(k, id));
      EXPECT_EQ(moved.normalized(), k);
    }
  }
}

TEST(Boustrophedon, VisitsEveryCellThroughAdjacentSteps) {
  const auto path = boustrophedon_path(GridSize(3, 4));
  ASSERT_EQ(path.size(), 12U);
  EXPECT_EQ(path[3], (Cell{0, 3}));
  EXPECT_EQ(path[4], (Cell{1, 3}));
  EXPECT_EQ(path[7], (Cell{1, 0}));
  for (std::size_t i = 1; i < path.size(); ++i)
    EXPECT_EQ(std::abs(path[i].r - path[i - 1].r) + std::abs(path[i].c - path[i - 1].c), 1);
}
