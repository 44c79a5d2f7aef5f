#pragma once

// Miura-ori crease pattern model: cells, creases, interior nodes, MV
// assignments and the per-node bird's-foot foldability check.
//
// Geometry conventions used throughout the library:
//   * Cells are indexed (r, c), 0-based, r in [0, m), c in [0, n).
//   * A horizontal crease H(r, c) separates cell (r, c) from (r + 1, c).
//   * A zig-zag crease V(r, c) separates cell (r, c) from (r, c + 1).
//   * Interior nodes are (R, C), 1-based, R in [1, m), C in [1, n): the
//     meeting point of horizontal line R and zig-zag line C.
//   * Screen coordinates: row index grows downward.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace miura {

class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridSize {
  int rows = 1;
  int cols = 1;

  GridSize() = default;
  GridSize(int m, int n) : rows(m), cols(n) {
    if (m < 1 || n < 1) {
      throw std::invalid_argument("grid size must be at least 1x1, got " + std::to_string(m) +
                                  "x" + std::to_string(n));
    }
  }

  [[nodiscard]] int cells() const { return rows * cols; }
  [[nodiscard]] int h_creases() const { return (rows - 1) * cols; }
  [[nodiscard]] int v_creases() const { return rows * (cols - 1); }
  [[nodiscard]] int creases() const { return h_creases() + v_creases(); }
  [[nodiscard]] int interior_nodes() const { return (rows - 1) * (cols - 1); }
  [[nodiscard]] bool contains_cell(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }

  friend bool operator==(const GridSize&, const GridSize&) = default;
};

enum class CreaseKind : std::uint8_t { H, V };

struct CreaseId {
  CreaseKind kind = CreaseKind::H;
  int r = 0;
  int c = 0;

  friend auto operator<=>(const CreaseId&, const CreaseId&) = default;
};

inline std::string to_string(const CreaseId& id) {
  return std::string(id.kind == CreaseKind::H ? "h" : "v") + "(" + std::to_string(id.r) + "," +
         std::to_string(id.c) + ")";
}

inline bool is_valid(GridSize size, const CreaseId& id) {
  if (id.kind == CreaseKind::H) {
    return id.r >= 0 && id.r <= size.rows - 2 && id.c >= 0 && id.c <= size.cols - 1;
  }
  return id.r >= 0 && id.r <= size.rows - 1 && id.c >= 0 && id.c <= size.cols - 2;
}

/// Dense index of a crease. Index order coincides with (kind, r, c) order.
inline int crease_index(GridSize size, const CreaseId& id) {
  if (!is_valid(size, id)) {
    throw std::out_of_range("crease " + to_string(id) + " out of range for " +
                            std::to_string(size.rows) + "x" + std::to_string(size.cols));
  }
  if (id.kind == CreaseKind::H) return id.r * size.cols + id.c;
  return size.h_creases() + id.r * (size.cols - 1) + id.c;
}

inline CreaseId crease_at(GridSize size, int index) {
  if (index < 0 || index >= size.creases()) {
    throw std::out_of_range("crease index " + std::to_string(index) + " out of range");
  }
  if (index < size.h_creases()) {
    return {CreaseKind::H, index / size.cols, index % size.cols};
  }
  const int k = index - size.h_creases();
  return {CreaseKind::V, k / (size.cols - 1), k % (size.cols - 1)};
}

inline std::vector<CreaseId> all_creases(GridSize size) {
  std::vector<CreaseId> out;
  out.reserve(size.creases());
  for (int i = 0; i < size.creases(); ++i) out.push_back(crease_at(size, i));
  return out;
}

struct Cell {
  int r = 0;
  int c = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The two cells a crease separates, in (upper, lower) or (left, right) order.
inline std::pair<Cell, Cell> crease_cells(const CreaseId& id) {
  if (id.kind == CreaseKind::H) return {{id.r, id.c}, {id.r + 1, id.c}};
  return {{id.r, id.c}, {id.r, id.c + 1}};
}

/// Canonical direction of the dual edge crossing a crease: vertical dual edges
/// point down; horizontal ones follow the boustrophedon direction of their row
/// (rightward on even rows, leftward on odd rows). Returns (tail, head).
inline std::pair<Cell, Cell> canonical_dual_edge(const CreaseId& id) {
  auto [a, b] = crease_cells(id);
  if (id.kind == CreaseKind::V && id.r % 2 == 1) return {b, a};
  return {a, b};
}

// ---------------------------------------------------------------------------
// Mountain/valley values

enum class Fold : std::int8_t { valley = -1, mountain = 1 };

constexpr int sign(Fold f) { return static_cast<int>(f); }
constexpr Fold fold_from_sign(int s) { return s > 0 ? Fold::mountain : Fold::valley; }
constexpr Fold operator-(Fold f) { return f == Fold::mountain ? Fold::valley : Fold::mountain; }

/// Total MV assignment: one Fold per crease.
class MVAssignment {
 public:
  MVAssignment() = default;
  MVAssignment(GridSize size, Fold fill)
      : size_(size), values_(static_cast<std::size_t>(size.creases()), fill) {}

  [[nodiscard]] GridSize size() const { return size_; }
  [[nodiscard]] Fold operator[](const CreaseId& id) const {
    return values_[static_cast<std::size_t>(crease_index(size_, id))];
  }
  [[nodiscard]] Fold at_index(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  void set(const CreaseId& id, Fold f) {
    values_[static_cast<std::size_t>(crease_index(size_, id))] = f;
  }
  void set_index(int i, Fold f) { values_.at(static_cast<std::size_t>(i)) = f; }

  friend bool operator==(const MVAssignment&, const MVAssignment&) = default;

 private:
  GridSize size_;
  std::vector<Fold> values_;
};

/// Partial MV assignment; creases outside the domain are unset.
class PartialMVAssignment {
 public:
  PartialMVAssignment() = default;
  explicit PartialMVAssignment(GridSize size)
      : size_(size), values_(static_cast<std::size_t>(size.creases())) {}
  explicit PartialMVAssignment(const MVAssignment& total) : PartialMVAssignment(total.size()) {
    for (int i = 0; i < size_.creases(); ++i) values_[static_cast<std::size_t>(i)] = total.at_index(i);
  }

  [[nodiscard]] GridSize size() const { return size_; }
  [[nodiscard]] std::optional<Fold> operator[](const CreaseId& id) const {
    return values_[static_cast<std::size_t>(crease_index(size_, id))];
  }
  [[nodiscard]] std::optional<Fold> at_index(int i) const {
    return values_.at(static_cast<std::size_t>(i));
  }
  void set(const CreaseId& id, std::optional<Fold> f) {
    values_[static_cast<std::size_t>(crease_index(size_, id))] = f;
  }
  void set_index(int i, std::optional<Fold> f) { values_.at(static_cast<std::size_t>(i)) = f; }

  [[nodiscard]] int assigned_count() const {
    int k = 0;
    for (const auto& v : values_) k += v.has_value() ? 1 : 0;
    return k;
  }
  [[nodiscard]] bool is_total() const { return assigned_count() == size_.creases(); }

  friend bool operator==(const PartialMVAssignment&, const PartialMVAssignment&) = default;

 private:
  GridSize size_;
  std::vector<std::optional<Fold>> values_;
};

// ---------------------------------------------------------------------------
// Nodes and bird's feet

struct NodeId {
  int r = 1;
  int c = 1;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline bool is_valid(GridSize size, const NodeId& node) {
  return node.r >= 1 && node.r <= size.rows - 1 && node.c >= 1 && node.c <= size.cols - 1;
}

inline std::string to_string(const NodeId& node) {
  return "node(" + std::to_string(node.r) + "," + std::to_string(node.c) + ")";
}

/// The four creases at a node. `leg` and `middle_toe` are the collinear
/// horizontal creases; the lateral toes are the zig-zag segments above and
/// below the node.
struct NodeStar {
  CreaseId leg;
  CreaseId lateral_toe_north;
  CreaseId middle_toe;
  CreaseId lateral_toe_south;

  [[nodiscard]] bool leg_points_west() const { return leg.c < middle_toe.c; }
  friend bool operator==(const NodeStar&, const NodeStar&) = default;
};

/// Leg points west on odd node rows, east on even ones, so the top node row
/// has every leg pointing left.
inline NodeStar node_star(GridSize size, const NodeId& node) {
  if (!is_valid(size, node)) {
    throw std::out_of_range(to_string(node) + " out of range for " + std::to_string(size.rows) +
                            "x" + std::to_string(size.cols));
  }
  const CreaseId west{CreaseKind::H, node.r - 1, node.c - 1};
  const CreaseId east{CreaseKind::H, node.r - 1, node.c};
  const CreaseId north{CreaseKind::V, node.r - 1, node.c - 1};
  const CreaseId south{CreaseKind::V, node.r, node.c - 1};
  if (node.r % 2 == 1) return {west, north, east, south};
  return {east, north, west, south};
}

inline std::vector<NodeId> all_nodes(GridSize size) {
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(size.interior_nodes()));
  for (int r = 1; r < size.rows; ++r)
    for (int c = 1; c < size.cols; ++c) out.push_back({r, c});
  return out;
}

/// Bird's foot condition: mu(leg) equals the sum of the three toes.
inline bool check_birds_foot(const MVAssignment& a, const NodeId& node) {
  const NodeStar star = node_star(a.size(), node);
  return sign(a[star.leg]) ==
         sign(a[star.lateral_toe_north]) + sign(a[star.middle_toe]) + sign(a[star.lateral_toe_south]);
}

struct FoldabilityReport {
  bool foldable = true;
  std::vector<NodeId> violations;
};

inline FoldabilityReport is_locally_flat_foldable(const MVAssignment& a) {
  FoldabilityReport report;
  for (const NodeId& node : all_nodes(a.size())) {
    if (!check_birds_foot(a, node)) report.violations.push_back(node);
  }
  report.foldable = report.violations.empty();
  return report;
}

/// Standard Miura assignment. Zig-zag lines are monochrome and alternate,
/// starting with a mountain on the leftmost one; every horizontal crease is
/// then read off a neighbouring node, where the standard pattern has
/// mu(leg) = mu(lateral toes) = -mu(middle toe).
inline MVAssignment standard_assignment(GridSize size) {
  MVAssignment a(size, Fold::mountain);
  // zig-zag line k (1-based) is a mountain iff k is odd
  const auto zigzag = [](int line) { return line % 2 == 1 ? Fold::mountain : Fold::valley; };
  for (int r = 0; r < size.rows; ++r)
    for (int c = 0; c + 1 < size.cols; ++c) a.set({CreaseKind::V, r, c}, zigzag(c + 1));

  for (int r = 0; r + 1 < size.rows; ++r) {
    for (int c = 0; c < size.cols; ++c) {
      const CreaseId id{CreaseKind::H, r, c};
      if (size.cols == 1) {
        // no nodes: keep the alternation phase of the wider patterns
        a.set(id, (r + 1) % 2 == 1 ? Fold::mountain : Fold::valley);
        continue;
      }
      const NodeId node = c + 1 < size.cols ? NodeId{r + 1, c + 1} : NodeId{r + 1, c};
      const NodeStar star = node_star(size, node);
      const Fold lateral = a[star.lateral_toe_north];
      a.set(id, star.leg == id ? lateral : -lateral);
    }
  }
  return a;
}

}  // namespace miura
