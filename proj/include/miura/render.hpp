#pragma once

// ASCII and SVG drawings of a (possibly partial) Miura-ori crease pattern.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "miura/grid.hpp"

namespace miura {

struct RenderConfig {
  double alpha_degrees = 80.0;  // acute cell angle
  double cell_width = 40.0;
  double cell_height = 30.0;
  double margin = 10.0;

  void validate() const {
    if (!(alpha_degrees > 0.0 && alpha_degrees < 90.0)) throw std::invalid_argument("alpha must lie strictly between 0 and 90 degrees");
    if (!(cell_width > 0.0 && cell_height > 0.0)) throw std::invalid_argument("cell dimensions must be positive");
  }
};

inline char fold_char(std::optional<Fold> f) {
  if (!f) return '?';
  return *f == Fold::mountain ? 'M' : 'V';
}

/// 2m - 1 lines. Even lines hold the cells ('.') of one row with the V
/// creases between them; odd lines hold the H creases under each cell with
/// '+' at the interior corners.
inline std::string render_ascii(const PartialMVAssignment& a) {
  const GridSize size = a.size();
  std::string out;
  for (int r = 0; r < size.rows; ++r) {
    for (int c = 0; c < size.cols; ++c) {
      out += '.';
      if (c + 1 < size.cols) out += fold_char(a[{CreaseKind::V, r, c}]);
    }
    out += '\n';
    if (r + 1 == size.rows) break;
    for (int c = 0; c < size.cols; ++c) {
      out += fold_char(a[{CreaseKind::H, r, c}]);
      if (c + 1 < size.cols) out += '+';
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string fmt_coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace detail

/// SVG 1.1 drawing. Rows are parallelogram strips sheared alternately left
/// and right so the V lines become zig-zags. Each maximal run of creases on
/// one grid line with the same value is a single polyline: mountains red and
/// solid, valleys green and dashed, unassigned creases thin and gray. The
/// sheet outline is drawn in black.
inline std::string render_svg(const PartialMVAssignment& a, const RenderConfig& cfg = {}) {
  cfg.validate();
  const GridSize size = a.size();
  const double shear = cfg.cell_height / std::tan(cfg.alpha_degrees * std::numbers::pi / 180.0);
  const auto x_of = [&](int i, int j) { return cfg.margin + j * cfg.cell_width + (i % 2 == 1 ? shear : 0.0); };
  const auto y_of = [&](int i) { return cfg.margin + i * cfg.cell_height; };
  const auto point = [&](int i, int j) { return detail::fmt_coord(x_of(i, j)) + "," + detail::fmt_coord(y_of(i)); };
  const double width = 2 * cfg.margin + size.cols * cfg.cell_width + (size.rows > 1 ? shear : 0.0);
  const double height = 2 * cfg.margin + size.rows * cfg.cell_height;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fmt_coord(width)
      << "\" height=\"" << detail::fmt_coord(height) << "\" viewBox=\"0 0 " << detail::fmt_coord(width) << " "
      << detail::fmt_coord(height) << "\">\n";

  std::string outline;
  for (int i = 0; i <= size.rows; ++i) outline += point(i, 0) + " ";
  for (int i = size.rows; i >= 0; --i) outline += point(i, size.cols) + (i > 0 ? " " : "");
  svg << "  <polygon class=\"outline\" points=\"" << outline << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  const auto style = [](std::optional<Fold> f) -> std::string {
    if (!f) return "stroke=\"#999999\" stroke-width=\"0.5\"";
    if (*f == Fold::mountain) return "stroke=\"#d62728\" stroke-width=\"2\"";
    return "stroke=\"#2ca02c\" stroke-width=\"2\" stroke-dasharray=\"6,4\"";
  };
  const auto class_of = [](std::optional<Fold> f) -> std::string {
    if (!f) return "unassigned";
    return *f == Fold::mountain ? "mountain" : "valley";
  };
  // one grid line: `count` creases, crease k spanning vertices (i0 + di*k, j0 + dj*k) to the next
  const auto draw_line = [&](const char* kind, int count, auto crease_of, int i0, int j0, int di, int dj) {
    int k = 0;
    while (k < count) {
      const auto value = a[crease_of(k)];
      int end = k + 1;
      while (end < count && a[crease_of(end)] == value) ++end;
      std::string pts;
      for (int t = k; t <= end; ++t) pts += point(i0 + di * t, j0 + dj * t) + (t < end ? " " : "");
      svg << "  <polyline class=\"" << kind << " " << class_of(value) << "\" points=\"" << pts
          << "\" fill=\"none\" " << style(value) << "/>\n";
      k = end;
    }
  };
  for (int j = 1; j < size.cols; ++j) {
    draw_line("v", size.rows, [&](int k) { return CreaseId{CreaseKind::V, k, j - 1}; }, 0, j, 1, 0);
  }
  for (int i = 1; i < size.rows; ++i) {
    draw_line("h", size.cols, [&](int k) { return CreaseId{CreaseKind::H, i - 1, k}; }, i, 0, 0, 1);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace miura
