#pragma once

// JSON instance documents: grid size, per-crease MV values (null when
// unassigned) and an optional coloring. Keys are written in the order rows,
// cols, creases, coloring; creases are written in crease-index order.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "miura/coloring.hpp"
#include "miura/grid.hpp"
#include "miura/min_forcing.hpp"

namespace miura {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent instance data. The message starts with the
/// offending field path, e.g. "creases[3].r".
class document_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InstanceDocument {
  PartialMVAssignment creases;
  std::optional<GridColoring> coloring;

  [[nodiscard]] GridSize size() const { return creases.size(); }
  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

inline InstanceDocument make_document(const GridColoring& k) {
  return {PartialMVAssignment(coloring_to_mv(k)), k};
}

/// The assignment the document describes: its creases, with unassigned
/// creases filled from the coloring when one is present.
inline PartialMVAssignment effective_assignment(const InstanceDocument& doc) {
  if (!doc.coloring) return doc.creases;
  return PartialMVAssignment(coloring_to_mv(*doc.coloring));
}

/// The coloring of a document: the stored one, or the one determined by a
/// total locally flat-foldable assignment.
inline GridColoring document_coloring(const InstanceDocument& doc) {
  if (doc.coloring) return *doc.coloring;
  if (!doc.creases.is_total()) throw document_error("creases: assignment is partial and no coloring is given");
  MVAssignment total(doc.size(), Fold::mountain);
  for (int i = 0; i < doc.size().creases(); ++i) total.set_index(i, *doc.creases.at_index(i));
  const auto report = is_locally_flat_foldable(total);
  if (!report.foldable) {
    throw document_error("creases: not locally flat-foldable at node " + to_string(report.violations.front()));
  }
  return mv_to_coloring(total);
}

namespace detail {

inline int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw document_error(path + ": expected an integer");
  return j.get<int>();
}

inline const json& require_key(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw document_error(path + (path.empty() ? "" : ".") + key + ": missing");
  return j.at(key);
}

}  // namespace detail

inline json crease_to_json(const CreaseId& id) {
  return json{{"kind", id.kind == CreaseKind::H ? "h" : "v"}, {"r", id.r}, {"c", id.c}};
}

/// Parses {kind, r, c} and checks it against `size`.
inline CreaseId crease_from_json(const json& j, GridSize size, const std::string& path) {
  if (!j.is_object()) throw document_error(path + ": expected an object");
  const json& kind = detail::require_key(j, "kind", path);
  if (!kind.is_string() || (kind != "h" && kind != "v")) throw document_error(path + ".kind: expected \"h\" or \"v\"");
  const CreaseId id{kind == "h" ? CreaseKind::H : CreaseKind::V,
                    detail::require_int(detail::require_key(j, "r", path), path + ".r"),
                    detail::require_int(detail::require_key(j, "c", path), path + ".c")};
  if (!is_valid(size, id)) {
    const bool row_bad = id.r < 0 || id.r >= (id.kind == CreaseKind::H ? size.rows - 1 : size.rows);
    throw document_error(path + (row_bad ? ".r" : ".c") + ": " + to_string(id) + " is outside a " +
                         std::to_string(size.rows) + "x" + std::to_string(size.cols) + " grid");
  }
  return id;
}

inline json forcing_set_to_json(std::span<const CreaseId> f) {
  json out = json::array();
  for (const auto& id : f) out.push_back(crease_to_json(id));
  return out;
}

/// Accepts either a list of creases or an object with a "forcing_set" list.
inline ForcingSet forcing_set_from_json(const json& j, GridSize size) {
  const json* list = &j;
  std::string path = "forcing_set";
  if (j.is_object()) list = &detail::require_key(j, "forcing_set", "");
  if (!list->is_array()) throw document_error(path + ": expected a list of creases");
  ForcingSet out;
  for (std::size_t i = 0; i < list->size(); ++i)
    out.push_back(crease_from_json((*list)[i], size, path + "[" + std::to_string(i) + "]"));
  return out;
}

inline json document_to_json(const InstanceDocument& doc) {
  const GridSize size = doc.size();
  json out;
  out["rows"] = size.rows;
  out["cols"] = size.cols;
  out["creases"] = json::array();
  for (int i = 0; i < size.creases(); ++i) {
    json entry = crease_to_json(crease_at(size, i));
    const auto f = doc.creases.at_index(i);
    entry["mv"] = f ? json(sign(*f)) : json(nullptr);
    out["creases"].push_back(std::move(entry));
  }
  if (doc.coloring) out["coloring"] = doc.coloring->rows();
  return out;
}

inline InstanceDocument document_from_json(const json& j) {
  if (!j.is_object()) throw document_error("document: expected an object");
  const int rows = detail::require_int(detail::require_key(j, "rows", ""), "rows");
  const int cols = detail::require_int(detail::require_key(j, "cols", ""), "cols");
  if (rows < 1) throw document_error("rows: must be at least 1");
  if (cols < 1) throw document_error("cols: must be at least 1");
  const GridSize size(rows, cols);

  InstanceDocument doc{PartialMVAssignment(size), std::nullopt};
  if (j.contains("creases")) {
    const json& list = j.at("creases");
    if (!list.is_array()) throw document_error("creases: expected a list");
    std::vector<char> seen(static_cast<std::size_t>(size.creases()), 0);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "creases[" + std::to_string(i) + "]";
      const CreaseId id = crease_from_json(list[i], size, path);
      const int index = crease_index(size, id);
      if (seen[static_cast<std::size_t>(index)]) throw document_error(path + ": duplicate entry for " + to_string(id));
      seen[static_cast<std::size_t>(index)] = 1;
      const json& mv = detail::require_key(list[i], "mv", path);
      if (mv.is_null()) continue;
      if (!mv.is_number_integer() || (mv != 1 && mv != -1)) throw document_error(path + ".mv: expected 1, -1 or null");
      doc.creases.set(id, fold_from_sign(mv.get<int>()));
    }
  }

  if (j.contains("coloring")) {
    const json& grid = j.at("coloring");
    if (!grid.is_array() || static_cast<int>(grid.size()) != rows) {
      throw document_error("coloring: expected " + std::to_string(rows) + " rows");
    }
    GridColoring k(size);
    for (int r = 0; r < rows; ++r) {
      const json& row = grid[static_cast<std::size_t>(r)];
      const std::string row_path = "coloring[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != cols) {
        throw document_error(row_path + ": expected " + std::to_string(cols) + " entries");
      }
      for (int c = 0; c < cols; ++c) {
        const json& v = row[static_cast<std::size_t>(c)];
        const std::string path = row_path + "[" + std::to_string(c) + "]";
        if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 2) throw document_error(path + ": expected 0, 1 or 2");
        k.set(r, c, v.get<int>());
      }
    }
    if (k(0, 0) != 0) throw document_error("coloring[0][0]: must be 0");
    if (!is_proper(k)) throw document_error("coloring: adjacent cells share a color");
    const MVAssignment implied = coloring_to_mv(k);
    for (int i = 0; i < size.creases(); ++i) {
      const auto f = doc.creases.at_index(i);
      if (f && *f != implied.at_index(i)) {
        throw document_error("creases: " + to_string(crease_at(size, i)) + " disagrees with the coloring");
      }
    }
    doc.coloring = k;
  }
  return doc;
}

inline InstanceDocument parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw document_error(std::string("document: malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline std::string serialize_instance(const InstanceDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

}  // namespace miura
