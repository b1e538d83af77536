#pragma once

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "polysect/section.hpp"
#include "polysect/tiling.hpp"

namespace polysect {

/// Deterministic JSON writer: keys keep insertion order, floats print with
/// 6 fixed decimals (9-digit scientific below 1e-4), so a parse/re-dump
/// cycle is byte-identical.
std::string dump_json(const nlohmann::ordered_json& j);

/// Number formatting shared by every exporter.
std::string format_coord(double x);

/// Rounds to 6 decimals; applied to geometry coordinates before emission so
/// roundoff noise prints as an exact zero.
double chop6(double x);

nlohmann::ordered_json mesh_to_json(const Mesh& m);
nlohmann::ordered_json polygon_to_json(const Polygon2D& p);
nlohmann::ordered_json patch_to_json(const TilingPatch& p);

/// OFF: "OFF", counts line "V F E", vertex lines, face lines with outward
/// winding. 3-flat patches are merged into one file.
std::string to_off(const Mesh& m);
std::string to_off(const TilingPatch& p);

/// Wavefront OBJ with 1-based indices; patches get one object per cell.
std::string to_obj(const Mesh& m);
std::string to_obj(const TilingPatch& p);

/// SVG with a 5% viewBox margin; one path per cell, filled by congruence
/// class.
std::string to_svg(const Polygon2D& p);
std::string to_svg(const TilingPatch& p);

/// Per-cell congruence class ids in first-seen order (all cells).
std::vector<int> patch_class_assignment(const TilingPatch& p, double tol = 1e-6);

}  // namespace polysect
