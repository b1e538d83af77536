#include "polysect/exporters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polysect {

namespace {

using nlohmann::ordered_json;

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                          "#b07aa1", "#76b7b2", "#edc948", "#ff9da7"};

void require_nonempty(bool empty, const char* format) {
  if (empty) throw std::domain_error(std::string("export: empty geometry cannot be written as ") + format);
}

void dump_value(const ordered_json& j, std::string& out) {
  switch (j.type()) {
    case ordered_json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case ordered_json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        dump_value(item, out);
      }
      out += ']';
      break;
    }
    case ordered_json::value_t::number_float:
      out += format_coord(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

ordered_json coords_json(const Eigen::Ref<const Eigen::VectorXd>& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(chop6(v[i]));
  return a;
}

template <typename PointList>
ordered_json points_json(const PointList& pts) {
  ordered_json a = ordered_json::array();
  for (const auto& p : pts) a.push_back(coords_json(p));
  return a;
}

ordered_json faces_json(const std::vector<std::vector<int>>& faces) {
  ordered_json a = ordered_json::array();
  for (const auto& f : faces) a.push_back(f);
  return a;
}

struct Bounds {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool started = false;

  void grow(const Eigen::Vector2d& p) {
    if (!started) {
      min_x = max_x = p.x();
      min_y = max_y = p.y();
      started = true;
      return;
    }
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  }
};

// The y axis is negated so the plot keeps the mathematical orientation.
std::string svg_document(const std::vector<const Polygon2D*>& cells, const std::vector<int>& classes) {
  Bounds b;
  for (const auto* poly : cells)
    for (const auto& v : poly->vertices) b.grow({chop6(v.x()), -chop6(v.y())});
  const double width = b.max_x - b.min_x;
  const double height = b.max_y - b.min_y;
  const double margin = 0.05 * std::max(width, height);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += format_coord(b.min_x - margin) + " " + format_coord(b.min_y - margin) + " " +
         format_coord(width + 2 * margin) + " " + format_coord(height + 2 * margin) + "\">\n";
  const std::string stroke_width = format_coord(0.01 * std::max(width, height));
  for (size_t i = 0; i < cells.size(); ++i) {
    out += "  <path d=\"";
    const auto& verts = cells[i]->vertices;
    for (size_t k = 0; k < verts.size(); ++k) {
      out += (k == 0 ? "M" : " L");
      out += format_coord(chop6(verts[k].x())) + "," + format_coord(chop6(-verts[k].y()));
    }
    out += " Z\" fill=\"";
    out += kPalette[static_cast<size_t>(classes[i]) % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out += "\" stroke=\"#000000\" stroke-width=\"" + stroke_width + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void append_off_mesh(const Mesh& m, int base, std::string& vertex_lines, std::string& face_lines) {
  for (const auto& v : m.vertices)
    vertex_lines += format_coord(chop6(v.x())) + " " + format_coord(chop6(v.y())) + " " +
                    format_coord(chop6(v.z())) + "\n";
  for (const auto& f : m.faces) {
    face_lines += std::to_string(f.size());
    for (int idx : f) face_lines += " " + std::to_string(idx + base);
    face_lines += "\n";
  }
}

}  // namespace

double chop6(double x) {
  if (std::abs(x) > 1e12) return x;
  const double r = std::llround(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

std::string format_coord(double x) {
  char buf[64];
  if (x == 0.0) return "0.000000";
  if (std::abs(x) < 1e-4) {
    std::snprintf(buf, sizeof(buf), "%.9e", x);
    return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string dump_json(const ordered_json& j) {
  std::string out;
  dump_value(j, out);
  out += "\n";
  return out;
}

ordered_json mesh_to_json(const Mesh& m) {
  ordered_json j;
  j["vertices"] = points_json(m.vertices);
  j["faces"] = faces_json(m.faces);
  return j;
}

ordered_json polygon_to_json(const Polygon2D& p) {
  ordered_json j;
  j["vertices"] = points_json(p.vertices);
  return j;
}

ordered_json patch_to_json(const TilingPatch& p) {
  ordered_json cells = ordered_json::array();
  for (const auto& cell : p.cells) {
    ordered_json c;
    ordered_json offset = ordered_json::array();
    for (Eigen::Index i = 0; i < cell.offset.size(); ++i) offset.push_back(cell.offset[i]);
    c["offset"] = offset;
    if (p.section_dim == 3)
      c["mesh"] = mesh_to_json(cell.mesh);
    else
      c["polygon"] = polygon_to_json(cell.polygon);
    cells.push_back(c);
  }
  ordered_json j;
  j["cells"] = cells;
  return j;
}

std::string to_off(const Mesh& m) {
  require_nonempty(m.empty(), "OFF");
  std::string vertex_lines, face_lines;
  append_off_mesh(m, 0, vertex_lines, face_lines);
  const size_t edges = mesh_edges(m).size();
  return "OFF\n" + std::to_string(m.vertices.size()) + " " + std::to_string(m.faces.size()) + " " +
         std::to_string(edges) + "\n" + vertex_lines + face_lines;
}

std::string to_off(const TilingPatch& p) {
  require_nonempty(p.cells.empty() || p.section_dim != 3, "OFF");
  std::string vertex_lines, face_lines;
  size_t nv = 0, nf = 0, ne = 0;
  int base = 0;
  for (const auto& cell : p.cells) {
    append_off_mesh(cell.mesh, base, vertex_lines, face_lines);
    base += static_cast<int>(cell.mesh.vertices.size());
    nv += cell.mesh.vertices.size();
    nf += cell.mesh.faces.size();
    ne += mesh_edges(cell.mesh).size();
  }
  return "OFF\n" + std::to_string(nv) + " " + std::to_string(nf) + " " + std::to_string(ne) + "\n" +
         vertex_lines + face_lines;
}

std::string to_obj(const Mesh& m) {
  require_nonempty(m.empty(), "OBJ");
  std::string out;
  for (const auto& v : m.vertices)
    out += "v " + format_coord(chop6(v.x())) + " " + format_coord(chop6(v.y())) + " " +
           format_coord(chop6(v.z())) + "\n";
  for (const auto& f : m.faces) {
    out += "f";
    for (int idx : f) out += " " + std::to_string(idx + 1);
    out += "\n";
  }
  return out;
}

std::string to_obj(const TilingPatch& p) {
  require_nonempty(p.cells.empty() || p.section_dim != 3, "OBJ");
  std::string out;
  int base = 0;
  for (const auto& cell : p.cells) {
    out += "o cell";
    for (Eigen::Index i = 0; i < cell.offset.size(); ++i) out += "_" + std::to_string(cell.offset[i]);
    out += "\n";
    for (const auto& v : cell.mesh.vertices)
      out += "v " + format_coord(chop6(v.x())) + " " + format_coord(chop6(v.y())) + " " +
             format_coord(chop6(v.z())) + "\n";
    for (const auto& f : cell.mesh.faces) {
      out += "f";
      for (int idx : f) out += " " + std::to_string(idx + base + 1);
      out += "\n";
    }
    base += static_cast<int>(cell.mesh.vertices.size());
  }
  return out;
}

std::string to_svg(const Polygon2D& p) {
  require_nonempty(p.empty(), "SVG");
  return svg_document({&p}, {0});
}

std::string to_svg(const TilingPatch& p) {
  require_nonempty(p.cells.empty() || p.section_dim != 2, "SVG");
  std::vector<const Polygon2D*> cells;
  for (const auto& cell : p.cells) cells.push_back(&cell.polygon);
  return svg_document(cells, patch_class_assignment(p));
}

std::vector<int> patch_class_assignment(const TilingPatch& p, double tol) {
  std::vector<int> assignment(p.cells.size(), -1);
  std::vector<int> representatives;
  for (size_t i = 0; i < p.cells.size(); ++i) {
    for (size_t c = 0; c < representatives.size(); ++c) {
      const TileCell& rep = p.cells[static_cast<size_t>(representatives[c])];
      const bool same = p.section_dim == 3
                            ? congruent_up_to_similarity(rep.mesh, p.cells[i].mesh, tol)
                            : congruent_up_to_similarity(rep.polygon, p.cells[i].polygon, tol);
      if (same) {
        assignment[i] = static_cast<int>(c);
        break;
      }
    }
    if (assignment[i] < 0) {
      assignment[i] = static_cast<int>(representatives.size());
      representatives.push_back(static_cast<int>(i));
    }
  }
  return assignment;
}

}  // namespace polysect
