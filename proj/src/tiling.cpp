#include "polysect/tiling.hpp"

#include <cmath>
#include <stdexcept>

namespace polysect {

namespace {

HalfspacePolytope translated_cube(int dim, const Eigen::VectorXd& center) {
  HalfspacePolytope hp = cube_halfspaces(dim);
  for (auto& h : hp.halfspaces) h.offset -= h.normal.dot(center);
  return hp;
}

HalfspacePolytope box_halfspaces(int dim, double half_width) {
  HalfspacePolytope hp = cube_halfspaces(dim);
  for (auto& h : hp.halfspaces) h.offset = -half_width;
  return hp;
}

}  // namespace

std::vector<Eigen::VectorXi> cubic_translates(int dim, int radius, int cell_cap) {
  if (dim < 2 || radius < 1) throw std::domain_error("cubic_translates: need dim >= 2 and radius >= 1");
  double total = 1;
  for (int i = 0; i < dim; ++i) total *= 2 * radius + 1;
  if (total > cell_cap)
    throw std::domain_error("cubic_translates: window of " + std::to_string(static_cast<long>(total)) +
                            " cells exceeds the cap of " + std::to_string(cell_cap));
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi o = Eigen::VectorXi::Constant(dim, -radius);
  while (true) {
    out.push_back(o);
    int k = dim - 1;
    while (k >= 0 && o[k] == radius) o[k--] = -radius;
    if (k < 0) break;
    ++o[k];
  }
  return out;
}

TilingPatch section_tessellation(int dim, int radius, const SectionFrame& frame, const Tolerance& tol,
                                 int cell_cap) {
  if (frame.ambient_dim() != dim)
    throw std::invalid_argument("section_tessellation: frame dimension must match dim");
  if (frame.flat_dim() != 2 && frame.flat_dim() != 3)
    throw std::invalid_argument("section_tessellation: frame must span a 2- or 3-flat");
  TilingPatch patch;
  patch.ambient_dim = dim;
  patch.radius = radius;
  patch.section_dim = frame.flat_dim();
  const double reach = std::sqrt(static_cast<double>(dim));
  for (const auto& offset : cubic_translates(dim, radius, cell_cap)) {
    const Eigen::VectorXd center = 2.0 * offset.cast<double>();
    const Eigen::VectorXd rel = center - frame.origin;
    const double dist = (rel - frame.basis * (frame.basis.transpose() * rel)).norm();
    if (dist > reach + tol.eps) continue;
    auto restricted = restrict_halfspaces(translated_cube(dim, center), frame, tol);
    if (!restricted) continue;
    TileCell cell;
    cell.offset = offset;
    if (patch.section_dim == 3) {
      cell.mesh = vertex_enum_3d(*restricted, tol);
      if (cell.mesh.empty()) continue;
    } else {
      cell.polygon = vertex_enum_2d(*restricted, tol);
      if (cell.polygon.empty()) continue;
    }
    patch.cells.push_back(std::move(cell));
  }
  return patch;
}

std::vector<PatchClass> classify_patch(const TilingPatch& p, bool interior_only, double tol) {
  if (p.cells.empty()) throw std::domain_error("classify_patch: patch has no cells");
  std::vector<int> eligible;
  for (size_t i = 0; i < p.cells.size(); ++i) {
    if (interior_only && p.cells[i].offset.cwiseAbs().maxCoeff() >= p.radius) continue;
    eligible.push_back(static_cast<int>(i));
  }
  std::vector<PatchClass> classes;
  for (int idx : eligible) {
    bool placed = false;
    for (auto& cls : classes) {
      const TileCell& rep = p.cells[static_cast<size_t>(cls.representative)];
      const TileCell& cell = p.cells[static_cast<size_t>(idx)];
      const bool same = p.section_dim == 3 ? congruent_up_to_similarity(rep.mesh, cell.mesh, tol)
                                           : congruent_up_to_similarity(rep.polygon, cell.polygon, tol);
      if (same) {
        ++cls.count;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({1, idx});
  }
  std::sort(classes.begin(), classes.end(), [](const PatchClass& a, const PatchClass& b) {
    return a.count != b.count ? a.count > b.count : a.representative < b.representative;
  });
  return classes;
}

double patch_measure(const TilingPatch& p) {
  double total = 0.0;
  for (const auto& cell : p.cells)
    total += p.section_dim == 3 ? mesh_volume(cell.mesh) : polygon_area(cell.polygon);
  return total;
}

double window_slice_measure(int dim, int radius, const SectionFrame& frame, const Tolerance& tol) {
  auto restricted = restrict_halfspaces(box_halfspaces(dim, 2.0 * radius + 1.0), frame, tol);
  if (!restricted) return 0.0;
  if (frame.flat_dim() == 3) {
    Mesh m = vertex_enum_3d(*restricted, tol);
    return m.empty() ? 0.0 : mesh_volume(m);
  }
  Polygon2D poly = vertex_enum_2d(*restricted, tol);
  return poly.empty() ? 0.0 : polygon_area(poly);
}

}  // namespace polysect
