#pragma once

#include <Eigen/Core>

#include <vector>

#include "polysect/section.hpp"

namespace polysect {

/// One sectioned cube of the window: its lattice offset (cube center at
/// 2 * offset) plus the section in frame coordinates. mesh is used for
/// 3-flat frames, polygon for 2-flat frames.
struct TileCell {
  Eigen::VectorXi offset;
  Mesh mesh;
  Polygon2D polygon;
};

struct TilingPatch {
  int ambient_dim = 0;
  int radius = 0;
  int section_dim = 0;  // 2 or 3
  std::vector<TileCell> cells;
};

/// All integer offsets in {-radius..radius}^dim, lexicographic order.
std::vector<Eigen::VectorXi> cubic_translates(int dim, int radius, int cell_cap = 10000);

/// Sections every translate of the edge-2 cube {-1,1}^dim whose center lies
/// within sqrt(dim) of the flat; empty and grazing cells are dropped.
TilingPatch section_tessellation(int dim, int radius, const SectionFrame& frame,
                                 const Tolerance& tol = {}, int cell_cap = 10000);

struct PatchClass {
  int count = 0;
  int representative = -1;  // cell index
};

/// Histogram of cell congruence classes. interior_only drops cells whose
/// offset touches the window boundary, so boundary artifacts of a small
/// window do not show up as extra classes.
std::vector<PatchClass> classify_patch(const TilingPatch& p, bool interior_only = true,
                                       double tol = 1e-6);

/// Total area (2-flat) or volume (3-flat) of the patch cells.
double patch_measure(const TilingPatch& p);

/// Area or volume of the window box intersected with the flat.
double window_slice_measure(int dim, int radius, const SectionFrame& frame, const Tolerance& tol = {});

}  // namespace polysect
