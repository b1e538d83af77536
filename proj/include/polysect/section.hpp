#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "polysect/facets.hpp"
#include "polysect/numeric.hpp"

namespace polysect {

/// A 2- or 3-flat inside R^n, given by spanning roots (never by normals: at
/// codimension > 1 the normal is not unique), an orthonormal basis from
/// Gram-Schmidt, and a translation point.
struct SectionFrame {
  std::vector<Eigen::VectorXd> roots;
  Eigen::MatrixXd basis;       // n x k, orthonormal columns
  Eigen::VectorXd origin;      // translation point p0
  Eigen::MatrixXd root_angles; // k x k pairwise angles, radians

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int flat_dim() const { return static_cast<int>(basis.cols()); }
};

SectionFrame build_section_frame(std::vector<Eigen::VectorXd> roots, Eigen::VectorXd p0,
                                 const Tolerance& tol = {});

/// Same flat orientation through a different translation point.
SectionFrame with_origin(SectionFrame frame, Eigen::VectorXd p0);

Eigen::VectorXd section_point_to_ambient(const SectionFrame& f, const Eigen::Ref<const Eigen::VectorXd>& y);

/// Convex polyhedron section: vertices in frame coordinates plus faces as
/// counterclockwise cycles seen from outside. grazing marks a section that
/// touched the polytope in fewer than 3 dimensions.
struct Mesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::vector<int>> faces;
  bool grazing = false;

  bool empty() const { return vertices.empty(); }
};

std::vector<std::pair<int, int>> mesh_edges(const Mesh& m);
bool mesh_closed(const Mesh& m);
double mesh_volume(const Mesh& m);

struct Polygon2D {
  std::vector<Eigen::Vector2d> vertices;  // counterclockwise
  bool grazing = false;

  bool empty() const { return vertices.empty(); }
};

double polygon_area(const Polygon2D& p);

/// Maps each half-space (n, c) to (T^t n, c + n.p0) in flat coordinates.
/// Half-spaces orthogonal to the flat are dropped when always satisfied;
/// when one of them excludes the whole flat, returns nullopt (empty marker).
std::optional<HalfspacePolytope> restrict_halfspaces(const HalfspacePolytope& hp,
                                                     const SectionFrame& f,
                                                     const Tolerance& tol = {});

/// Vertex enumeration over all plane triples / line pairs, feasibility
/// filtering, and face assembly. Throws on unbounded systems.
Mesh vertex_enum_3d(const HalfspacePolytope& hp, const Tolerance& tol = {});
Polygon2D vertex_enum_2d(const HalfspacePolytope& hp, const Tolerance& tol = {});

/// One section per offset t, taken through the point t * direction.
std::vector<Mesh> sweep_sections(const HalfspacePolytope& hp,
                                 const Eigen::Ref<const Eigen::VectorXd>& direction,
                                 const std::vector<double>& offsets, const SectionFrame& frame,
                                 const Tolerance& tol = {});

/// Per spanning root: does reflecting the section through the in-flat plane
/// orthogonal to that root map the vertex set to itself?
std::vector<bool> reflection_invariance(const Mesh& m, const SectionFrame& f, const Tolerance& tol = {});
std::vector<bool> reflection_invariance(const Polygon2D& p, const SectionFrame& f,
                                        const Tolerance& tol = {});

/// Order of the full planar point-symmetry group of the polygon about its
/// centroid (rotations by 2 pi k/V plus vertex/edge-midpoint axis mirrors).
int symmetry_order_2d(const Polygon2D& poly, const Tolerance& tol = {});

/// Equal vertex counts and matching diameter-normalized pairwise-distance
/// multisets.
bool congruent_up_to_similarity(const Mesh& a, const Mesh& b, double tol = 1e-6);
bool congruent_up_to_similarity(const Polygon2D& a, const Polygon2D& b, double tol = 1e-6);

}  // namespace polysect
