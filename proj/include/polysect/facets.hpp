#pragma once

#include <vector>

#include "polysect/numeric.hpp"
#include "polysect/polytopes.hpp"

namespace polysect {

/// H-representation of a convex polytope: outward unit normals, so the
/// interior is the intersection of the closed negative half-spaces. The
/// incident list of a half-space holds the vertex rows lying on it.
struct HalfspacePolytope {
  int dim = 0;
  std::vector<Hyperplane> halfspaces;
  std::vector<std::vector<int>> incident;

  int count() const { return static_cast<int>(halfspaces.size()); }
};

/// Tests every n-subset of vertices: subsets whose difference matrix has
/// nullity exactly one propose a hyperplane, and both orientations are kept
/// or discarded by the all-vertices-on-the-negative-side test.
HalfspacePolytope enumerate_facets_bruteforce(const PolytopeVertices& p, const Tolerance& tol = {});

/// Breadth-first walk across ridges from one brute-forced seed facet.
/// Produces exactly the brute-force output at a fraction of the subsets.
HalfspacePolytope enumerate_facets_pivot(const PolytopeVertices& p, const Tolerance& tol = {});

/// The 2*dim half-spaces ±x_i <= 1 of the cube {-1,1}^dim.
HalfspacePolytope cube_halfspaces(int dim);

}  // namespace polysect
