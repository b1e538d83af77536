#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polysect/numeric.hpp"
#include "polysect/schlafli.hpp"

namespace polysect {

/// A convex polytope given by its vertex coordinates, one vertex per row.
struct PolytopeVertices {
  int dim = 0;
  Eigen::MatrixXd vertices;
  std::string label;
  std::optional<SchlafliSymbol> symbol;

  int count() const { return static_cast<int>(vertices.rows()); }
  Eigen::VectorXd centroid() const;
};

struct EdgeList {
  std::vector<std::pair<int, int>> pairs;
  double length = 0.0;
};

/// Vertex generators. Names (case-insensitive): simplex, cube, orthoplex in
/// any dimension >= 2; 5-cell, 8-cell, 16-cell, 24-cell, 600-cell, 120-cell
/// in dimension 4. Synonyms like hypercube, cross-polytope and tesseract are
/// accepted.
PolytopeVertices generate_vertices(const std::string& name, int dim);

/// Same, keyed by Schlafli symbol ({3,...,3}, {4,3,...,3}, {3,...,3,4},
/// {3,4,3}, {3,3,5}, {5,3,3}).
PolytopeVertices generate_vertices(const SchlafliSymbol& symbol);

/// All vertex pairs at the minimal pairwise distance. Valid for regular /
/// vertex-transitive inputs, where that distance is the edge length; inputs
/// whose vertices are not equidistant from the centroid are rejected.
EdgeList edges_min_distance(const PolytopeVertices& p, const Tolerance& tol = {});

/// Convex hull of the edge midpoints.
PolytopeVertices rectify(const PolytopeVertices& p, const Tolerance& tol = {});

}  // namespace polysect
