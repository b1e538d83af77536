#include "polysect/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"

using namespace polysect;

namespace {

// Union-find connectivity over the edge graph.
bool edges_connect(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };
  for (auto [a, b] : edges) parent[static_cast<size_t>(find(a))] = find(b);
  for (int i = 0; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

std::vector<double> normalized_distances(const Eigen::MatrixXd& pts) {
  std::vector<double> d;
  for (Eigen::Index i = 0; i < pts.rows(); ++i)
    for (Eigen::Index j = i + 1; j < pts.rows(); ++j) d.push_back((pts.row(i) - pts.row(j)).norm());
  std::sort(d.begin(), d.end());
  if (!d.empty())
    for (double& x : d) x /= d.back();
  return d;
}

bool same_shape(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows()) return false;
  const auto da = normalized_distances(a), db = normalized_distances(b);
  for (size_t i = 0; i < da.size(); ++i)
    if (std::abs(da[i] - db[i]) > 1e-8) return false;
  return true;
}

}  // namespace

TEST_CASE("cube vertices") {
  const auto p = generate_vertices("cube", 3);
  CHECK(p.count() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(p.vertices(i, j)) == doctest::Approx(1.0));
  CHECK(p.symbol->str() == "{4,3}");
}

TEST_CASE("orthoplex vertices") {
  const auto p = generate_vertices("orthoplex", 4);
  CHECK(p.count() == 8);
  for (int i = 0; i < 8; ++i) CHECK(p.vertices.row(i).norm() == doctest::Approx(1.0));
  CHECK(p.symbol->str() == "{3,3,4}");
}

TEST_CASE("simplex is regular with unit circumradius") {
  for (int dim = 2; dim <= 6; ++dim) {
    const auto p = generate_vertices("simplex", dim);
    CHECK(p.count() == dim + 1);
    CHECK(p.centroid().norm() < 1e-12);
    for (int i = 0; i < p.count(); ++i) CHECK(p.vertices.row(i).norm() == doctest::Approx(1.0));
    const double edge = (p.vertices.row(0) - p.vertices.row(1)).norm();
    for (int i = 0; i < p.count(); ++i)
      for (int j = i + 1; j < p.count(); ++j)
        CHECK((p.vertices.row(i) - p.vertices.row(j)).norm() == doctest::Approx(edge));
  }
}

TEST_CASE("24-cell vertices are the signed pair permutations") {
  const auto p = generate_vertices("24-cell", 4);
  CHECK(p.count() == 24);
  std::set<std::vector<int>> seen;
  for (int i = 0; i < 24; ++i) {
    std::vector<int> coords(4);
    int nonzero = 0;
    for (int j = 0; j < 4; ++j) {
      coords[static_cast<size_t>(j)] = static_cast<int>(std::lround(p.vertices(i, j)));
      if (coords[static_cast<size_t>(j)] != 0) ++nonzero;
    }
    CHECK(nonzero == 2);
    seen.insert(coords);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("600-cell and 120-cell vertex counts") {
  const auto hexacosi = generate_vertices("600-cell", 4);
  CHECK(hexacosi.count() == 120);
  for (int i = 0; i < hexacosi.count(); ++i)
    CHECK(hexacosi.vertices.row(i).norm() == doctest::Approx(1.0));

  const auto hecatonicosa = generate_vertices("120-cell", 4);
  CHECK(hecatonicosa.count() == 600);
  for (int i = 0; i < hecatonicosa.count(); ++i)
    CHECK(hecatonicosa.vertices.row(i).norm() == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("generator by symbol and synonyms") {
  CHECK(generate_vertices(SchlafliSymbol({4, 3, 3})).label == "cube");
  CHECK(generate_vertices(SchlafliSymbol({3, 3, 4})).label == "orthoplex");
  CHECK(generate_vertices(SchlafliSymbol({3, 4, 3})).label == "24-cell");
  CHECK(generate_vertices("tesseract", 4).count() == 16);
  CHECK(generate_vertices("5-cell", 4).count() == 5);
  CHECK_THROWS_AS(generate_vertices("icosahedron", 3), std::domain_error);
  CHECK_THROWS_AS(generate_vertices("24-cell", 5), std::domain_error);
}

TEST_CASE("edge detection on the platonic trio") {
  const auto cube = generate_vertices("cube", 3);
  const auto cube_edges = edges_min_distance(cube);
  CHECK(cube_edges.pairs.size() == 12);
  CHECK(cube_edges.length == doctest::Approx(2.0));
  CHECK(edges_connect(cube.count(), cube_edges.pairs));

  const auto tet = generate_vertices("simplex", 3);
  CHECK(edges_min_distance(tet).pairs.size() == 6);  // complete graph on 4 vertices

  const auto oct = generate_vertices("orthoplex", 3);
  const auto oct_edges = edges_min_distance(oct);
  CHECK(oct_edges.pairs.size() == 12);
  CHECK(edges_connect(oct.count(), oct_edges.pairs));
}

TEST_CASE("edge counts match the configurational numbers") {
  for (const auto& [name, n, p] :
       std::vector<std::tuple<std::string, int, int>>{{"cube", 4, 3}, {"orthoplex", 3, 4}, {"simplex", 3, 3}}) {
    const auto counts = polyhedron_counts(n, p);
    const auto poly = generate_vertices(name, 3);
    CHECK(static_cast<long>(edges_min_distance(poly).pairs.size()) == counts.counts[1]);
  }
}

TEST_CASE("edge detection refuses non vertex-transitive input") {
  PolytopeVertices p;
  p.dim = 2;
  p.vertices.resize(3, 2);
  p.vertices << 0, 1, 0, -1, 3, 0;
  p.label = "lopsided";
  CHECK_THROWS_AS(edges_min_distance(p), std::domain_error);
}

TEST_CASE("rectification vertex counts") {
  CHECK(rectify(generate_vertices("cube", 3)).count() == 12);       // cuboctahedron
  CHECK(rectify(generate_vertices("simplex", 3)).count() == 6);     // octahedron
  CHECK(rectify(generate_vertices("orthoplex", 3)).count() == 12);  // cuboctahedron again
  CHECK(rectify(generate_vertices("cube", 4)).count() == 32);
}

TEST_CASE("rectified tetrahedron is an octahedron") {
  const auto oct = rectify(generate_vertices("simplex", 3));
  CHECK(same_shape(oct.vertices, generate_vertices("orthoplex", 3).vertices));
}

TEST_CASE("rectified dual pair gives congruent solids") {
  const auto a = rectify(generate_vertices("cube", 3));
  const auto b = rectify(generate_vertices("orthoplex", 3));
  CHECK(same_shape(a.vertices, b.vertices));
}

TEST_CASE("generated vertex sets are centered") {
  for (const auto& name : {"cube", "orthoplex", "simplex"})
    CHECK(generate_vertices(name, 4).centroid().norm() < 1e-12);
  CHECK(generate_vertices("24-cell", 4).centroid().norm() < 1e-12);
  CHECK(generate_vertices("600-cell", 4).centroid().norm() < 1e-12);
}
