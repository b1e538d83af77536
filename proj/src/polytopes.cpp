#include "polysect/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace polysect {

namespace {

Eigen::MatrixXd from_rows(const std::vector<Eigen::VectorXd>& rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

Eigen::MatrixXd cube_vertices(int dim) {
  const int n = 1 << dim;
  Eigen::MatrixXd v(n, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) v(i, j) = (i >> j) & 1 ? 1.0 : -1.0;
  return v;
}

Eigen::MatrixXd orthoplex_vertices(int dim) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2 * dim, dim);
  for (int i = 0; i < dim; ++i) {
    v(2 * i, i) = 1.0;
    v(2 * i + 1, i) = -1.0;
  }
  return v;
}

// Regular simplex built layer by layer with unit edge, then rescaled to unit
// circumradius.
Eigen::MatrixXd simplex_vertices(int dim) {
  std::vector<Eigen::VectorXd> pts = {Eigen::VectorXd::Constant(1, -0.5),
                                      Eigen::VectorXd::Constant(1, 0.5)};
  for (int d = 2; d <= dim; ++d) {
    const double circum_prev = std::sqrt((d - 1) / (2.0 * d));
    const double height = std::sqrt(1.0 - circum_prev * circum_prev);
    std::vector<Eigen::VectorXd> next;
    for (const auto& p : pts) {
      Eigen::VectorXd q = Eigen::VectorXd::Zero(d);
      q.head(d - 1) = p;
      q[d - 1] = -height / (d + 1);
      next.push_back(q);
    }
    Eigen::VectorXd apex = Eigen::VectorXd::Zero(d);
    apex[d - 1] = height * d / (d + 1);
    next.push_back(apex);
    pts = std::move(next);
  }
  Eigen::MatrixXd m = from_rows(pts);
  return m / m.row(0).norm();
}

Eigen::MatrixXd icositetrachoron_vertices() {
  std::vector<Eigen::VectorXd> pts;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int sa : {-1, 1})
        for (int sb : {-1, 1}) {
          Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
          v[a] = sa;
          v[b] = sb;
          pts.push_back(v);
        }
  return from_rows(pts);
}

const std::vector<std::array<int, 4>>& even_permutations4() {
  static const std::vector<std::array<int, 4>> perms = [] {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

void push_signed(std::vector<Eigen::VectorXd>& out, const std::array<double, 4>& pattern) {
  std::vector<int> nonzero;
  for (int i = 0; i < 4; ++i)
    if (pattern[i] != 0.0) nonzero.push_back(i);
  const int combos = 1 << nonzero.size();
  for (int mask = 0; mask < combos; ++mask) {
    Eigen::VectorXd v(4);
    for (int i = 0; i < 4; ++i) v[i] = pattern[i];
    for (size_t k = 0; k < nonzero.size(); ++k)
      if ((mask >> k) & 1) v[nonzero[k]] = -v[nonzero[k]];
    out.push_back(v);
  }
}

void push_all_permutations(std::vector<Eigen::VectorXd>& out, std::array<double, 4> base) {
  std::sort(base.begin(), base.end());
  std::set<std::array<double, 4>> seen;
  do {
    if (!seen.insert(base).second) continue;
    push_signed(out, base);
  } while (std::next_permutation(base.begin(), base.end()));
}

void push_even_permutations(std::vector<Eigen::VectorXd>& out, const std::array<double, 4>& base) {
  for (const auto& p : even_permutations4()) {
    std::array<double, 4> arranged;
    for (int i = 0; i < 4; ++i) arranged[i] = base[p[i]];
    push_signed(out, arranged);
  }
}

Eigen::MatrixXd hexacosichoron_vertices() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::VectorXd> pts;
  push_all_permutations(pts, {1.0, 0.0, 0.0, 0.0});
  push_signed(pts, {0.5, 0.5, 0.5, 0.5});
  push_even_permutations(pts, {phi / 2.0, 0.5, 1.0 / (2.0 * phi), 0.0});
  return from_rows(pts);
}

Eigen::MatrixXd hecatonicosachoron_vertices() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double phi2 = phi * phi;
  const double inv = 1.0 / phi;
  const double inv2 = 1.0 / phi2;
  const double rt5 = std::sqrt(5.0);
  std::vector<Eigen::VectorXd> pts;
  push_all_permutations(pts, {2.0, 2.0, 0.0, 0.0});
  push_all_permutations(pts, {rt5, 1.0, 1.0, 1.0});
  push_all_permutations(pts, {phi, phi, phi, inv2});
  push_all_permutations(pts, {phi2, inv, inv, inv});
  push_even_permutations(pts, {phi2, 1.0, inv2, 0.0});
  push_even_permutations(pts, {rt5, phi, inv, 0.0});
  push_even_permutations(pts, {2.0, phi, 1.0, inv});
  return from_rows(pts);
}

std::string normalized_name(std::string name) {
  std::string out;
  for (char c : name)
    if (c != '-' && c != '_' && c != ' ') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::vector<int> constant_entries(int count, int value) { return std::vector<int>(static_cast<size_t>(count), value); }

void validate(const PolytopeVertices& p) {
  if (!p.vertices.allFinite()) throw std::invalid_argument("generate_vertices: non-finite coordinates");
  const Eigen::VectorXd c = p.centroid();
  if (c.norm() > 1e-9 * std::max(1.0, p.vertices.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("generate_vertices: vertex set is not centered");
}

}  // namespace

Eigen::VectorXd PolytopeVertices::centroid() const { return vertices.colwise().mean(); }

PolytopeVertices generate_vertices(const std::string& name, int dim) {
  const std::string key = normalized_name(name);
  PolytopeVertices out;
  out.dim = dim;
  if (dim < 2) throw std::domain_error("generate_vertices: dim must be >= 2");

  if (key == "cube" || key == "hypercube" || key == "measurepolytope" ||
      (dim == 4 && (key == "8cell" || key == "tesseract" || key == "octachoron"))) {
    if (dim > 20) throw std::domain_error("generate_vertices: cube dimension too large");
    out.vertices = cube_vertices(dim);
    out.label = "cube";
    std::vector<int> e = constant_entries(dim - 1, 3);
    e.front() = 4;
    out.symbol = SchlafliSymbol(e);
  } else if (key == "orthoplex" || key == "crosspolytope" ||
             (dim == 4 && (key == "16cell" || key == "hexadecachoron"))) {
    out.vertices = orthoplex_vertices(dim);
    out.label = "orthoplex";
    std::vector<int> e = constant_entries(dim - 1, 3);
    e.back() = 4;
    out.symbol = SchlafliSymbol(e);
  } else if (key == "simplex" || (dim == 4 && (key == "5cell" || key == "pentachoron"))) {
    out.vertices = simplex_vertices(dim);
    out.label = "simplex";
    out.symbol = SchlafliSymbol(constant_entries(dim - 1, 3));
  } else if (key == "24cell" || key == "icositetrachoron" || key == "octaplex") {
    if (dim != 4) throw std::domain_error("generate_vertices: 24-cell requires dim == 4");
    out.vertices = icositetrachoron_vertices();
    out.label = "24-cell";
    out.symbol = SchlafliSymbol({3, 4, 3});
  } else if (key == "600cell" || key == "hexacosichoron") {
    if (dim != 4) throw std::domain_error("generate_vertices: 600-cell requires dim == 4");
    out.vertices = hexacosichoron_vertices();
    out.label = "600-cell";
    out.symbol = SchlafliSymbol({3, 3, 5});
  } else if (key == "120cell" || key == "hecatonicosachoron") {
    if (dim != 4) throw std::domain_error("generate_vertices: 120-cell requires dim == 4");
    out.vertices = hecatonicosachoron_vertices();
    out.label = "120-cell";
    out.symbol = SchlafliSymbol({5, 3, 3});
  } else {
    throw std::domain_error("generate_vertices: unsupported polytope '" + name + "' in dimension " +
                            std::to_string(dim));
  }
  validate(out);
  return out;
}

PolytopeVertices generate_vertices(const SchlafliSymbol& symbol) {
  const auto& e = symbol.entries();
  const int dim = symbol.rank();
  const bool all3 = std::all_of(e.begin(), e.end(), [](int k) { return k == 3; });
  if (all3) return generate_vertices("simplex", dim);
  if (e.front() == 4 && std::all_of(e.begin() + 1, e.end(), [](int k) { return k == 3; }))
    return generate_vertices("cube", dim);
  if (e.back() == 4 && std::all_of(e.begin(), e.end() - 1, [](int k) { return k == 3; }))
    return generate_vertices("orthoplex", dim);
  if (e == std::vector<int>{3, 4, 3}) return generate_vertices("24-cell", 4);
  if (e == std::vector<int>{3, 3, 5}) return generate_vertices("600-cell", 4);
  if (e == std::vector<int>{5, 3, 3}) return generate_vertices("120-cell", 4);
  throw std::domain_error("generate_vertices: no generator for symbol " + symbol.str());
}

EdgeList edges_min_distance(const PolytopeVertices& p, const Tolerance& tol) {
  const int n = p.count();
  if (n < 2) throw std::domain_error("edges_min_distance: need at least 2 vertices");
  const Eigen::VectorXd c = p.centroid();
  const double r0 = (p.vertices.row(0).transpose() - c).norm();
  for (int i = 1; i < n; ++i)
    if (!tol.near((p.vertices.row(i).transpose() - c).norm(), r0))
      throw std::domain_error(
          "edges_min_distance: vertices are not equidistant from the centroid "
          "(vertex-transitive input required)");
  double dmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dmin = std::min(dmin, (p.vertices.row(i) - p.vertices.row(j)).norm());
  EdgeList out;
  out.length = dmin;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((p.vertices.row(i) - p.vertices.row(j)).norm() <= dmin + tol.radius(dmin))
        out.pairs.emplace_back(i, j);
  return out;
}

PolytopeVertices rectify(const PolytopeVertices& p, const Tolerance& tol) {
  const EdgeList edges = edges_min_distance(p, tol);
  PolytopeVertices out;
  out.dim = p.dim;
  out.label = "rectified " + p.label;
  out.vertices.resize(static_cast<Eigen::Index>(edges.pairs.size()), p.dim);
  for (size_t k = 0; k < edges.pairs.size(); ++k)
    out.vertices.row(static_cast<Eigen::Index>(k)) =
        0.5 * (p.vertices.row(edges.pairs[k].first) + p.vertices.row(edges.pairs[k].second));
  return out;
}

}  // namespace polysect
