#include "polysect/facets.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace polysect {

namespace {

double vertex_scale(const PolytopeVertices& p) {
  return std::max(1.0, p.vertices.cwiseAbs().maxCoeff());
}

// Supporting-hyperplane test; fills the incident rows on success.
bool supports(const PolytopeVertices& p, const Hyperplane& h, double tol_inc,
              std::vector<int>* incident) {
  incident->clear();
  for (int i = 0; i < p.count(); ++i) {
    const double d = signed_distance(h, p.vertices.row(i).transpose());
    if (d > tol_inc) return false;
    if (std::abs(d) <= tol_inc) incident->push_back(i);
  }
  return true;
}

struct FacetSet {
  std::map<std::vector<long long>, int> index;
  std::vector<Hyperplane> halfspaces;
  std::vector<std::vector<int>> incident;

  // Returns the facet index; -1 when already present.
  int insert(const Hyperplane& h, std::vector<int> inc) {
    const Hyperplane u = h.unit();
    auto [it, fresh] = index.emplace(oriented_key(u), static_cast<int>(halfspaces.size()));
    if (!fresh) return -1;
    halfspaces.push_back(u);
    incident.push_back(std::move(inc));
    return it->second;
  }
};

HalfspacePolytope finalize(int dim, FacetSet&& set) {
  std::vector<size_t> order(set.halfspaces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return oriented_key(set.halfspaces[a]) < oriented_key(set.halfspaces[b]);
  });
  HalfspacePolytope out;
  out.dim = dim;
  for (size_t i : order) {
    out.halfspaces.push_back(set.halfspaces[i]);
    std::sort(set.incident[i].begin(), set.incident[i].end());
    out.incident.push_back(set.incident[i]);
  }
  return out;
}

void require_affine_span(const PolytopeVertices& p, const Tolerance& tol) {
  if (p.count() < p.dim + 1)
    throw std::domain_error("enumerate_facets: need at least dim + 1 vertices");
  Eigen::MatrixXd diffs(p.count() - 1, p.dim);
  for (int i = 1; i < p.count(); ++i) diffs.row(i - 1) = p.vertices.row(i) - p.vertices.row(0);
  if (numeric_rank(diffs, tol) < p.dim)
    throw std::domain_error("enumerate_facets: vertices do not affinely span R^dim");
}

// Candidate hyperplane through the subset rows, or nullopt when the subset is
// degenerate (nullity != 1).
std::optional<Hyperplane> subset_hyperplane(const PolytopeVertices& p, const std::vector<int>& subset,
                                            const Tolerance& tol) {
  const int d = p.dim;
  Eigen::MatrixXd diffs(d - 1, d);
  for (int i = 0; i + 1 < d; ++i) diffs.row(i) = p.vertices.row(subset[i]) - p.vertices.row(subset.back());
  auto ns = nullspace_basis(diffs, tol);
  if (ns.size() != 1) return std::nullopt;
  const Eigen::VectorXd& normal = ns.front();
  return Hyperplane(normal, -normal.dot(p.vertices.row(subset.back()).transpose()), tol);
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Facet of the projected (dim-1)-polytope through a ridge, used by the pivot
// walk; vertex index lists refer to rows of the parent polytope.
struct Ridge {
  std::vector<int> rows;
};

std::vector<Ridge> facet_ridges(const PolytopeVertices& p, const Hyperplane& facet,
                                const std::vector<int>& incident, const Tolerance& tol);

Hyperplane pivot_across(const PolytopeVertices& p, const Hyperplane& facet,
                        const std::vector<int>& facet_rows, const Ridge& ridge,
                        const Tolerance& tol) {
  const double scale = vertex_scale(p);
  const double tol_inc = tol.radius(scale);
  const Eigen::VectorXd r0 = p.vertices.row(ridge.rows.front()).transpose();

  // Orthonormal basis of the ridge direction space (dim - 2 vectors).
  Eigen::MatrixXd rdiffs(static_cast<Eigen::Index>(ridge.rows.size()) - 1, p.dim);
  for (size_t i = 1; i < ridge.rows.size(); ++i)
    rdiffs.row(static_cast<Eigen::Index>(i) - 1) = p.vertices.row(ridge.rows[i]).transpose() - r0.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rdiffs, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.radius(sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  if (rank != p.dim - 2) throw std::domain_error("enumerate_facets_pivot: ridge does not span a (dim-2)-flat");
  const Eigen::MatrixXd ridge_dirs = svd.matrixV().leftCols(rank);

  // In-facet direction u pointing from the ridge toward the facet interior.
  Eigen::VectorXd fc = Eigen::VectorXd::Zero(p.dim);
  for (int row : facet_rows) fc += p.vertices.row(row).transpose();
  fc /= static_cast<double>(facet_rows.size());
  Eigen::VectorXd u = fc - r0;
  u -= facet.normal * facet.normal.dot(u);
  u -= ridge_dirs * (ridge_dirs.transpose() * u);
  const double ulen = u.norm();
  if (ulen <= tol_inc) throw std::domain_error("enumerate_facets_pivot: degenerate pivot direction");
  u /= ulen;

  // Fold angle of each vertex strictly below the facet plane; the adjacent
  // facet holds the vertices at the largest angle.
  double best = -1.0;
  for (int i = 0; i < p.count(); ++i) {
    const Eigen::VectorXd v = p.vertices.row(i).transpose();
    const double y = facet.normal.dot(v) + facet.offset;
    if (y >= -tol_inc) continue;
    const double x = u.dot(v - r0);
    best = std::max(best, std::atan2(-y, x));
  }
  if (best < 0) throw std::domain_error("enumerate_facets_pivot: no vertex beyond the ridge");
  const Eigen::VectorXd normal = -std::sin(best) * u - std::cos(best) * facet.normal;
  return Hyperplane(normal, -normal.dot(r0), tol);
}

HalfspacePolytope enumerate_facets_impl(const PolytopeVertices& p, bool pivot, const Tolerance& tol);

std::vector<Ridge> facet_ridges(const PolytopeVertices& p, const Hyperplane& facet,
                                const std::vector<int>& incident, const Tolerance& tol) {
  // Project the incident vertices into the facet plane and enumerate the
  // facets of that (dim-1)-polytope.
  auto dirs = nullspace_basis(facet.normal.transpose(), tol);
  Eigen::MatrixXd basis(p.dim, static_cast<Eigen::Index>(dirs.size()));
  for (size_t i = 0; i < dirs.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = dirs[i];
  PolytopeVertices flat;
  flat.dim = p.dim - 1;
  flat.label = "ridge projection";
  flat.vertices.resize(static_cast<Eigen::Index>(incident.size()), p.dim - 1);
  const Eigen::VectorXd origin = p.vertices.row(incident.front()).transpose();
  for (size_t i = 0; i < incident.size(); ++i)
    flat.vertices.row(static_cast<Eigen::Index>(i)) =
        (basis.transpose() * (p.vertices.row(incident[i]).transpose() - origin)).transpose();
  HalfspacePolytope sub = enumerate_facets_impl(flat, false, tol);
  std::vector<Ridge> out;
  for (const auto& rows : sub.incident) {
    Ridge r;
    for (int local : rows) r.rows.push_back(incident[static_cast<size_t>(local)]);
    out.push_back(std::move(r));
  }
  return out;
}

// Base case of the recursive ridge projection: facets of a 1-polytope are its
// two endpoints.
HalfspacePolytope segment_facets(const PolytopeVertices& p, const Tolerance& tol) {
  const double scale = vertex_scale(p);
  int lo = 0, hi = 0;
  for (int i = 1; i < p.count(); ++i) {
    if (p.vertices(i, 0) < p.vertices(lo, 0)) lo = i;
    if (p.vertices(i, 0) > p.vertices(hi, 0)) hi = i;
  }
  FacetSet set;
  std::vector<int> inc;
  for (int i = 0; i < p.count(); ++i)
    if (std::abs(p.vertices(i, 0) - p.vertices(hi, 0)) <= tol.radius(scale)) inc.push_back(i);
  set.insert(Hyperplane(Eigen::VectorXd::Ones(1), -p.vertices(hi, 0), tol), inc);
  inc.clear();
  for (int i = 0; i < p.count(); ++i)
    if (std::abs(p.vertices(i, 0) - p.vertices(lo, 0)) <= tol.radius(scale)) inc.push_back(i);
  set.insert(Hyperplane(-Eigen::VectorXd::Ones(1), p.vertices(lo, 0), tol), inc);
  return finalize(1, std::move(set));
}

HalfspacePolytope enumerate_facets_impl(const PolytopeVertices& p, bool pivot, const Tolerance& tol) {
  if (p.dim == 1) return segment_facets(p, tol);
  require_affine_span(p, tol);
  const double tol_inc = tol.radius(vertex_scale(p));
  FacetSet set;
  std::vector<int> incident;

  if (!pivot || p.dim < 3) {
    std::vector<int> subset(static_cast<size_t>(p.dim));
    for (int i = 0; i < p.dim; ++i) subset[static_cast<size_t>(i)] = i;
    do {
      auto h = subset_hyperplane(p, subset, tol);
      if (!h) continue;
      if (supports(p, *h, tol_inc, &incident)) set.insert(*h, incident);
      Hyperplane flipped(-h->normal, -h->offset, tol);
      if (supports(p, flipped, tol_inc, &incident)) set.insert(flipped, incident);
    } while (next_combination(subset, p.count()));
    return finalize(p.dim, std::move(set));
  }

  // Seed: sample random dim-subsets until one supports the polytope.
  std::mt19937 rng(0x51ede5u);
  std::uniform_int_distribution<int> pick(0, p.count() - 1);
  std::optional<Hyperplane> seed;
  std::vector<int> seed_incident;
  for (int attempt = 0; attempt < 2'000'000 && !seed; ++attempt) {
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < p.dim) chosen.insert(pick(rng));
    std::vector<int> subset(chosen.begin(), chosen.end());
    auto h = subset_hyperplane(p, subset, tol);
    if (!h) continue;
    if (supports(p, *h, tol_inc, &incident)) {
      seed = *h;
      seed_incident = incident;
    } else {
      Hyperplane flipped(-h->normal, -h->offset, tol);
      if (supports(p, flipped, tol_inc, &incident)) {
        seed = flipped;
        seed_incident = incident;
      }
    }
  }
  if (!seed) throw std::domain_error("enumerate_facets_pivot: failed to sample a seed facet");

  std::deque<int> queue;
  queue.push_back(set.insert(*seed, seed_incident));
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const Hyperplane facet = set.halfspaces[static_cast<size_t>(f)];
    const std::vector<int> rows = set.incident[static_cast<size_t>(f)];
    for (const Ridge& ridge : facet_ridges(p, facet, rows, tol)) {
      Hyperplane next = pivot_across(p, facet, rows, ridge, tol);
      if (!supports(p, next, tol_inc, &incident))
        throw std::domain_error("enumerate_facets_pivot: pivoted hyperplane is not supporting");
      const int idx = set.insert(next, incident);
      if (idx >= 0) queue.push_back(idx);
    }
  }
  return finalize(p.dim, std::move(set));
}

}  // namespace

HalfspacePolytope enumerate_facets_bruteforce(const PolytopeVertices& p, const Tolerance& tol) {
  return enumerate_facets_impl(p, false, tol);
}

HalfspacePolytope enumerate_facets_pivot(const PolytopeVertices& p, const Tolerance& tol) {
  return enumerate_facets_impl(p, true, tol);
}

HalfspacePolytope cube_halfspaces(int dim) {
  HalfspacePolytope out;
  out.dim = dim;
  for (int i = 0; i < dim; ++i)
    for (int s : {1, -1}) {
      out.halfspaces.emplace_back(s * Eigen::VectorXd::Unit(dim, i), -1.0);
      out.incident.emplace_back();
    }
  return out;
}

}  // namespace polysect
