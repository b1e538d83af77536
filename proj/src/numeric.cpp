#include "polysect/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polysect {

double Tolerance::radius(double scale) const { return eps * std::max(1.0, std::abs(scale)); }

bool Tolerance::near(double a, double b) const {
  return std::abs(a - b) <= radius(std::max(std::abs(a), std::abs(b)));
}

bool Tolerance::zero(double x, double scale) const { return std::abs(x) <= radius(scale); }

Hyperplane::Hyperplane(Eigen::VectorXd n, double c, const Tolerance& tol) : normal(std::move(n)), offset(c) {
  if (normal.size() == 0 || !normal.allFinite() || !std::isfinite(offset))
    throw std::invalid_argument("Hyperplane: entries must be finite and nonempty");
  if (normal.norm() <= tol.eps) throw std::invalid_argument("Hyperplane: normal must be nonzero");
}

Hyperplane Hyperplane::unit() const {
  const double len = normal.norm();
  Hyperplane h;
  h.normal = normal / len;
  h.offset = offset / len;
  return h;
}

double signed_distance(const Hyperplane& h, const Eigen::Ref<const Eigen::VectorXd>& point) {
  if (point.size() != h.normal.size())
    throw std::invalid_argument("signed_distance: dimension mismatch");
  return (h.normal.dot(point) + h.offset) / h.normal.norm();
}

Hyperplane canonical_form(const Hyperplane& h, const Tolerance& tol) {
  Hyperplane u = h.unit();
  for (int i = 0; i < u.normal.size(); ++i) {
    if (std::abs(u.normal[i]) <= tol.eps) continue;
    if (u.normal[i] < 0) {
      u.normal = -u.normal;
      u.offset = -u.offset;
    }
    break;
  }
  return u;
}

namespace {

long long round6(double x) {
  long long r = std::llround(x * 1e6);
  return r == 0 ? 0 : r;  // normalizes -0
}

std::vector<long long> rounded_coords(const Hyperplane& u) {
  std::vector<long long> key(static_cast<size_t>(u.normal.size()) + 1);
  for (int i = 0; i < u.normal.size(); ++i) key[static_cast<size_t>(i)] = round6(u.normal[i]);
  key.back() = round6(u.offset);
  return key;
}

}  // namespace

std::vector<long long> canonical_key(const Hyperplane& h, const Tolerance& tol) {
  return rounded_coords(canonical_form(h, tol));
}

std::vector<long long> oriented_key(const Hyperplane& h) { return rounded_coords(h.unit()); }

Eigen::MatrixXd gram_schmidt(const std::vector<Eigen::VectorXd>& vectors, const Tolerance& tol) {
  if (vectors.empty()) throw std::invalid_argument("gram_schmidt: input must be nonempty");
  const Eigen::Index dim = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("gram_schmidt: inputs must share one dimension");
    if (!v.allFinite()) throw std::invalid_argument("gram_schmidt: entries must be finite");
  }
  Eigen::MatrixXd q(dim, static_cast<Eigen::Index>(vectors.size()));
  for (size_t k = 0; k < vectors.size(); ++k) {
    Eigen::VectorXd v = vectors[k];
    const Eigen::Index cols = static_cast<Eigen::Index>(k);
    // Two projection passes keep the columns orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < cols; ++j) v -= q.col(j).dot(v) * q.col(j);
    const double len = v.norm();
    if (len <= tol.radius(vectors[k].norm()))
      throw std::domain_error("gram_schmidt: input vectors are linearly dependent");
    q.col(cols) = v / len;
  }
  return q;
}

int numeric_rank(const Eigen::Ref<const Eigen::MatrixXd>& m, const Tolerance& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.radius(sv[0]);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

std::vector<Eigen::VectorXd> nullspace_basis(const Eigen::Ref<const Eigen::MatrixXd>& m,
                                             const Tolerance& tol) {
  std::vector<Eigen::VectorXd> basis;
  if (m.cols() == 0) return basis;
  if (m.rows() == 0) {
    for (Eigen::Index i = 0; i < m.cols(); ++i)
      basis.push_back(Eigen::VectorXd::Unit(m.cols(), i));
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.radius(sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  for (Eigen::Index i = rank; i < m.cols(); ++i) basis.push_back(svd.matrixV().col(i));
  return basis;
}

std::optional<Hyperplane> hyperplane_from_points(const std::vector<Eigen::VectorXd>& points,
                                                 const Tolerance& tol) {
  if (points.empty()) throw std::invalid_argument("hyperplane_from_points: input must be nonempty");
  const Eigen::Index n = points.front().size();
  if (static_cast<Eigen::Index>(points.size()) != n)
    throw std::invalid_argument("hyperplane_from_points: need exactly n points of dimension n");
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("hyperplane_from_points: dimension mismatch");
  Eigen::MatrixXd diffs(n - 1, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) diffs.row(i) = (points[static_cast<size_t>(i)] - points.back()).transpose();
  auto ns = nullspace_basis(diffs, tol);
  if (ns.size() != 1) return std::nullopt;  // degenerate subset
  const Eigen::VectorXd& normal = ns.front();
  return Hyperplane(normal, -normal.dot(points.back()), tol);
}

Eigen::VectorXd reflect_through_root(const Eigen::Ref<const Eigen::VectorXd>& root,
                                     const Eigen::Ref<const Eigen::VectorXd>& point,
                                     const Tolerance& tol) {
  if (root.size() != point.size())
    throw std::invalid_argument("reflect_through_root: dimension mismatch");
  const double nn = root.squaredNorm();
  if (std::sqrt(nn) <= tol.eps) throw std::domain_error("reflect_through_root: zero root");
  return point - (2.0 * root.dot(point) / nn) * root;
}

}  // namespace polysect
