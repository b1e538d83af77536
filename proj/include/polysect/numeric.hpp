#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace polysect {

/// Scale-aware comparison policy. Two quantities are considered equal when
/// they differ by less than eps * max(1, magnitude of the operands).
struct Tolerance {
  double eps = 1e-9;

  double radius(double scale) const;
  bool near(double a, double b) const;
  bool zero(double x, double scale = 1.0) const;
};

/// Oriented hyperplane {x : normal.x + offset = 0}. The interior side is the
/// closed negative half-space {x : normal.x + offset <= 0}.
struct Hyperplane {
  Eigen::VectorXd normal;
  double offset = 0.0;

  Hyperplane() = default;
  Hyperplane(Eigen::VectorXd n, double c, const Tolerance& tol = {});

  int dim() const { return static_cast<int>(normal.size()); }
  /// Same orientation, normal rescaled to unit length.
  Hyperplane unit() const;
};

/// (a.n + c)/|n|: positive on the positive side, zero on the plane.
double signed_distance(const Hyperplane& h, const Eigen::Ref<const Eigen::VectorXd>& point);

/// Unit normal with the sign fixed so the first nonzero coordinate is
/// positive. A deduplication form; it does not preserve orientation.
Hyperplane canonical_form(const Hyperplane& h, const Tolerance& tol = {});

/// Coordinates of canonical_form rounded to 6 decimals, usable as a map key.
std::vector<long long> canonical_key(const Hyperplane& h, const Tolerance& tol = {});

/// Key that preserves orientation (no sign fix); for sets of outward-oriented
/// half-spaces.
std::vector<long long> oriented_key(const Hyperplane& h);

/// Classical Gram-Schmidt with re-orthogonalization. Returns a matrix whose
/// k-th column is the k-th orthonormalized input; the first column is the
/// first input normalized. Throws std::domain_error on dependent input.
Eigen::MatrixXd gram_schmidt(const std::vector<Eigen::VectorXd>& vectors, const Tolerance& tol = {});

/// Orthonormal basis of the right nullspace of m (empty when trivial).
/// Singular values below eps * max(1, largest) count as zero.
std::vector<Eigen::VectorXd> nullspace_basis(const Eigen::Ref<const Eigen::MatrixXd>& m,
                                             const Tolerance& tol = {});

int numeric_rank(const Eigen::Ref<const Eigen::MatrixXd>& m, const Tolerance& tol = {});

/// Hyperplane through n points of R^n, or nullopt when the points are
/// degenerate (the difference matrix has nullity != 1).
std::optional<Hyperplane> hyperplane_from_points(const std::vector<Eigen::VectorXd>& points,
                                                 const Tolerance& tol = {});

/// point - 2 (point.root)/(root.root) root. Throws on a zero root.
Eigen::VectorXd reflect_through_root(const Eigen::Ref<const Eigen::VectorXd>& root,
                                     const Eigen::Ref<const Eigen::VectorXd>& point,
                                     const Tolerance& tol = {});

}  // namespace polysect
