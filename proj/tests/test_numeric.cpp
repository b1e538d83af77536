#include "polysect/numeric.hpp"

#include <random>

#include "doctest.h"

using namespace polysect;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd vec(std::initializer_list<double> xs) {
  VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("gram_schmidt keeps an already orthonormal pair") {
  auto q = gram_schmidt({vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK((q.col(0) - vec({1, 0, 0})).norm() == doctest::Approx(0.0));
  CHECK((q.col(1) - vec({0, 1, 0})).norm() == doctest::Approx(0.0));
}

TEST_CASE("gram_schmidt on the long-root triple") {
  auto q = gram_schmidt({vec({-1, -1, 0, 0}), vec({-1, 0, -1, 0}), vec({-1, 0, 0, 0})});
  const double s = 1.0 / std::sqrt(2.0);
  CHECK((q.col(0) - vec({-s, -s, 0, 0})).norm() < 1e-12);
  CHECK((q.transpose() * q - MatrixXd::Identity(3, 3)).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("gram_schmidt rejects dependent input") {
  CHECK_THROWS_AS(gram_schmidt({vec({1, 0}), vec({2, 0})}), std::domain_error);
}

TEST_CASE("gram_schmidt properties on random independent inputs") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 7);  // up to 8
    const int count = 1 + static_cast<int>(rng() % dim);
    std::vector<VectorXd> vs;
    for (int k = 0; k < count; ++k) {
      VectorXd v(dim);
      for (int i = 0; i < dim; ++i) v[i] = coord(rng);
      vs.push_back(v);
    }
    MatrixXd basis(dim, count);
    for (int k = 0; k < count; ++k) basis.col(k) = vs[static_cast<size_t>(k)];
    if (numeric_rank(basis, {}) < count) continue;
    const MatrixXd q = gram_schmidt(vs);
    CHECK((q.transpose() * q - MatrixXd::Identity(count, count)).lpNorm<Eigen::Infinity>() < 1e-8);
    // Column k stays in the span of the first k inputs.
    for (int k = 0; k < count; ++k) {
      MatrixXd head(dim, k + 1);
      for (int i = 0; i <= k; ++i) head.col(i) = vs[static_cast<size_t>(i)];
      Eigen::JacobiSVD<MatrixXd> svd(head, Eigen::ComputeThinU);
      const MatrixXd u = svd.matrixU();
      const VectorXd residual = q.col(k) - u * (u.transpose() * q.col(k));
      CHECK(residual.norm() < 1e-8);
    }
  }
}

TEST_CASE("nullspace_basis on a single row") {
  auto ns = nullspace_basis(vec({1, 0}).transpose());
  REQUIRE(ns.size() == 1);
  CHECK(std::abs(ns[0][1]) == doctest::Approx(1.0));
  CHECK(ns[0][0] == doctest::Approx(0.0));
}

TEST_CASE("nullspace_basis of cube-facet differences") {
  // Hand elimination: (0,0,-2) and (0,-2,0) force y = z = 0.
  MatrixXd m(2, 3);
  m << 0, 0, -2, 0, -2, 0;
  auto ns = nullspace_basis(m);
  REQUIRE(ns.size() == 1);
  CHECK(std::abs(ns[0][0]) == doctest::Approx(1.0));
}

TEST_CASE("nullspace_basis of a rank-1 matrix in R^3") {
  MatrixXd m(2, 3);
  m << 1, 0, 0, 2, 0, 0;
  auto ns = nullspace_basis(m);
  CHECK(ns.size() == 2);
}

TEST_CASE("nullspace residual property") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 6);
    MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = coord(rng);
    for (const auto& v : nullspace_basis(m)) {
      CHECK((m * v).lpNorm<Eigen::Infinity>() < 1e-8 * m.lpNorm<Eigen::Infinity>());
      CHECK(v.norm() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("hyperplane through three cube vertices") {
  auto h = hyperplane_from_points({vec({1, 1, 1}), vec({1, 1, -1}), vec({1, -1, 1})});
  REQUIRE(h.has_value());
  const Hyperplane c = canonical_form(*h);
  CHECK((c.normal - vec({1, 0, 0})).norm() < 1e-12);
  CHECK(c.offset == doctest::Approx(-1.0));
}

TEST_CASE("hyperplane through two points of R^2") {
  auto h = hyperplane_from_points({vec({0, 0}), vec({1, 0})});
  REQUIRE(h.has_value());
  const Hyperplane c = canonical_form(*h);
  CHECK((c.normal - vec({0, 1})).norm() < 1e-12);
  CHECK(c.offset == doctest::Approx(0.0));
}

TEST_CASE("collinear points are degenerate") {
  CHECK_FALSE(hyperplane_from_points({vec({0, 0, 0}), vec({1, 0, 0}), vec({2, 0, 0})}).has_value());
}

TEST_CASE("signed_distance") {
  const Hyperplane h(vec({1, 0, 0}), -1.0);
  CHECK(signed_distance(h, vec({3, 0, 0})) == doctest::Approx(2.0));
  CHECK(signed_distance(h, vec({1, 5, 7})) == doctest::Approx(0.0));
  const Hyperplane scaled(vec({2, 0, 0}), -2.0);
  CHECK(signed_distance(scaled, vec({3, 0, 0})) == doctest::Approx(2.0));
}

TEST_CASE("signed_distance is invariant under positive scaling") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    VectorXd n(4), a(4);
    for (int i = 0; i < 4; ++i) {
      n[i] = coord(rng);
      a[i] = coord(rng);
    }
    if (n.norm() < 0.1) continue;
    const double c = coord(rng);
    const double s = 0.1 + std::abs(coord(rng));
    CHECK(signed_distance(Hyperplane(n, c), a) ==
          doctest::Approx(signed_distance(Hyperplane(s * n, s * c), a)).epsilon(1e-9));
  }
}

TEST_CASE("reflect_through_root examples") {
  CHECK((reflect_through_root(vec({1, 0}), vec({1, 0})) - vec({-1, 0})).norm() < 1e-12);
  CHECK((reflect_through_root(vec({1, -1, 0}), vec({1, 0, 0})) - vec({0, 1, 0})).norm() < 1e-12);
  CHECK((reflect_through_root(vec({1, 0}), vec({0, 1})) - vec({0, 1})).norm() < 1e-12);
  CHECK_THROWS_AS(reflect_through_root(vec({0, 0}), vec({1, 0})), std::domain_error);
}

TEST_CASE("reflect_through_root is an involutive isometry") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    VectorXd alpha(5), x(5), y(5);
    for (int i = 0; i < 5; ++i) {
      alpha[i] = coord(rng);
      x[i] = coord(rng);
      y[i] = coord(rng);
    }
    if (alpha.norm() < 0.1) continue;
    const VectorXd rx = reflect_through_root(alpha, x);
    const VectorXd ry = reflect_through_root(alpha, y);
    CHECK((reflect_through_root(alpha, rx) - x).norm() < 1e-9);
    CHECK(rx.norm() == doctest::Approx(x.norm()).epsilon(1e-9));
    CHECK((rx - ry).norm() == doctest::Approx((x - y).norm()).epsilon(1e-9));
  }
}

TEST_CASE("canonical form fixes scale and sign") {
  const Hyperplane h(vec({0, -2, 0}), 4.0);
  const Hyperplane c = canonical_form(h);
  CHECK((c.normal - vec({0, 1, 0})).norm() < 1e-12);
  CHECK(c.offset == doctest::Approx(-2.0));
  CHECK(canonical_key(h) == canonical_key(Hyperplane(vec({0, 1, 0}), -2.0)));
}
