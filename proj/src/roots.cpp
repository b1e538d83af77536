#include "polysect/roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace polysect {

namespace {

bool lexicographically_positive(const Eigen::VectorXd& v, double eps) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) <= eps) continue;
    return v[i] > 0;
  }
  return false;
}

bool lexicographically_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double eps) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) <= eps) continue;
    return a[i] < b[i];
  }
  return false;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(Eigen::MatrixXi entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw std::invalid_argument("CoxeterMatrix: matrix must be square and nonempty");
  for (int i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 1) throw std::invalid_argument("CoxeterMatrix: diagonal entries must be 1");
    for (int j = 0; j < entries_.cols(); ++j) {
      if (entries_(i, j) != entries_(j, i))
        throw std::invalid_argument("CoxeterMatrix: matrix must be symmetric");
      if (i != j && entries_(i, j) != kInfinite && entries_(i, j) < 2)
        throw std::invalid_argument("CoxeterMatrix: off-diagonal orders must be >= 2 or infinite");
    }
  }
}

bool CoxeterMatrix::has_infinite_entry() const {
  for (int i = 0; i < entries_.rows(); ++i)
    for (int j = i + 1; j < entries_.cols(); ++j)
      if (entries_(i, j) == kInfinite) return true;
  return false;
}

CoxeterMatrix coxeter_from_schlafli(const SchlafliSymbol& s) {
  const int n = s.rank();
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(n, n, 2);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  for (size_t k = 0; k < s.entries().size(); ++k) {
    const int i = static_cast<int>(k);
    m(i, i + 1) = s.entries()[k];
    m(i + 1, i) = s.entries()[k];
  }
  return CoxeterMatrix(m);
}

CoxeterMatrix bn_coxeter_matrix(int n) {
  if (n < 2) throw std::domain_error("bn_coxeter_matrix: rank must be >= 2");
  std::vector<int> entries(static_cast<size_t>(n) - 1, 3);
  entries.back() = 4;
  return coxeter_from_schlafli(SchlafliSymbol(entries));
}

Eigen::MatrixXd gram_form(const CoxeterMatrix& m) {
  const int n = m.rank();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = m.order(i, j) == CoxeterMatrix::kInfinite
                    ? -1.0
                    : -std::cos(std::numbers::pi / m.order(i, j));
  return b;
}

Eigen::VectorXd apply_simple_reflection(const Eigen::MatrixXd& b, int i, Eigen::VectorXd v) {
  v[i] -= 2.0 * b.row(i).dot(v);
  return v;
}

std::optional<RootSystem> orbit_roots(const CoxeterMatrix& m, int cap, const Tolerance& tol) {
  const int n = m.rank();
  if (cap < 2 * n) throw std::invalid_argument("orbit_roots: cap must be at least 2 * rank");
  if (m.has_infinite_entry()) return std::nullopt;  // sigma_s sigma_s' of infinite order

  const Eigen::MatrixXd b = gram_form(m);
  std::vector<Eigen::VectorXd> roots;
  std::deque<Eigen::VectorXd> frontier;
  auto known = [&](const Eigen::VectorXd& v) {
    for (const auto& r : roots)
      if ((r - v).lpNorm<Eigen::Infinity>() <= 1e-8) return true;
    return false;
  };
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd alpha = Eigen::VectorXd::Unit(n, i);
    roots.push_back(alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    Eigen::VectorXd v = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd w = apply_simple_reflection(b, i, v);
      if (known(w)) continue;
      roots.push_back(w);
      frontier.push_back(w);
      if (static_cast<int>(roots.size()) > cap) return std::nullopt;
    }
  }
  std::sort(roots.begin(), roots.end(),
            [&](const auto& a, const auto& c) { return lexicographically_less(a, c, tol.eps); });
  RootSystem out;
  out.dim = n;
  out.roots = std::move(roots);
  for (int i = 0; i < n; ++i) out.simple.push_back(Eigen::VectorXd::Unit(n, i));
  for (size_t k = 0; k < out.roots.size(); ++k)
    if (lexicographically_positive(out.roots[k], tol.eps)) out.positive.push_back(static_cast<int>(k));
  return out;
}

RootSystem bn_root_system(int n) {
  if (n < 2) throw std::domain_error("bn_root_system: rank must be >= 2");
  RootSystem out;
  out.dim = n;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) out.roots.push_back(s * Eigen::VectorXd::Unit(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          out.roots.push_back(si * Eigen::VectorXd::Unit(n, i) + sj * Eigen::VectorXd::Unit(n, j));
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& c) { return lexicographically_less(a, c, 1e-12); });
  for (int i = 0; i + 1 < n; ++i)
    out.simple.push_back(Eigen::VectorXd::Unit(n, i) - Eigen::VectorXd::Unit(n, i + 1));
  out.simple.push_back(Eigen::VectorXd::Unit(n, n - 1));
  for (size_t k = 0; k < out.roots.size(); ++k)
    if (lexicographically_positive(out.roots[k], 1e-12)) out.positive.push_back(static_cast<int>(k));
  return out;
}

CrystallographicCheck is_crystallographic(const std::vector<Eigen::VectorXd>& roots,
                                          const Tolerance& tol) {
  CrystallographicCheck out;
  for (size_t a = 0; a < roots.size(); ++a) {
    for (size_t b = 0; b < roots.size(); ++b) {
      if (a == b) continue;
      const double denom = roots[b].squaredNorm();
      if (denom <= tol.eps) throw std::domain_error("is_crystallographic: zero root");
      const double q = 2.0 * roots[a].dot(roots[b]) / denom;
      if (std::abs(q - std::round(q)) > tol.radius(q)) {
        out.crystallographic = false;
        out.violating_a = static_cast<int>(a);
        out.violating_b = static_cast<int>(b);
        out.quotient = q;
        return out;
      }
    }
  }
  return out;
}

CrystallographicCheck is_crystallographic(const RootSystem& rs, const Tolerance& tol) {
  return is_crystallographic(rs.roots, tol);
}

std::vector<Eigen::VectorXd> coroots(const RootSystem& rs, const Tolerance& tol) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(rs.roots.size());
  for (const auto& r : rs.roots) {
    const double nn = r.squaredNorm();
    if (nn <= tol.eps) throw std::domain_error("coroots: zero root");
    out.push_back(2.0 * r / nn);
  }
  return out;
}

}  // namespace polysect
