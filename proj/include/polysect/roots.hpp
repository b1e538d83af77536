#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "polysect/numeric.hpp"
#include "polysect/schlafli.hpp"

namespace polysect {

/// Symmetric matrix of generator orders: m_ii = 1, m_ij >= 2 for i != j,
/// with 0 standing for an infinite order.
class CoxeterMatrix {
 public:
  static constexpr int kInfinite = 0;

  explicit CoxeterMatrix(Eigen::MatrixXi entries);

  int rank() const { return static_cast<int>(entries_.rows()); }
  int order(int i, int j) const { return entries_(i, j); }
  const Eigen::MatrixXi& entries() const { return entries_; }
  bool has_infinite_entry() const;

 private:
  Eigen::MatrixXi entries_;
};

/// Linear Coxeter graph of a Schlafli symbol: m_{i,i+1} = k_i, all other
/// off-diagonal orders 2.
CoxeterMatrix coxeter_from_schlafli(const SchlafliSymbol& s);

/// The chain with superdiagonal 3,...,3,4 (the 4 on the short-root end).
CoxeterMatrix bn_coxeter_matrix(int n);

/// B_ij = -cos(pi/m_ij), with -1 for infinite orders.
Eigen::MatrixXd gram_form(const CoxeterMatrix& m);

/// sigma_i(v) in the alpha-basis: v - 2 (B v)_i e_i.
Eigen::VectorXd apply_simple_reflection(const Eigen::MatrixXd& b, int i, Eigen::VectorXd v);

struct RootSystem {
  int dim = 0;
  std::vector<Eigen::VectorXd> roots;
  std::vector<Eigen::VectorXd> simple;
  std::vector<int> positive;  // indices into roots
};

/// Closure of the simple basis under all simple reflections, in alpha-basis
/// coordinates under the form B. Returns nullopt when the type is infinite
/// (an infinite order entry, or more than cap roots).
std::optional<RootSystem> orbit_roots(const CoxeterMatrix& m, int cap = 1000, const Tolerance& tol = {});

/// The B_n system in standard coordinates: short roots ±e_i, long roots
/// ±e_i±e_j (i<j); simple roots e_i - e_{i+1} and e_n.
RootSystem bn_root_system(int n);

struct CrystallographicCheck {
  bool crystallographic = true;
  int violating_a = -1;
  int violating_b = -1;
  double quotient = 0.0;

  explicit operator bool() const { return crystallographic; }
};

/// Tests 2(a,b)/(b,b) in Z for all ordered pairs (Euclidean inner product);
/// reports a violating pair on failure.
CrystallographicCheck is_crystallographic(const std::vector<Eigen::VectorXd>& roots,
                                          const Tolerance& tol = {});
CrystallographicCheck is_crystallographic(const RootSystem& rs, const Tolerance& tol = {});

/// 2a/(a,a) per root.
std::vector<Eigen::VectorXd> coroots(const RootSystem& rs, const Tolerance& tol = {});

}  // namespace polysect
