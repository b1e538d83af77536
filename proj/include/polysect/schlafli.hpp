#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polysect {

enum class GeometryClass { Elliptic, Euclidean, Hyperbolic };

std::string to_string(GeometryClass c);

/// Schlafli symbol {k_1,...,k_{n-1}} of a rank-n polytope or tessellation.
class SchlafliSymbol {
 public:
  explicit SchlafliSymbol(std::vector<int> entries);
  /// Accepts "4,3,4", "{4,3,4}" or compact digits "434".
  static SchlafliSymbol parse(const std::string& text);

  const std::vector<int>& entries() const { return entries_; }
  int rank() const { return static_cast<int>(entries_.size()) + 1; }

  SchlafliSymbol dual() const;
  SchlafliSymbol facet() const;          // drop the last entry
  SchlafliSymbol vertex_figure() const;  // drop the first entry

  std::string str() const;  // "{4,3,4}"

  bool operator==(const SchlafliSymbol& o) const { return entries_ == o.entries_; }
  bool operator<(const SchlafliSymbol& o) const { return entries_ < o.entries_; }

 private:
  std::vector<int> entries_;
};

/// Facet counts N_0..N_{n-1}. finite == false marks an infinite tessellation.
struct ConfigurationalNumbers {
  GeometryClass geometry = GeometryClass::Elliptic;
  bool finite = true;
  std::vector<long> counts;
};

/// Half dihedral angles theta_1..theta_{n-1} plus the resulting class.
struct AngleProfile {
  std::vector<double> thetas;
  GeometryClass geometry = GeometryClass::Elliptic;
};

/// Counts for the polyhedron or tiling {n,p} from the closed forms
/// N_0 = 4n/d, N_1 = 2np/d, N_2 = 4p/d with d = 2(n+p) - np.
ConfigurationalNumbers polyhedron_counts(int n, int p);

/// Incidence table N_pq (diagonal N_r) of the elliptic polyhedron {n,p}.
Eigen::Matrix<long, 3, 3> incidence_table(int n, int p);

/// Full dihedral angle 2*theta_2 of {p,q} in radians, from
/// cos(pi/q) = sin(theta_2) sin(pi/p). Throws for non-elliptic pairs.
double dihedral_angle(int p, int q);

/// Solves cos(pi/k_r) = sin(theta_r) cos(theta_{r-1}) backwards from
/// theta_{n-1} = pi/k_n and classifies by theta_1 + pi/k_1 against pi/2.
AngleProfile angle_profile(const SchlafliSymbol& s);

/// Rank-2 symbols are always elliptic; higher ranks defer to angle_profile.
GeometryClass classify(const SchlafliSymbol& s);

/// Counts of the quasi-regular polyhedron {p over q}; only the dual-pair
/// intersections of the elliptic polyhedra and the trihexagonal case exist.
ConfigurationalNumbers quasiregular_counts(int p, int q);

/// Order of a lattice rotation with integer trace t, or nullopt when |t| > 2.
std::optional<int> rotation_order_from_trace(int t);

struct RegularEnumeration {
  std::vector<std::pair<SchlafliSymbol, GeometryClass>> symbols;
  /// dim == 2 only: the polygons {k} continue past the reported window.
  bool truncated_infinite_family = false;
};

/// All regular rank-dim symbols with their classes, built by gluing elliptic
/// facet and vertex-figure symbols of the previous rank. 2 <= dim <= 9.
RegularEnumeration enumerate_regular(int dim);

inline constexpr int kPolygonEnumerationMax = 12;

}  // namespace polysect
