#include "polysect/schlafli.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "doctest.h"

using namespace polysect;

namespace {

constexpr double kPi = std::numbers::pi;

double degrees(double rad) { return rad * 180.0 / kPi; }

std::set<std::string> symbols_of_class(const RegularEnumeration& e, GeometryClass cls) {
  std::set<std::string> out;
  for (const auto& [sym, c] : e.symbols)
    if (c == cls) out.insert(sym.str());
  return out;
}

}  // namespace

TEST_CASE("polyhedron_counts closed forms") {
  const auto cube = polyhedron_counts(4, 3);
  CHECK(cube.geometry == GeometryClass::Elliptic);
  CHECK(cube.counts == std::vector<long>{8, 12, 6});

  CHECK(polyhedron_counts(4, 4).geometry == GeometryClass::Euclidean);
  CHECK_FALSE(polyhedron_counts(4, 4).finite);
  CHECK(polyhedron_counts(5, 4).geometry == GeometryClass::Hyperbolic);
  CHECK_THROWS_AS(polyhedron_counts(2, 3), std::domain_error);
}

TEST_CASE("platonic counts satisfy Euler and the incidence balance") {
  const std::vector<std::pair<int, int>> platonic = {{3, 3}, {4, 3}, {3, 4}, {5, 3}, {3, 5}};
  for (auto [n, p] : platonic) {
    const auto c = polyhedron_counts(n, p);
    REQUIRE(c.finite);
    CHECK(c.counts[0] - c.counts[1] + c.counts[2] == 2);
    CHECK(n * c.counts[2] == 2 * c.counts[1]);
    CHECK(2 * c.counts[1] == p * c.counts[0]);
    // N_pq N_q = N_qp N_p over the incidence table.
    const auto t = incidence_table(n, p);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(t(a, b) * t(b, b) == t(b, a) * t(a, a));
  }
}

TEST_CASE("dihedral angle table") {
  CHECK(degrees(dihedral_angle(3, 3)) == doctest::Approx(70.5).epsilon(0.002));
  CHECK(degrees(dihedral_angle(3, 4)) == doctest::Approx(109.5).epsilon(0.002));
  CHECK(degrees(dihedral_angle(4, 3)) == doctest::Approx(90.0).epsilon(0.002));
  CHECK(degrees(dihedral_angle(3, 5)) == doctest::Approx(138.2).epsilon(0.002));
  CHECK(degrees(dihedral_angle(5, 3)) == doctest::Approx(116.6).epsilon(0.002));
  CHECK_THROWS_AS(dihedral_angle(4, 4), std::domain_error);
  CHECK_THROWS_AS(dihedral_angle(6, 3), std::domain_error);
}

TEST_CASE("angle_profile classifies the named symbols") {
  CHECK(angle_profile(SchlafliSymbol({4, 3, 4})).geometry == GeometryClass::Euclidean);
  CHECK(angle_profile(SchlafliSymbol({4, 3, 3, 4})).geometry == GeometryClass::Euclidean);
  CHECK(angle_profile(SchlafliSymbol({5, 3, 3, 5})).geometry == GeometryClass::Hyperbolic);
  CHECK(angle_profile(SchlafliSymbol({3, 3, 4})).geometry == GeometryClass::Elliptic);
}

TEST_CASE("angle_profile pins theta_{n-1} and the open range") {
  for (const auto& entries :
       std::vector<std::vector<int>>{{4, 3, 4}, {3, 3, 5}, {4, 3, 3, 4}, {3, 4, 3, 3}}) {
    const SchlafliSymbol s(entries);
    const auto profile = angle_profile(s);
    REQUIRE(profile.thetas.size() == entries.size() - 1);
    CHECK(profile.thetas.back() == doctest::Approx(kPi / entries.back()));
    for (double t : profile.thetas) {
      CHECK(t > 0.0);
      CHECK(t < kPi / 2.0 + 1e-12);
    }
  }
}

TEST_CASE("angle_profile rejects non-elliptic facets") {
  CHECK_THROWS_AS(angle_profile(SchlafliSymbol({6, 3, 3})), std::domain_error);
  CHECK_THROWS_AS(angle_profile(SchlafliSymbol({3, 3, 6, 3})), std::domain_error);
}

TEST_CASE("rank-5 candidates agree with the quadratic criterion") {
  // cos^2(pi/k2)/cos^2(theta_1) + cos^2(pi/k3)/sin^2(pi/k4) against 1.
  const std::vector<std::vector<int>> candidates = {
      {3, 3, 3, 3}, {3, 3, 3, 4}, {3, 3, 3, 5}, {3, 3, 4, 3}, {3, 4, 3, 3}, {4, 3, 3, 3},
      {4, 3, 3, 4}, {4, 3, 3, 5}, {5, 3, 3, 3}, {5, 3, 3, 4}, {5, 3, 3, 5}};
  for (const auto& entries : candidates) {
    const auto profile = angle_profile(SchlafliSymbol(entries));
    const double c1 = std::cos(kPi / entries[1]) / std::cos(profile.thetas[0]);
    const double c2 = std::cos(kPi / entries[2]) / std::sin(kPi / entries[3]);
    const double lhs = c1 * c1 + c2 * c2;
    if (profile.geometry == GeometryClass::Elliptic) CHECK(lhs > 1.0 + 1e-12);
    if (profile.geometry == GeometryClass::Euclidean) CHECK(lhs == doctest::Approx(1.0));
    if (profile.geometry == GeometryClass::Hyperbolic) CHECK(lhs < 1.0 - 1e-12);
  }
}

TEST_CASE("enumerate_regular dim 2 polygons") {
  const auto e = enumerate_regular(2);
  CHECK(e.truncated_infinite_family);
  CHECK(e.symbols.size() == kPolygonEnumerationMax - 2);
  for (const auto& [sym, cls] : e.symbols) CHECK(cls == GeometryClass::Elliptic);
}

TEST_CASE("enumerate_regular dim 3 reproduces the polyhedron and tiling tables") {
  const auto e = enumerate_regular(3);
  CHECK(symbols_of_class(e, GeometryClass::Elliptic) ==
        std::set<std::string>{"{3,3}", "{3,4}", "{4,3}", "{3,5}", "{5,3}"});
  CHECK(symbols_of_class(e, GeometryClass::Euclidean) ==
        std::set<std::string>{"{3,6}", "{6,3}", "{4,4}"});
}

TEST_CASE("enumerate_regular dim 4") {
  const auto e = enumerate_regular(4);
  CHECK(symbols_of_class(e, GeometryClass::Elliptic) ==
        std::set<std::string>{"{3,3,3}", "{3,3,4}", "{3,4,3}", "{4,3,3}", "{3,3,5}", "{5,3,3}"});
  CHECK(symbols_of_class(e, GeometryClass::Euclidean) == std::set<std::string>{"{4,3,4}"});
}

TEST_CASE("enumerate_regular dim 6 candidates") {
  const auto e = enumerate_regular(6);
  std::set<std::string> all;
  for (const auto& [sym, cls] : e.symbols) all.insert(sym.str());
  CHECK(all == std::set<std::string>{"{3,3,3,3,3}", "{3,3,3,3,4}", "{4,3,3,3,3}", "{4,3,3,3,4}"});
  CHECK(symbols_of_class(e, GeometryClass::Euclidean) == std::set<std::string>{"{4,3,3,3,4}"});
}

TEST_CASE("enumerate_regular stabilizes at three polytopes and one tessellation") {
  for (int dim = 6; dim <= 9; ++dim) {
    const auto e = enumerate_regular(dim);
    CHECK(symbols_of_class(e, GeometryClass::Elliptic).size() == 3);
    CHECK(symbols_of_class(e, GeometryClass::Euclidean).size() == 1);
    CHECK(symbols_of_class(e, GeometryClass::Hyperbolic).empty());
  }
  CHECK_THROWS_AS(enumerate_regular(1), std::domain_error);
  CHECK_THROWS_AS(enumerate_regular(10), std::domain_error);
}

TEST_CASE("duality preserves the class") {
  for (int dim = 3; dim <= 5; ++dim) {
    const auto e = enumerate_regular(dim);
    std::map<std::string, GeometryClass> by_symbol;
    for (const auto& [sym, cls] : e.symbols) by_symbol[sym.str()] = cls;
    for (const auto& [sym, cls] : e.symbols) {
      auto it = by_symbol.find(sym.dual().str());
      REQUIRE(it != by_symbol.end());
      CHECK(it->second == cls);
    }
  }
}

TEST_CASE("dihedral packing around an edge matches the class") {
  const auto e = enumerate_regular(4);
  for (const auto& [sym, cls] : e.symbols) {
    const int p = sym.entries()[0], q = sym.entries()[1], r = sym.entries()[2];
    const double packed = r * dihedral_angle(p, q);
    if (cls == GeometryClass::Elliptic) CHECK(packed < 2 * kPi - 1e-9);
    if (cls == GeometryClass::Euclidean) CHECK(packed == doctest::Approx(2 * kPi).epsilon(1e-9));
    if (cls == GeometryClass::Hyperbolic) CHECK(packed > 2 * kPi + 1e-9);
  }
}

TEST_CASE("quasiregular counts") {
  CHECK(quasiregular_counts(3, 4).counts == std::vector<long>{12, 24, 14});
  CHECK(quasiregular_counts(3, 3).counts == std::vector<long>{6, 12, 8});
  CHECK(quasiregular_counts(3, 5).counts == std::vector<long>{30, 60, 32});
  CHECK(quasiregular_counts(4, 3).counts == std::vector<long>{12, 24, 14});  // symmetric

  const auto trihex = quasiregular_counts(3, 6);
  CHECK(trihex.geometry == GeometryClass::Euclidean);
  CHECK_FALSE(trihex.finite);

  CHECK_THROWS_AS(quasiregular_counts(4, 4), std::domain_error);
  CHECK_THROWS_AS(quasiregular_counts(4, 5), std::domain_error);

  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}}) {
    const auto c = quasiregular_counts(p, q);
    CHECK(c.counts[0] - c.counts[1] + c.counts[2] == 2);
  }
}

TEST_CASE("rotation order from trace") {
  CHECK(rotation_order_from_trace(2) == 1);
  CHECK(rotation_order_from_trace(-2) == 2);
  CHECK(rotation_order_from_trace(1) == 6);
  CHECK(rotation_order_from_trace(-1) == 3);
  CHECK(rotation_order_from_trace(0) == 4);
  CHECK_FALSE(rotation_order_from_trace(3).has_value());
  CHECK_FALSE(rotation_order_from_trace(-5).has_value());
}

TEST_CASE("symbol algebra") {
  const SchlafliSymbol s({4, 3, 3});
  CHECK(s.dual().str() == "{3,3,4}");
  CHECK(s.facet().str() == "{4,3}");
  CHECK(s.vertex_figure().str() == "{3,3}");
  CHECK(SchlafliSymbol({3, 3}).dual() == SchlafliSymbol({3, 3}));
  CHECK(SchlafliSymbol({5, 3}).dual().str() == "{3,5}");
  CHECK_THROWS_AS(SchlafliSymbol({5}).facet(), std::domain_error);
  CHECK_THROWS_AS(SchlafliSymbol({5}).vertex_figure(), std::domain_error);
}

TEST_CASE("symbol parsing") {
  CHECK(SchlafliSymbol::parse("4,3,4").str() == "{4,3,4}");
  CHECK(SchlafliSymbol::parse("{3,5}").str() == "{3,5}");
  CHECK(SchlafliSymbol::parse("434").str() == "{4,3,4}");
  CHECK_THROWS(SchlafliSymbol::parse("2,3"));
  CHECK_THROWS(SchlafliSymbol::parse(""));
}
