#include "polysect/schlafli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polysect {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-9;

}  // namespace

std::string to_string(GeometryClass c) {
  switch (c) {
    case GeometryClass::Elliptic: return "elliptic";
    case GeometryClass::Euclidean: return "euclidean";
    case GeometryClass::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

SchlafliSymbol::SchlafliSymbol(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("SchlafliSymbol: entry list must be nonempty");
  for (int k : entries_)
    if (k < 3) throw std::invalid_argument("SchlafliSymbol: every entry must be >= 3");
}

SchlafliSymbol SchlafliSymbol::parse(const std::string& text) {
  std::vector<int> entries;
  std::string body;
  for (char c : text)
    if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  if (body.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos < body.size()) {
      size_t next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      entries.push_back(std::stoi(body.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("SchlafliSymbol: cannot parse '" + text + "'");
      entries.push_back(c - '0');
    }
  }
  return SchlafliSymbol(entries);
}

SchlafliSymbol SchlafliSymbol::dual() const {
  std::vector<int> rev(entries_.rbegin(), entries_.rend());
  return SchlafliSymbol(rev);
}

SchlafliSymbol SchlafliSymbol::facet() const {
  if (entries_.size() < 2)
    throw std::domain_error("SchlafliSymbol::facet: rank too low, facet of a polygon is an edge");
  return SchlafliSymbol(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

SchlafliSymbol SchlafliSymbol::vertex_figure() const {
  if (entries_.size() < 2)
    throw std::domain_error("SchlafliSymbol::vertex_figure: rank too low");
  return SchlafliSymbol(std::vector<int>(entries_.begin() + 1, entries_.end()));
}

std::string SchlafliSymbol::str() const {
  std::string out = "{";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + "}";
}

ConfigurationalNumbers polyhedron_counts(int n, int p) {
  if (n < 3 || p < 3) throw std::domain_error("polyhedron_counts: n and p must be >= 3");
  const int d = 2 * (n + p) - n * p;
  ConfigurationalNumbers out;
  if (d > 0) {
    out.geometry = GeometryClass::Elliptic;
    out.finite = true;
    out.counts = {4L * n / d, 2L * n * p / d, 4L * p / d};
  } else {
    out.geometry = d == 0 ? GeometryClass::Euclidean : GeometryClass::Hyperbolic;
    out.finite = false;
  }
  return out;
}

Eigen::Matrix<long, 3, 3> incidence_table(int n, int p) {
  auto c = polyhedron_counts(n, p);
  if (!c.finite) throw std::domain_error("incidence_table: {n,p} must be elliptic");
  Eigen::Matrix<long, 3, 3> t;
  // N_01 = N_21 = 2, N_02 = N_12 = n, N_10 = N_20 = p; diagonal N_r.
  t << c.counts[0], 2, n,
       p, c.counts[1], n,
       p, 2, c.counts[2];
  return t;
}

double dihedral_angle(int p, int q) {
  auto c = polyhedron_counts(p, q);
  const double arg = std::cos(kPi / q) / std::sin(kPi / p);
  if (arg >= 1.0 - kAngleEps || c.geometry != GeometryClass::Elliptic)
    throw std::domain_error("dihedral_angle: {p,q} is not elliptic");
  return 2.0 * std::asin(arg);
}

GeometryClass classify(const SchlafliSymbol& s) {
  if (s.entries().size() == 1) return GeometryClass::Elliptic;
  return angle_profile(s).geometry;
}

AngleProfile angle_profile(const SchlafliSymbol& s) {
  const auto& k = s.entries();
  const int m = static_cast<int>(k.size());
  if (m < 2) throw std::domain_error("angle_profile: rank must be >= 3");
  if (m > 2) {
    if (classify(s.facet()) != GeometryClass::Elliptic)
      throw std::domain_error("angle_profile: facet symbol " + s.facet().str() + " is not elliptic");
    if (classify(s.vertex_figure()) != GeometryClass::Elliptic)
      throw std::domain_error("angle_profile: vertex figure symbol " + s.vertex_figure().str() +
                              " is not elliptic");
  }
  std::vector<double> thetas(static_cast<size_t>(m) - 1);
  thetas.back() = kPi / k.back();
  for (int r = m - 1; r >= 2; --r) {
    const double c = std::cos(kPi / k[static_cast<size_t>(r) - 1]) / std::sin(thetas[static_cast<size_t>(r) - 1]);
    if (c > 1.0 + kAngleEps || c < -1.0 - kAngleEps)
      throw std::domain_error("angle_profile: arccos argument outside [-1,1]");
    thetas[static_cast<size_t>(r) - 2] = std::acos(std::clamp(c, -1.0, 1.0));
  }
  AngleProfile out;
  out.thetas = std::move(thetas);
  const double slack = out.thetas.front() + kPi / k.front() - kPi / 2.0;
  out.geometry = std::abs(slack) <= kAngleEps ? GeometryClass::Euclidean
                 : slack > 0                  ? GeometryClass::Elliptic
                                              : GeometryClass::Hyperbolic;
  return out;
}

ConfigurationalNumbers quasiregular_counts(int p, int q) {
  int a = std::min(p, q), b = std::max(p, q);
  if (a == 3 && b == 6) {
    ConfigurationalNumbers out;
    out.geometry = GeometryClass::Euclidean;
    out.finite = false;
    return out;
  }
  const bool elliptic_pair = a == 3 && (b == 3 || b == 4 || b == 5);
  if (!elliptic_pair)
    throw std::domain_error("quasiregular_counts: {" + std::to_string(p) + "," + std::to_string(q) +
                            "} admits no quasi-regular intersection");
  auto base = polyhedron_counts(p, q);
  ConfigurationalNumbers out;
  out.geometry = GeometryClass::Elliptic;
  out.finite = true;
  out.counts = {base.counts[1], 2 * base.counts[1], base.counts[0] + base.counts[2]};
  return out;
}

std::optional<int> rotation_order_from_trace(int t) {
  switch (t) {
    case 2: return 1;
    case -2: return 2;
    case 1: return 6;
    case -1: return 3;
    case 0: return 4;
    default: return std::nullopt;
  }
}

RegularEnumeration enumerate_regular(int dim) {
  if (dim < 2 || dim > 9) throw std::domain_error("enumerate_regular: dim must be in [2,9]");
  RegularEnumeration out;
  if (dim == 2) {
    for (int k = 3; k <= kPolygonEnumerationMax; ++k)
      out.symbols.emplace_back(SchlafliSymbol({k}), GeometryClass::Elliptic);
    out.truncated_infinite_family = true;
    return out;
  }
  const RegularEnumeration prev = enumerate_regular(dim - 1);
  std::vector<SchlafliSymbol> elliptic;
  for (const auto& [sym, cls] : prev.symbols)
    if (cls == GeometryClass::Elliptic) elliptic.push_back(sym);
  // Glue facet f and vertex figure v overlapping on all but their outer entry.
  for (const auto& f : elliptic) {
    for (const auto& v : elliptic) {
      const auto& fe = f.entries();
      const auto& ve = v.entries();
      if (!std::equal(fe.begin() + 1, fe.end(), ve.begin(), ve.end() - 1)) continue;
      std::vector<int> glued(fe);
      glued.push_back(ve.back());
      SchlafliSymbol candidate(glued);
      out.symbols.emplace_back(candidate, angle_profile(candidate).geometry);
    }
  }
  std::sort(out.symbols.begin(), out.symbols.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace polysect
