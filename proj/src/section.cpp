#include "polysect/section.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace polysect {

namespace {

constexpr double kPi = std::numbers::pi;

double system_scale(const HalfspacePolytope& hp) {
  double s = 1.0;
  for (const auto& h : hp.halfspaces) s = std::max(s, std::abs(h.offset) / h.normal.norm());
  return s;
}

// Recession cone {d : n_i . d <= 0} must be trivial for a bounded system.
// Candidate extreme rays lie on intersections of active constraint planes.
bool recession_cone_trivial(const std::vector<Hyperplane>& halfspaces, int dim, const Tolerance& tol) {
  const int m = static_cast<int>(halfspaces.size());
  Eigen::MatrixXd normals(m, dim);
  for (int i = 0; i < m; ++i) normals.row(i) = halfspaces[static_cast<size_t>(i)].unit().normal.transpose();
  if (numeric_rank(normals, tol) < dim) return false;

  auto feasible_ray = [&](Eigen::VectorXd d) {
    const double len = d.norm();
    if (len <= tol.eps) return false;
    d /= len;
    for (int i = 0; i < m; ++i)
      if (normals.row(i).dot(d) > tol.eps) return false;
    return true;
  };

  if (dim == 2) {
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd d(2);
      d << -normals(i, 1), normals(i, 0);
      if (feasible_ray(d) || feasible_ray(-d)) return false;
    }
    return true;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Eigen::Vector3d a = normals.row(i).head<3>();
      const Eigen::Vector3d b = normals.row(j).head<3>();
      const Eigen::Vector3d d = a.cross(b);
      if (feasible_ray(d) || feasible_ray(-d)) return false;
    }
  return true;
}

// Candidate vertices from k-subsets of hyperplanes, kept when feasible,
// merged with a tolerance and sorted lexicographically.
std::vector<Eigen::VectorXd> feasible_vertices(const HalfspacePolytope& hp, const Tolerance& tol) {
  const int dim = hp.dim;
  const int m = hp.count();
  const double scale = system_scale(hp);
  const double feas = tol.radius(scale);
  const double merge = 100.0 * tol.radius(scale);
  std::vector<Eigen::VectorXd> verts;
  std::vector<int> idx(static_cast<size_t>(dim));
  auto consider = [&](const std::vector<int>& planes) {
    Eigen::MatrixXd a(dim, dim);
    Eigen::VectorXd rhs(dim);
    for (int r = 0; r < dim; ++r) {
      const Hyperplane u = hp.halfspaces[static_cast<size_t>(planes[static_cast<size_t>(r)])].unit();
      a.row(r) = u.normal.transpose();
      rhs[r] = -u.offset;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    if (!lu.isInvertible()) return;
    Eigen::VectorXd x = lu.solve(rhs);
    if (!x.allFinite()) return;
    for (const auto& h : hp.halfspaces)
      if (signed_distance(h, x) > feas) return;
    for (const auto& v : verts)
      if ((v - x).lpNorm<Eigen::Infinity>() <= merge) return;
    verts.push_back(std::move(x));
  };
  for (int i = 0; i < dim; ++i) idx[static_cast<size_t>(i)] = i;
  if (m < dim) return verts;
  while (true) {
    consider(idx);
    int pos = dim - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - dim + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < dim; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(verts.begin(), verts.end(), [&](const auto& a, const auto& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) <= merge) continue;
      return a[i] < b[i];
    }
    return false;
  });
  return verts;
}

int affine_rank(const std::vector<Eigen::VectorXd>& pts, const Tolerance& tol) {
  if (pts.size() < 2) return 0;
  Eigen::MatrixXd diffs(static_cast<Eigen::Index>(pts.size()) - 1, pts.front().size());
  for (size_t i = 1; i < pts.size(); ++i) diffs.row(static_cast<Eigen::Index>(i) - 1) = (pts[i] - pts[0]).transpose();
  return numeric_rank(diffs, tol);
}

template <typename VecN>
bool set_equal(const std::vector<VecN>& a, const std::vector<VecN>& b, double radius) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if ((x - b[j]).template lpNorm<Eigen::Infinity>() <= radius) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

template <typename VecN>
bool distance_multisets_match(const std::vector<VecN>& a, const std::vector<VecN>& b, double tol) {
  if (a.size() != b.size()) return false;
  auto distances = [](const std::vector<VecN>& pts) {
    std::vector<double> d;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) d.push_back((pts[i] - pts[j]).norm());
    std::sort(d.begin(), d.end());
    if (!d.empty() && d.back() > 0)
      for (double& x : d) x /= d.back();
    return d;
  };
  const auto da = distances(a), db = distances(b);
  for (size_t i = 0; i < da.size(); ++i)
    if (std::abs(da[i] - db[i]) > tol) return false;
  return true;
}

std::vector<Eigen::VectorXd> frame_root_images(const SectionFrame& f, const Tolerance& tol) {
  std::vector<Eigen::VectorXd> images;
  for (const auto& r : f.roots) {
    Eigen::VectorXd w = f.basis.transpose() * r;
    const double len = w.norm();
    if (len <= tol.eps)
      throw std::domain_error("reflection_invariance: root is orthogonal to the section flat");
    images.push_back(w / len);
  }
  return images;
}

}  // namespace

SectionFrame build_section_frame(std::vector<Eigen::VectorXd> roots, Eigen::VectorXd p0,
                                 const Tolerance& tol) {
  if (roots.size() != 2 && roots.size() != 3)
    throw std::invalid_argument("build_section_frame: need 2 or 3 spanning vectors");
  const Eigen::Index n = p0.size();
  for (const auto& r : roots)
    if (r.size() != n) throw std::invalid_argument("build_section_frame: dimension mismatch");
  if (static_cast<Eigen::Index>(roots.size()) > n)
    throw std::invalid_argument("build_section_frame: flat dimension exceeds ambient dimension");
  SectionFrame f;
  try {
    f.basis = gram_schmidt(roots, tol);
  } catch (const std::domain_error&) {
    throw std::domain_error("build_section_frame: spanning vectors are linearly dependent");
  }
  f.origin = std::move(p0);
  const int k = static_cast<int>(roots.size());
  f.root_angles = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const double c = roots[static_cast<size_t>(i)].dot(roots[static_cast<size_t>(j)]) /
                       (roots[static_cast<size_t>(i)].norm() * roots[static_cast<size_t>(j)].norm());
      f.root_angles(i, j) = std::acos(std::clamp(c, -1.0, 1.0));
    }
  f.roots = std::move(roots);
  return f;
}

SectionFrame with_origin(SectionFrame frame, Eigen::VectorXd p0) {
  if (p0.size() != frame.basis.rows())
    throw std::invalid_argument("with_origin: dimension mismatch");
  frame.origin = std::move(p0);
  return frame;
}

Eigen::VectorXd section_point_to_ambient(const SectionFrame& f,
                                         const Eigen::Ref<const Eigen::VectorXd>& y) {
  return f.origin + f.basis * y;
}

std::optional<HalfspacePolytope> restrict_halfspaces(const HalfspacePolytope& hp,
                                                     const SectionFrame& f, const Tolerance& tol) {
  if (f.ambient_dim() != hp.dim)
    throw std::invalid_argument("restrict_halfspaces: frame and polytope dimensions differ");
  HalfspacePolytope out;
  out.dim = f.flat_dim();
  const double scale = system_scale(hp) + f.origin.lpNorm<Eigen::Infinity>();
  for (const auto& h : hp.halfspaces) {
    const Hyperplane u = h.unit();
    Eigen::VectorXd n = f.basis.transpose() * u.normal;
    const double c = u.offset + u.normal.dot(f.origin);
    if (n.norm() <= tol.eps) {
      if (c > tol.radius(scale)) return std::nullopt;  // flat misses the polytope
      continue;                                        // always satisfied on the flat
    }
    out.halfspaces.emplace_back(std::move(n), c, tol);
    out.incident.emplace_back();
  }
  return out;
}

std::vector<std::pair<int, int>> mesh_edges(const Mesh& m) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& face : m.faces)
    for (size_t i = 0; i < face.size(); ++i) {
      int a = face[i], b = face[(i + 1) % face.size()];
      count[{std::min(a, b), std::max(a, b)}]++;
    }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [e, c] : count) edges.push_back(e);
  return edges;
}

bool mesh_closed(const Mesh& m) {
  if (m.faces.empty()) return false;
  std::map<std::pair<int, int>, int> count;
  for (const auto& face : m.faces) {
    if (face.size() < 3) return false;
    for (size_t i = 0; i < face.size(); ++i) {
      int a = face[i], b = face[(i + 1) % face.size()];
      count[{std::min(a, b), std::max(a, b)}]++;
    }
  }
  for (const auto& [e, c] : count)
    if (c != 2) return false;
  return true;
}

double mesh_volume(const Mesh& m) {
  double vol = 0.0;
  for (const auto& face : m.faces)
    for (size_t i = 1; i + 1 < face.size(); ++i)
      vol += m.vertices[static_cast<size_t>(face[0])].dot(
          m.vertices[static_cast<size_t>(face[i])].cross(m.vertices[static_cast<size_t>(face[i + 1])]));
  return vol / 6.0;
}

double polygon_area(const Polygon2D& p) {
  double a = 0.0;
  const auto& v = p.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& s = v[i];
    const auto& t = v[(i + 1) % v.size()];
    a += s.x() * t.y() - t.x() * s.y();
  }
  return a / 2.0;
}

Mesh vertex_enum_3d(const HalfspacePolytope& hp, const Tolerance& tol) {
  if (hp.dim != 3) throw std::invalid_argument("vertex_enum_3d: system must be 3-dimensional");
  if (!recession_cone_trivial(hp.halfspaces, 3, tol))
    throw std::domain_error("vertex_enum_3d: unbounded half-space system");
  Mesh mesh;
  auto verts = feasible_vertices(hp, tol);
  if (verts.empty()) return mesh;
  if (verts.size() <= 3 || affine_rank(verts, tol) < 3) {
    mesh.grazing = true;
    return mesh;
  }
  for (const auto& v : verts) mesh.vertices.push_back(v.head<3>());

  const double scale = system_scale(hp);
  const double on_face = 100.0 * tol.radius(scale);
  for (const auto& h : hp.halfspaces) {
    const Hyperplane u = h.unit();
    std::vector<int> inc;
    for (size_t i = 0; i < verts.size(); ++i)
      if (std::abs(signed_distance(u, verts[i])) <= on_face) inc.push_back(static_cast<int>(i));
    if (inc.size() < 3) continue;
    Eigen::Vector3d n = u.normal.head<3>();
    Eigen::Vector3d fc = Eigen::Vector3d::Zero();
    for (int i : inc) fc += mesh.vertices[static_cast<size_t>(i)];
    fc /= static_cast<double>(inc.size());
    int axis = 0;
    for (int k = 1; k < 3; ++k)
      if (std::abs(n[k]) < std::abs(n[axis])) axis = k;
    Eigen::Vector3d b1 = Eigen::Vector3d::Unit(axis) - n[axis] * n;
    b1.normalize();
    const Eigen::Vector3d b2 = n.cross(b1);
    std::sort(inc.begin(), inc.end(), [&](int a, int b) {
      const Eigen::Vector3d da = mesh.vertices[static_cast<size_t>(a)] - fc;
      const Eigen::Vector3d db = mesh.vertices[static_cast<size_t>(b)] - fc;
      return std::atan2(da.dot(b2), da.dot(b1)) < std::atan2(db.dot(b2), db.dot(b1));
    });
    // Start each cycle at its smallest vertex index.
    const auto begin = std::min_element(inc.begin(), inc.end());
    std::rotate(inc.begin(), begin, inc.end());
    mesh.faces.push_back(inc);
  }
  if (!mesh_closed(mesh)) throw std::domain_error("vertex_enum_3d: section mesh failed to close");
  return mesh;
}

Polygon2D vertex_enum_2d(const HalfspacePolytope& hp, const Tolerance& tol) {
  if (hp.dim != 2) throw std::invalid_argument("vertex_enum_2d: system must be 2-dimensional");
  if (!recession_cone_trivial(hp.halfspaces, 2, tol))
    throw std::domain_error("vertex_enum_2d: unbounded half-space system");
  Polygon2D poly;
  auto verts = feasible_vertices(hp, tol);
  if (verts.empty()) return poly;
  if (verts.size() <= 2 || affine_rank(verts, tol) < 2) {
    poly.grazing = true;
    return poly;
  }
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& v : verts) c += v.head<2>();
  c /= static_cast<double>(verts.size());
  std::vector<Eigen::Vector2d> pts;
  for (const auto& v : verts) pts.push_back(v.head<2>());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.y() - c.y(), a.x() - c.x()) < std::atan2(b.y() - c.y(), b.x() - c.x());
  });
  poly.vertices = std::move(pts);
  return poly;
}

std::vector<Mesh> sweep_sections(const HalfspacePolytope& hp,
                                 const Eigen::Ref<const Eigen::VectorXd>& direction,
                                 const std::vector<double>& offsets, const SectionFrame& frame,
                                 const Tolerance& tol) {
  if (frame.flat_dim() != 3) throw std::invalid_argument("sweep_sections: need a 3-flat frame");
  std::vector<Mesh> out;
  for (double t : offsets) {
    SectionFrame f = with_origin(frame, t * direction);
    auto restricted = restrict_halfspaces(hp, f, tol);
    out.push_back(restricted ? vertex_enum_3d(*restricted, tol) : Mesh{});
  }
  return out;
}

std::vector<bool> reflection_invariance(const Mesh& m, const SectionFrame& f, const Tolerance& tol) {
  std::vector<bool> out;
  const double radius = 1e-6;
  for (const auto& w : frame_root_images(f, tol)) {
    const Eigen::Vector3d axis = w.head<3>();
    std::vector<Eigen::Vector3d> reflected;
    for (const auto& v : m.vertices) reflected.push_back(v - 2.0 * v.dot(axis) * axis);
    out.push_back(set_equal(reflected, m.vertices, radius));
  }
  return out;
}

std::vector<bool> reflection_invariance(const Polygon2D& p, const SectionFrame& f,
                                        const Tolerance& tol) {
  std::vector<bool> out;
  const double radius = 1e-6;
  for (const auto& w : frame_root_images(f, tol)) {
    const Eigen::Vector2d axis = w.head<2>();
    std::vector<Eigen::Vector2d> reflected;
    for (const auto& v : p.vertices) reflected.push_back(v - 2.0 * v.dot(axis) * axis);
    out.push_back(set_equal(reflected, p.vertices, radius));
  }
  return out;
}

int symmetry_order_2d(const Polygon2D& poly, const Tolerance& tol) {
  const int n = static_cast<int>(poly.vertices.size());
  if (n < 3) throw std::invalid_argument("symmetry_order_2d: polygon needs at least 3 vertices");
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& v : poly.vertices) c += v;
  c /= static_cast<double>(n);
  std::vector<Eigen::Vector2d> pts;
  double scale = 1.0;
  for (const auto& v : poly.vertices) {
    pts.push_back(v - c);
    scale = std::max(scale, (v - c).norm());
  }
  const double radius = 1e4 * tol.radius(scale);

  int order = 0;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    const Eigen::Rotation2D<double> rot(a);
    std::vector<Eigen::Vector2d> mapped;
    for (const auto& v : pts) mapped.push_back(rot * v);
    if (set_equal(mapped, pts, radius)) ++order;
  }
  std::vector<double> axes;
  auto add_axis = [&](double theta) {
    theta = std::fmod(theta, kPi);
    if (theta < 0) theta += kPi;
    for (double t : axes)
      if (std::abs(t - theta) < 1e-9 || std::abs(std::abs(t - theta) - kPi) < 1e-9) return;
    axes.push_back(theta);
  };
  for (int i = 0; i < n; ++i) {
    add_axis(std::atan2(pts[static_cast<size_t>(i)].y(), pts[static_cast<size_t>(i)].x()));
    const Eigen::Vector2d mid = 0.5 * (pts[static_cast<size_t>(i)] + pts[static_cast<size_t>((i + 1) % n)]);
    add_axis(std::atan2(mid.y(), mid.x()));
  }
  for (double theta : axes) {
    const Eigen::Vector2d axis(std::cos(theta), std::sin(theta));
    std::vector<Eigen::Vector2d> mapped;
    for (const auto& v : pts) {
      const double along = v.dot(axis);
      mapped.push_back(2.0 * along * axis - v);
    }
    if (set_equal(mapped, pts, radius)) ++order;
  }
  return order;
}

bool congruent_up_to_similarity(const Mesh& a, const Mesh& b, double tol) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("congruent_up_to_similarity: geometry must be nonempty");
  return distance_multisets_match(a.vertices, b.vertices, tol);
}

bool congruent_up_to_similarity(const Polygon2D& a, const Polygon2D& b, double tol) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("congruent_up_to_similarity: geometry must be nonempty");
  return distance_multisets_match(a.vertices, b.vertices, tol);
}

}  // namespace polysect
