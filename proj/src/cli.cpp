#include "polysect/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "polysect/exporters.hpp"
#include "polysect/facets.hpp"
#include "polysect/polytopes.hpp"
#include "polysect/roots.hpp"
#include "polysect/schlafli.hpp"
#include "polysect/section.hpp"
#include "polysect/tiling.hpp"

namespace polysect {

namespace {

using nlohmann::ordered_json;

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated number list, got '" + text + "'");
  return out;
}

std::vector<std::vector<double>> parse_root_list(const std::string& text) {
  std::vector<std::vector<double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_number_list(item));
  if (out.empty()) throw std::invalid_argument("expected ';'-separated root coordinates, got '" + text + "'");
  return out;
}

ordered_json vector_json(const Eigen::Ref<const Eigen::VectorXd>& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(chop6(v[i]));
  return a;
}

ordered_json vectors_json(const std::vector<Eigen::VectorXd>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

ordered_json rows_json(const Eigen::MatrixXd& m) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i).transpose()));
  return a;
}

std::vector<Eigen::VectorXd> resolve_roots(const JobSpec& job) {
  std::vector<Eigen::VectorXd> roots;
  if (!job.roots.empty()) {
    for (const auto& r : job.roots) roots.push_back(to_vector(r));
  } else if (!job.root_indices.empty()) {
    const RootSystem bn = bn_root_system(job.dim);
    for (int idx : job.root_indices) {
      if (idx < 0 || idx >= static_cast<int>(bn.roots.size()))
        throw std::domain_error("root index " + std::to_string(idx) + " is outside the B_" +
                                std::to_string(job.dim) + " root list");
      roots.push_back(bn.roots[static_cast<size_t>(idx)]);
    }
  } else {
    throw std::invalid_argument("command '" + job.command + "' requires --roots or --root-indices");
  }
  return roots;
}

Eigen::VectorXd resolve_point(const JobSpec& job) {
  if (job.point.empty()) return Eigen::VectorXd::Zero(job.dim);
  if (static_cast<int>(job.point.size()) != job.dim)
    throw std::invalid_argument("--point must have exactly dim coordinates");
  return to_vector(job.point);
}

ordered_json meta_json(const JobSpec& job, const SectionFrame& frame) {
  ordered_json meta;
  meta["eps"] = job.eps;
  ordered_json basis = ordered_json::array();
  for (Eigen::Index c = 0; c < frame.basis.cols(); ++c) basis.push_back(vector_json(frame.basis.col(c)));
  meta["frame"] = ordered_json{{"basis", basis}, {"point", vector_json(frame.origin)}};
  meta["roots"] = vectors_json(frame.roots);
  return meta;
}

void write_artifact(const JobSpec& job, const std::string& bytes, std::ostream& out) {
  if (job.output.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(job.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + job.output + "'");
  file << bytes;
}

void emit_json(const JobSpec& job, const ordered_json& j, std::ostream& out) {
  write_artifact(job, dump_json(j), out);
}

void require_json_format(const JobSpec& job) {
  if (job.format != "json")
    throw std::invalid_argument("command '" + job.command + "' only supports --format json");
}

void run_classify(const JobSpec& job, std::ostream& out) {
  require_json_format(job);
  const SchlafliSymbol s = SchlafliSymbol::parse(job.symbol);
  ordered_json j;
  j["symbol"] = s.str();
  if (s.rank() == 2) {
    j["class"] = to_string(GeometryClass::Elliptic);
    j["counts"] = ordered_json{{"finite", true},
                               {"values", std::vector<long>{s.entries()[0], s.entries()[0]}}};
  } else {
    const AngleProfile profile = angle_profile(s);
    j["class"] = to_string(profile.geometry);
    j["thetas"] = profile.thetas;
    if (s.rank() == 3) {
      const auto counts = polyhedron_counts(s.entries()[0], s.entries()[1]);
      ordered_json c;
      c["finite"] = counts.finite;
      if (counts.finite) c["values"] = counts.counts;
      j["counts"] = c;
    }
  }
  emit_json(job, j, out);
}

void run_enumerate(const JobSpec& job, std::ostream& out) {
  require_json_format(job);
  const RegularEnumeration e = enumerate_regular(job.dim);
  ordered_json symbols = ordered_json::array();
  for (const auto& [sym, cls] : e.symbols)
    symbols.push_back(ordered_json{{"symbol", sym.str()}, {"class", to_string(cls)}});
  ordered_json j;
  j["dim"] = job.dim;
  j["infinite_family"] = e.truncated_infinite_family;
  j["symbols"] = symbols;
  emit_json(job, j, out);
}

void run_generate(const JobSpec& job, std::ostream& out, bool rectified) {
  require_json_format(job);
  PolytopeVertices p = generate_vertices(job.name, job.dim);
  if (rectified) p = rectify(p, Tolerance{job.eps});
  ordered_json j;
  j["dim"] = p.dim;
  j["label"] = p.label;
  if (p.symbol) j["symbol"] = p.symbol->str();
  j["count"] = p.count();
  j["vertices"] = rows_json(p.vertices);
  emit_json(job, j, out);
}

void run_facets(const JobSpec& job, std::ostream& out) {
  require_json_format(job);
  const PolytopeVertices p = generate_vertices(job.name, job.dim);
  const Tolerance tol{job.eps};
  const HalfspacePolytope hp =
      job.algo == "pivot" ? enumerate_facets_pivot(p, tol) : enumerate_facets_bruteforce(p, tol);
  ordered_json halfspaces = ordered_json::array();
  for (size_t i = 0; i < hp.halfspaces.size(); ++i) {
    ordered_json h;
    h["normal"] = vector_json(hp.halfspaces[i].normal);
    h["offset"] = hp.halfspaces[i].offset;
    h["incident"] = hp.incident[i];
    halfspaces.push_back(h);
  }
  ordered_json j;
  j["dim"] = hp.dim;
  j["label"] = p.label;
  j["algorithm"] = job.algo;
  j["count"] = hp.count();
  j["halfspaces"] = halfspaces;
  emit_json(job, j, out);
}

void run_roots(const JobSpec& job, std::ostream& out) {
  require_json_format(job);
  ordered_json j;
  if (job.roots_mode == "bn") {
    const RootSystem rs = bn_root_system(job.dim);
    int short_count = 0;
    for (const auto& r : rs.roots)
      if (std::abs(r.squaredNorm() - 1.0) < 1e-9) ++short_count;
    j["type"] = "bn";
    j["dim"] = rs.dim;
    j["count"] = static_cast<int>(rs.roots.size());
    j["short_roots"] = short_count;
    j["long_roots"] = static_cast<int>(rs.roots.size()) - short_count;
    j["roots"] = vectors_json(rs.roots);
    j["simple"] = vectors_json(rs.simple);
    j["positive"] = rs.positive;
  } else if (job.roots_mode == "orbit") {
    const SchlafliSymbol s = SchlafliSymbol::parse(job.symbol);
    const CoxeterMatrix m = coxeter_from_schlafli(s);
    const auto rs = orbit_roots(m, job.cap, Tolerance{job.eps});
    j["type"] = "orbit";
    j["symbol"] = s.str();
    j["rank"] = m.rank();
    j["finite"] = rs.has_value();
    if (rs) {
      j["count"] = static_cast<int>(rs->roots.size());
      j["roots"] = vectors_json(rs->roots);
      j["positive"] = rs->positive;
    }
  } else {
    throw std::invalid_argument("roots: mode must be 'bn' or 'orbit'");
  }
  emit_json(job, j, out);
}

void emit_mesh(const JobSpec& job, const Mesh& mesh, const ordered_json& meta, std::ostream& out) {
  if (job.format == "off") {
    write_artifact(job, to_off(mesh), out);
  } else if (job.format == "obj") {
    write_artifact(job, to_obj(mesh), out);
  } else if (job.format == "json") {
    ordered_json j;
    j["dim"] = 3;
    j["vertices"] = mesh_to_json(mesh)["vertices"];
    j["faces"] = mesh_to_json(mesh)["faces"];
    j["meta"] = meta;
    emit_json(job, j, out);
  } else {
    throw std::invalid_argument("3-dimensional sections support --format json|off|obj");
  }
}

void emit_polygon(const JobSpec& job, const Polygon2D& poly, const ordered_json& meta,
                  std::ostream& out) {
  if (job.format == "svg") {
    write_artifact(job, to_svg(poly), out);
  } else if (job.format == "json") {
    ordered_json j;
    j["dim"] = 2;
    j["vertices"] = polygon_to_json(poly)["vertices"];
    j["meta"] = meta;
    emit_json(job, j, out);
  } else {
    throw std::invalid_argument("2-dimensional sections support --format json|svg");
  }
}

void run_section(const JobSpec& job, std::ostream& out) {
  const Tolerance tol{job.eps};
  const PolytopeVertices p = generate_vertices(job.name, job.dim);
  const HalfspacePolytope hp = enumerate_facets_bruteforce(p, tol);
  std::vector<Eigen::VectorXd> roots = resolve_roots(job);
  if (job.two_d && roots.size() == 3) roots.resize(2);
  const SectionFrame frame = build_section_frame(roots, resolve_point(job), tol);
  const auto restricted = restrict_halfspaces(hp, frame, tol);
  const ordered_json meta = meta_json(job, frame);
  if (frame.flat_dim() == 3) {
    Mesh mesh;
    if (restricted) mesh = vertex_enum_3d(*restricted, tol);
    emit_mesh(job, mesh, meta, out);
  } else {
    Polygon2D poly;
    if (restricted) poly = vertex_enum_2d(*restricted, tol);
    emit_polygon(job, poly, meta, out);
  }
}

void run_sweep(const JobSpec& job, std::ostream& out) {
  require_json_format(job);
  const Tolerance tol{job.eps};
  if (job.direction.empty()) throw std::invalid_argument("sweep requires --direction");
  if (static_cast<int>(job.direction.size()) != job.dim)
    throw std::invalid_argument("--direction must have exactly dim coordinates");
  if (job.offsets.empty()) throw std::invalid_argument("sweep requires --offsets");
  const Eigen::VectorXd direction = to_vector(job.direction);
  const PolytopeVertices p = generate_vertices(job.name, job.dim);
  const HalfspacePolytope hp = enumerate_facets_bruteforce(p, tol);

  std::vector<Eigen::VectorXd> roots;
  if (!job.roots.empty() || !job.root_indices.empty()) {
    roots = resolve_roots(job);
    for (const auto& r : roots)
      if (std::abs(r.dot(direction)) > tol.radius(r.norm() * direction.norm()))
        throw std::invalid_argument("sweep: spanning roots must be orthogonal to the direction");
  } else {
    auto basis = nullspace_basis(direction.transpose(), tol);
    if (basis.size() < 3)
      throw std::invalid_argument("sweep requires dim >= 4 for an automatic 3-flat frame");
    roots.assign(basis.begin(), basis.begin() + 3);
  }
  if (roots.size() != 3) throw std::invalid_argument("sweep requires a 3-root frame");
  const SectionFrame frame = build_section_frame(roots, Eigen::VectorXd::Zero(job.dim), tol);
  const auto meshes = sweep_sections(hp, direction, job.offsets, frame, tol);

  ordered_json sections = ordered_json::array();
  for (size_t i = 0; i < meshes.size(); ++i) {
    ordered_json s;
    s["offset"] = job.offsets[i];
    s["empty"] = meshes[i].empty();
    if (!meshes[i].empty()) s["mesh"] = mesh_to_json(meshes[i]);
    sections.push_back(s);
  }
  ordered_json j;
  j["dim"] = job.dim;
  j["direction"] = job.direction;
  j["meta"] = meta_json(job, frame);
  j["sections"] = sections;
  emit_json(job, j, out);
}

void run_tile(const JobSpec& job, std::ostream& out) {
  const Tolerance tol{job.eps};
  const SectionFrame frame = build_section_frame(resolve_roots(job), resolve_point(job), tol);
  const TilingPatch patch = section_tessellation(job.dim, job.radius, frame, tol, job.cell_cap);
  if (job.format == "svg") {
    write_artifact(job, to_svg(patch), out);
    return;
  }
  if (job.format == "off") {
    write_artifact(job, to_off(patch), out);
    return;
  }
  if (job.format == "obj") {
    write_artifact(job, to_obj(patch), out);
    return;
  }
  if (job.format != "json") throw std::invalid_argument("tile supports --format json|svg|off|obj");
  ordered_json j;
  j["dim"] = patch.section_dim;
  j["ambient_dim"] = patch.ambient_dim;
  j["radius"] = patch.radius;
  j["cells"] = patch_to_json(patch)["cells"];
  ordered_json classes = ordered_json::array();
  for (const auto& cls : classify_patch(patch, patch.radius >= 2))
    classes.push_back(ordered_json{{"count", cls.count}, {"representative", cls.representative}});
  j["classes"] = classes;
  j["meta"] = meta_json(job, frame);
  emit_json(job, j, out);
}

}  // namespace

ordered_json job_to_json(const JobSpec& job) {
  ordered_json j;
  j["command"] = job.command;
  j["symbol"] = job.symbol;
  j["name"] = job.name;
  j["roots_mode"] = job.roots_mode;
  j["dim"] = job.dim;
  j["radius"] = job.radius;
  j["cap"] = job.cap;
  j["cell_cap"] = job.cell_cap;
  j["roots"] = job.roots;
  j["root_indices"] = job.root_indices;
  j["point"] = job.point;
  j["direction"] = job.direction;
  j["offsets"] = job.offsets;
  j["two_d"] = job.two_d;
  j["algo"] = job.algo;
  j["format"] = job.format;
  j["output"] = job.output;
  j["eps"] = job.eps;
  return j;
}

JobSpec job_from_json(const ordered_json& j) {
  JobSpec job;
  job.command = j.at("command").get<std::string>();
  job.symbol = j.value("symbol", std::string{});
  job.name = j.value("name", std::string{});
  job.roots_mode = j.value("roots_mode", std::string{});
  job.dim = j.value("dim", 0);
  job.radius = j.value("radius", 1);
  job.cap = j.value("cap", 1000);
  job.cell_cap = j.value("cell_cap", 10000);
  job.roots = j.value("roots", std::vector<std::vector<double>>{});
  job.root_indices = j.value("root_indices", std::vector<int>{});
  job.point = j.value("point", std::vector<double>{});
  job.direction = j.value("direction", std::vector<double>{});
  job.offsets = j.value("offsets", std::vector<double>{});
  job.two_d = j.value("two_d", false);
  job.algo = j.value("algo", std::string{"brute"});
  job.format = j.value("format", std::string{"json"});
  job.output = j.value("output", std::string{});
  job.eps = j.value("eps", 1e-9);
  return job;
}

void run_job(const JobSpec& job, std::ostream& out) {
  if (job.format != "json" && job.format != "off" && job.format != "obj" && job.format != "svg")
    throw std::invalid_argument("unknown format '" + job.format + "'");
  if (job.command == "classify") return run_classify(job, out);
  if (job.command == "enumerate") return run_enumerate(job, out);
  if (job.command == "generate") return run_generate(job, out, false);
  if (job.command == "rectify") return run_generate(job, out, true);
  if (job.command == "facets") return run_facets(job, out);
  if (job.command == "roots") return run_roots(job, out);
  if (job.command == "section") return run_section(job, out);
  if (job.command == "sweep") return run_sweep(job, out);
  if (job.command == "tile") return run_tile(job, out);
  throw std::invalid_argument("unknown command '" + job.command + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"regular polytopes, root systems and hypercube-tessellation cross-sections"};
  app.require_subcommand(1);
  JobSpec job;
  std::string roots_text, indices_text, point_text, direction_text, offsets_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", job.format, "json|off|obj|svg");
    cmd->add_option("--output", job.output, "write the artifact to this path instead of stdout");
    cmd->add_option("--eps", job.eps, "comparison tolerance");
  };
  auto add_frame_options = [&](CLI::App* cmd) {
    cmd->add_option("--roots", roots_text, "spanning roots, e.g. \"-1,-1,0,0;-1,0,-1,0;-1,0,0,0\"");
    cmd->add_option("--root-indices", indices_text, "indices into the canonical `roots bn <dim>` order");
    cmd->add_option("--point", point_text, "translation point, e.g. \"0,0,0,0\"");
  };

  auto* classify = app.add_subcommand("classify", "classify a Schlafli symbol");
  classify->add_option("symbol", job.symbol, "e.g. 4,3,4")->required();
  add_common(classify);
  classify->callback([&] { job.command = "classify"; });

  auto* enumerate = app.add_subcommand("enumerate", "regular symbols of one rank");
  enumerate->add_option("dim", job.dim, "rank, 2..9")->required();
  add_common(enumerate);
  enumerate->callback([&] { job.command = "enumerate"; });

  auto* generate = app.add_subcommand("generate", "vertex coordinates of a regular polytope");
  generate->add_option("name", job.name, "simplex|cube|orthoplex|24-cell|600-cell|120-cell")->required();
  generate->add_option("dim", job.dim)->required();
  add_common(generate);
  generate->callback([&] { job.command = "generate"; });

  auto* rectify_cmd = app.add_subcommand("rectify", "edge-midpoint vertices of a regular polytope");
  rectify_cmd->add_option("name", job.name)->required();
  rectify_cmd->add_option("dim", job.dim)->required();
  add_common(rectify_cmd);
  rectify_cmd->callback([&] { job.command = "rectify"; });

  auto* facets = app.add_subcommand("facets", "facet half-spaces of a regular polytope");
  facets->add_option("name", job.name)->required();
  facets->add_option("dim", job.dim)->required();
  facets->add_option("--algo", job.algo, "brute|pivot");
  add_common(facets);
  facets->callback([&] { job.command = "facets"; });

  auto* roots = app.add_subcommand("roots", "root systems");
  roots->add_option("mode", job.roots_mode, "bn|orbit")->required();
  roots->add_option("arg", job.symbol, "rank for bn, Schlafli symbol for orbit")->required();
  roots->add_option("--cap", job.cap, "orbit size cap");
  add_common(roots);
  roots->callback([&] { job.command = "roots"; });

  auto* section = app.add_subcommand("section", "cross-section of a polytope with a root flat");
  section->add_option("name", job.name)->required();
  section->add_option("dim", job.dim)->required();
  add_frame_options(section);
  section->add_flag("--2d", job.two_d, "restrict to the first two roots and emit a polygon");
  add_common(section);
  section->callback([&] { job.command = "section"; });

  auto* sweep = app.add_subcommand("sweep", "sections along an axis");
  sweep->add_option("name", job.name)->required();
  sweep->add_option("dim", job.dim)->required();
  sweep->add_option("--direction", direction_text, "sweep axis, e.g. \"0.5,0.5,0.5,0.5\"")->required();
  sweep->add_option("--offsets", offsets_text, "comma-separated offsets")->required();
  add_frame_options(sweep);
  add_common(sweep);
  sweep->callback([&] { job.command = "sweep"; });

  auto* tile = app.add_subcommand("tile", "cross-section of the hypercubic tessellation");
  tile->add_option("dim", job.dim)->required();
  tile->add_option("--radius", job.radius, "window radius in cubes");
  tile->add_option("--cell-cap", job.cell_cap, "maximum window size");
  add_frame_options(tile);
  add_common(tile);
  tile->callback([&] { job.command = "tile"; });

  auto* jobcmd = app.add_subcommand("job", "run a JSON job file");
  std::string job_path;
  jobcmd->add_option("file", job_path, "path to a job file")->required();
  jobcmd->callback([&] { job.command = "job"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (job.command == "job") {
      std::ifstream file(job_path);
      if (!file) throw std::invalid_argument("cannot open job file '" + job_path + "'");
      ordered_json parsed = ordered_json::parse(file);
      run_job(job_from_json(parsed), out);
      return 0;
    }
    if (!roots_text.empty()) job.roots = parse_root_list(roots_text);
    if (!indices_text.empty()) {
      for (double x : parse_number_list(indices_text)) job.root_indices.push_back(static_cast<int>(x));
    }
    if (!point_text.empty()) job.point = parse_number_list(point_text);
    if (!direction_text.empty()) job.direction = parse_number_list(direction_text);
    if (!offsets_text.empty()) job.offsets = parse_number_list(offsets_text);
    run_job(job, out);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polysect
