#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace polysect {

/// Everything a run needs, parseable from argv or from a JSON job file.
/// The textual form round-trips losslessly.
struct JobSpec {
  std::string command;
  std::string symbol;      // classify, roots orbit
  std::string name;        // polytope name
  std::string roots_mode;  // roots: "bn" | "orbit"
  int dim = 0;
  int radius = 1;
  int cap = 1000;       // orbit closure cap
  int cell_cap = 10000; // tiling window cap
  std::vector<std::vector<double>> roots;
  std::vector<int> root_indices;  // into the canonical `roots bn <dim>` order
  std::vector<double> point;
  std::vector<double> direction;
  std::vector<double> offsets;
  bool two_d = false;
  std::string algo = "brute";  // facets: brute | pivot
  std::string format = "json"; // json | off | obj | svg
  std::string output;          // file path; empty writes to stdout
  double eps = 1e-9;
};

nlohmann::ordered_json job_to_json(const JobSpec& job);
JobSpec job_from_json(const nlohmann::ordered_json& j);

/// Runs a parsed job and writes its artifact. Throws on domain errors.
void run_job(const JobSpec& job, std::ostream& out);

/// Full CLI: parses argv, runs, maps failures to exit codes
/// (0 success, 1 usage error, 2 domain error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysect
