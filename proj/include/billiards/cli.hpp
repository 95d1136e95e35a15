#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace billiards {

// Parsed command line for one invocation. The polygon is resolved from
// the first of --polygon, --chart, --k (regular) that is present.
struct RunConfig {
  std::string command;  // validate | trace | avg-length | minimize |
                        // filling | euclid | render
  int k = 0;
  std::vector<int> seq;
  std::string polygon_file;
  std::vector<double> chart;
  std::uint64_t seed = 0;
  std::optional<double> tol_f;
  std::optional<double> tol_x;
  std::optional<double> fd_step;
  int n = 1;  // euclid homotopy class
  int m = 1;
  std::string out_path;       // empty writes to `out`
  std::string format = "json";  // json | svg
};

// Executes the command, writing the document to `out` (or cfg.out_path)
// and diagnostics to `err`. Returns the process exit status:
//   0  success
//   1  numeric failure
//   2  validation failure, the violated rule named on `err`
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace billiards
