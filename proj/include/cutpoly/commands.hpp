#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cutpoly/ehrhart.hpp"
#include "cutpoly/graph.hpp"
#include "cutpoly/report.hpp"

namespace cutpoly {

/// Exit codes of the cutpoly tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitCostGuard = 3,
  kExitVerification = 4,
};

/// A graph chosen on the command line: a named family or an edge-list file.
struct GraphSpec {
  enum class Kind { cycle, path, kbipartite, edge_list };
  Kind kind = Kind::cycle;
  int a = 0;
  int b = 0;
  std::string file;

  Graph build() const;
  std::string describe() const;
};

enum class HstarMethod { semigroup, lp, both };
enum class GbAction { list, verify, fvector, compare };

RunReport cmd_vertices(const GraphSpec& spec);
/// Count sequence for m = 0..max_dilate (default d + 1).
CountSequence cmd_counts(const GraphSpec& spec, CountMethod method, std::optional<int> max_dilate);
/// Throws CostGuardError when max_dilate < d, naming the required count.
RunReport cmd_hstar(const GraphSpec& spec, HstarMethod method, std::optional<int> max_dilate);
RunReport cmd_hstar_from_counts(const CountSequence& cs, const std::string& source);
RunReport cmd_closed_form(int n);
RunReport cmd_gb(int n, GbAction action);

/// Parses argv-style arguments (without the program name), runs the command
/// and writes its output. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutpoly
