#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace ghostchar {

enum class Command { Diagram, F2, Solve, Ghosts, Cover, Repcheck, Phihat };

std::optional<Command> parse_command(const std::string& name);
const char* to_string(Command c);

struct RunConfig {
  Command command = Command::Ghosts;
  std::string braid;
  bool json = false;
  double tolerance = 1e-9;          // residual and snapping tolerance for representations
  double zero_tolerance = 1e-20;    // numeric zero test when classifying non-quadratic points
  bool symmetry = true;
  bool all_rectangles = false;
  unsigned precision = 256;
  std::optional<std::size_t> dropped_relator;
  std::string rep_path;             // JSON representation file for repcheck
  std::string builtin_rep;          // ghost[:r], ghost-printed[:r], diagonal:k, beta:r
  int phihat_arcs = 0;              // 0: strand count
};

enum ExitCode { Success = 0, UsageError = 1, Anomaly = 2 };

struct RunResult {
  int status = Success;
  nlohmann::json report;
};

// Executes the command; never throws for bad input, which maps to UsageError.
RunResult execute(const RunConfig& config);

// Writes the report (JSON or text) to `out` and returns the exit status.
int run(const RunConfig& config, std::ostream& out);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

}  // namespace ghostchar
