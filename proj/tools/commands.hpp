#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gbg::cli {

inline constexpr int schema_version = 1;

enum class Format { json, dot, text };

struct RunConfig {
  std::string command;
  std::string graph_path;
  int n = 0;
  std::vector<std::string> cuts;  // "u:v"
  Format format = Format::text;
  int max_dim = -1;
  std::optional<std::string> out_path;
};

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_invariant = 3;

struct Report {
  std::string body;
  int status = exit_ok;
};

Report cmd_uc(const RunConfig& config);
Report cmd_decompose(const RunConfig& config);
Report cmd_homology(const RunConfig& config);
Report cmd_check(const RunConfig& config);

/// Validates, dispatches and maps exceptions to exit codes. The report goes
/// to `out` (or the --out file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gbg::cli
