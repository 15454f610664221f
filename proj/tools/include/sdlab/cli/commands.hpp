#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "sdlab/io/reports.hpp"

namespace sdlab::cli {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

/// Where a report goes: a file, or stdout when the path is empty or "-".
struct Output {
  std::string path;
  std::ostream* diagnostics = nullptr;  // error messages; std::cerr when null
};

struct RelationsOptions {
  int max_n = 4;
  bool corrupt_centers = false;
};

struct HomotopyOptions {
  int max_s = 3;
  std::optional<shell::SignConvention> convention;  // nullopt means search
  std::uint64_t seed = 0;
  std::uint32_t specialize_p = 11;
  int specialize_degree = 3;
};

struct DegreesOptions {
  int n = 2;
  int N = 3;
  int m = 2;
  std::uint64_t seed = 0;
  bool inject_fault = false;
};

/// Each command builds its report, writes it, and returns the exit code.
/// The report builders are exposed for tests.
io::Json relations_report(const RelationsOptions& opts);
io::Json homotopy_report(const HomotopyOptions& opts);
io::Json shell_report(int n);
io::Json degrees_report(const DegreesOptions& opts);

int run_relations(const RelationsOptions& opts, const Output& out);
int run_homotopy(const HomotopyOptions& opts, const Output& out);
int run_shell(int n, const Output& out);
int run_census(const std::string& config_path, const Output& out);
int run_degrees(const DegreesOptions& opts, const Output& out);

/// "+1,-1" style convention text.
shell::SignConvention parse_convention(const std::string& text);

}  // namespace sdlab::cli
