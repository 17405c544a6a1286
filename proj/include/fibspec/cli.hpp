#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibspec/ifs.hpp"
#include "json.hpp"

namespace fibspec::cli {

enum class Command { spectrum, oracle, dim, sum, periodic, ifs, sweep };
enum class OutputFormat { json, csv };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

enum ExitCode : int {
  kSuccess = 0,
  kInvalidArguments = 1,
  kNumericFailure = 2,
  kSizeCapExceeded = 3,
};

struct ScanRequest {
  double a_min = 0.0;
  double a_max = 1.0;
  int grid = 101;
  std::int64_t qmax = 10;
};

struct ResonanceRequest {
  double r1 = 0.5;
  double r2 = 0.5;
  std::int64_t qmax = 1'000'000;
};

struct RunConfig {
  Command command = Command::spectrum;

  std::vector<double> lambdas{1.0};
  int level = 0;
  int k_min = 3;
  double tol = 1e-12;

  // oracle
  std::size_t truncation = 610;
  double omega0 = 0.0;
  int cover_level = 12;
  double dilation = 1e-2;

  // periodic
  double a = 0.0;
  std::optional<ScanRequest> scan;

  // ifs
  std::vector<Similarity> maps;  // empty: middle thirds
  Interval hull{0.0, 1.0};
  int depth_min = 4;
  int depth = 10;
  std::optional<ResonanceRequest> resonance;
  std::optional<std::string> demo;  // "resonant" | "nonresonant"

  // sweep
  Command sweep_of = Command::spectrum;
  std::string sweep_param = "lambda";
  double sweep_from = 1.0;
  double sweep_to = 2.0;
  int sweep_points = 2;

  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty: stdout
  unsigned threads = 1;
  bool timing = false;
  bool emit_sets = false;
};

struct RunOutcome {
  int exit_code = kSuccess;
  std::string document;  // JSON or CSV text, empty on failure
  std::string error;
};

/// Runs one command. Output is a pure function of the config apart from
/// runtime_ms, which is only filled in when `timing` is set.
RunOutcome run(const RunConfig& config);

/// Deterministic JSON text: insertion-ordered keys, doubles at 17
/// significant digits, non-finite numbers as null.
std::string to_json_text(const nlohmann::ordered_json& value);

/// Default worker count: FIBSPEC_THREADS if set, else hardware concurrency.
unsigned default_threads();

/// Parses argv, runs, and writes the document (atomically when a path is
/// given). Returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace fibspec::cli
