#pragma once

// Batch front-end: one command on one presentation, text or JSON report.

#include "toupie/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toupie {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInput = 2,
  kExitRefused = 3,
  kExitBound = 4,
};

struct JobSpec {
  std::string command;
  std::string input;  // path; empty with a seed draws a random presentation
  std::size_t degree = 5;
  std::size_t arity = 5;
  std::string format = "text";
  std::optional<std::string> golden;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;  // bare presentation for yoneda, gr, double-dual
};

/// What a command produced. `result` is the JSON payload, `lines` the text
/// rendering, `diff` the violations (empty when everything holds).
struct Report {
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> lines;
  std::vector<std::string> diff;
  std::optional<Presentation> presentation;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

const std::vector<std::string>& command_names();

/// Dispatch without I/O beyond reading the input and golden files.
Report run_command(const JobSpec& job, const Presentation& p);

RunResult run(const JobSpec& job);

/// Flag parsing with TOUPIE_* environment overrides, then run().
int cli_main(int argc, char** argv);

}  // namespace toupie
