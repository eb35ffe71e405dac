#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tracesign/matrix.hpp"

namespace tracesign::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification found a counterexample
inline constexpr int kExitUsage = 2;    // bad flags, precondition, overflow

/// Environment variable consulted for the default --jobs.
inline constexpr const char* kJobsEnv = "TRACESIGN_JOBS";

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::optional<int> k;
  int depth = 8;
  std::optional<std::string> sigma;
  std::optional<IntMatrix2> matrix;
  Format format = Format::Json;
  int jobs = 0;
  std::uint64_t seed = 0;
  std::string output;  // empty: standard output
  bool unsafe_large = false;
};

/// Parses argv-style arguments (without the program name), runs the
/// subcommand, and returns the exit code. Machine output goes to `out` (or
/// the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracesign::cli
