#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warp/io.hpp"

namespace warp {

// Outcome of one command. Serialized deterministically; wall time only when
// asked for, so that reports of identical runs are identical bytes.
struct RunReport {
  std::string command;
  std::string kind;    // kind of the input file, when known
  std::string digest;  // fnv1a64 of the input bytes
  std::string verdict; // valid | invalid | malformed | refused
  std::vector<std::string> errors;
  std::vector<Violation> witnesses;
  std::size_t violation_count = 0;
  Json counts;     // null unless the command counts something
  Json instances;  // null unless --emit
  std::optional<double> wall_ms;

  int exit_code() const;
  Json to_json() const;
  std::string pretty() const;
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs the command line (without the program name).
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace warp
