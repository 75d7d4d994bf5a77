#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace qgrass::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitPrecondition = 4,
  kExitCap = 5,
  kExitIo = 6,
  kExitInternal = 7,
};

const std::vector<std::string>& command_names();

struct Options {
  std::string command;
  std::string input;  // instance file, or representation file for hom/ext/filtcheck/semicont

  std::optional<std::string> field;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
  std::optional<std::size_t> trials;
  std::optional<std::string> pred;  // "perp:W" or "perp:<file>#<name>"
  std::optional<std::string> dims;  // "0,1,1"
  std::optional<std::string> out;
  bool timing = false;
  bool projective = false;

  // Representation-file commands.
  std::string from, to;             // hom, ext
  std::string target;               // filtcheck
  std::vector<std::string> layers;  // filtcheck
  std::string base, direction, probe, slot = "second";  // semicont
  std::vector<long> samples;
};

// Runs one command. Never throws: library errors become an error record and
// the matching exit code.
Report run(const Options& options);

// Full command line handling: argument parsing, run, writing the report to
// `out` (or --out). Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgrass::cli
