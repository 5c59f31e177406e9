#pragma once

// The CLI commands as functions returning a report, so tests can drive them
// without a process boundary. Reports follow docs/report.schema.json.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "discarr_tools/io.hpp"

namespace discarr::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitOther = 1,
  kExitParse = 2,
  kExitNotGeneric = 3,
  kExitClosure = 4,
  kExitTableMismatch = 5,
  kExitInconsistent = 6,
};

struct CommandResult {
  json report;
  std::string text;  // aligned, human-readable rendering
  int exit_code = kExitOk;
};

CommandResult cmd_detect(const std::string& source, std::optional<int> k);
CommandResult cmd_classify(const std::string& source);
CommandResult cmd_lattice(const std::string& source, std::optional<int> max_rank, std::uint64_t seed);
/// mformula, classification, dodecahedral.
CommandResult cmd_table(const std::string& name, std::uint64_t seed);
CommandResult cmd_gallery_list();
CommandResult cmd_gallery_show(const std::string& name);
CommandResult cmd_reference(int n, int k, std::uint64_t seed);

/// Maps library exceptions to exit codes and writes the error to `err`.
int exit_code_for(const std::exception& e);

/// The whole CLI; main() forwards here.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace discarr::tools
