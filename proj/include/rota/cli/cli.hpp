#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rota::cli {

enum ExitCode : int {
  kExitSuccess = 0,     // success / predicate true
  kExitFalse = 1,       // predicate false or search not found
  kExitUsage = 2,
  kExitValidation = 3,
  kExitResource = 4,
};

struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> operations;  // library operations the command exposes
};

/// Every subcommand with the library operations it exposes.
const std::vector<CommandInfo>& command_table();

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rota::cli
